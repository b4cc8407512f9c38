#pragma once

#include <stdexcept>
#include <string>

namespace ksg {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed input: bad group spec, non-prime p, non-homomorphic action, ...
class SpecError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "malformed-spec"; }
};

// The input is well formed but too large for desk-scale mode.
class CapExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "cap-exceeded"; }
};

// A theorem's hypotheses fail for this input, so the operation refuses.
class HypothesisError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "hypothesis-refused"; }
};

// Two independent computations disagree. Never an answer, always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal-consistency"; }
};

// Randomised search (MeatAxe splitting, idempotent splitting) gave up.
class RetryExhausted : public InternalError {
 public:
  using InternalError::InternalError;
  const char* kind() const noexcept override { return "retry-exhausted"; }
};

#define KSG_ENSURE(cond, msg)                                   \
  do {                                                          \
    if (!(cond)) throw ::ksg::InternalError(std::string(msg));  \
  } while (0)

}  // namespace ksg
