#pragma once

#include <cstdint>
#include <random>

namespace ksg {

// Seeded stream with a platform-independent reduction (std distributions are
// implementation defined, which would break bit-for-bit reproducibility).
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20240611;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ksg
