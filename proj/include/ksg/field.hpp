#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ksg {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// F_{p^r}. An element is the integer whose base-p digits are its coefficients
// in F_p[x]/(modulus), so 0..p-1 are the prime subfield.
class FiniteField {
 public:
  using Elem = std::uint16_t;
  static constexpr std::uint64_t kMaxOrder = 1024;

  // Instances are shared; the same (p, r) always yields the same object.
  static FieldPtr make(std::uint64_t p, unsigned r = 1);

  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::size_t q() const { return q_; }
  bool is_prime_field() const { return r_ == 1; }
  // Coefficients low to high, monic, degree r.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;
  Elem primitive_element() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const {
    return r_ == 1 ? static_cast<Elem>((a + b) % p_) : add_[a * q_ + b];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;  // throws on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;

  // Row of the multiplication table, for fast scaling of vectors.
  const Elem* mul_row(Elem c) const { return &mul_[c * q_]; }
  const Elem* add_row(Elem a) const { return &add_[a * q_]; }

 private:
  FiniteField(std::uint64_t p, unsigned r);

  std::uint64_t p_;
  unsigned r_;
  std::size_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_, exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace ksg
