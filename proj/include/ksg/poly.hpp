#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ksg/field.hpp"
#include "ksg/rng.hpp"

namespace ksg {

// Dense polynomial over F_q, coefficients low to high, no trailing zeros.
class Poly {
 public:
  using Elem = FiniteField::Elem;

  Poly() = default;
  Poly(FieldPtr f, std::vector<Elem> coeffs);
  static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
  static Poly constant(FieldPtr f, Elem c) { return Poly(std::move(f), {c}); }
  static Poly x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;
  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator<(const Poly& a, const Poly& b);  // by degree, then coefficients from the top

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

struct Bezout {
  Poly g, s, t;  // s a + t b = g, g monic
};
Bezout xgcd(const Poly& a, const Poly& b);

struct PolyFactor {
  Poly factor;  // monic irreducible
  int multiplicity;
};
// Monic irreducible factors with multiplicity, sorted by (degree, coefficients).
std::vector<PolyFactor> factor(const Poly& f, Rng& rng);
std::vector<PolyFactor> factor(const Poly& f);
bool is_irreducible(const Poly& f);

}  // namespace ksg
