#include "ksg/poly.hpp"

#include <algorithm>

#include "ksg/error.hpp"

namespace ksg {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Elem li = field_->inv(lead());
  std::vector<Elem> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(c_[i], li);
  return Poly(field_, std::move(c));
}

Poly Poly::derivative() const {
  std::vector<Elem> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i))));
  return Poly(field_, std::move(c));
}

Poly::Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!s.empty()) s += " + ";
    if (c_[i] != 1 || i == 0) s += std::to_string(c_[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& F = a.field_ ? a.field_ : b.field_;
  std::vector<Poly::Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F->add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const auto& F = a.field_ ? a.field_ : b.field_;
  std::vector<Poly::Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F->sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const auto& F = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return Poly::zero(F);
  std::vector<Poly::Elem> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    const auto* row = F->mul_row(a.c_[i]);
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = F->add(c[i + j], row[b.c_[j]]);
  }
  return Poly(F, std::move(c));
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  const auto& F = b.field();
  std::vector<Poly::Elem> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly::zero(F), a};
  std::vector<Poly::Elem> q(a.degree() - db + 1, 0);
  const Poly::Elem li = F->inv(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    Poly::Elem c = r[k];
    if (!c) continue;
    Poly::Elem t = F->mul(c, li);
    q[k - db] = t;
    const auto* row = F->mul_row(F->neg(t));
    for (int i = 0; i <= db; ++i) r[k - db + i] = F->add(r[k - db + i], row[b.coeffs()[i]]);
  }
  r.resize(db);
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout xgcd(const Poly& a, const Poly& b) {
  const auto& F = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1 = Poly::zero(F);
  Poly t0 = Poly::zero(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto c = Poly::constant(F, F->inv(r0.lead()));
  return {r0 * c, s0 * c, t0 * c};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(m.field(), 1) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

namespace {

// x^(q^k) mod m, by repeated q-th powering.
Poly frobenius_power(const Poly& x_mod, std::size_t q, const Poly& m, std::size_t k) {
  Poly r = x_mod;
  for (std::size_t i = 0; i < k; ++i) r = powmod(r, q, m);
  return r;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const auto& F = f.field();
  const std::uint64_t p = F->p();
  // a^(1/p) = a^(q/p) in F_q.
  const std::uint64_t e = F->q() / p;
  std::vector<Poly::Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(F->pow(f.coeffs()[i], e));
  return Poly(F, std::move(c));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(f.field()->p()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = divmod(w, y).first;
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<int>(f.field()->p()), out);
}

void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto& F = f.field();
  const std::size_t q = F->q();
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Poly::Elem> c(f.degree());
    for (auto& x : c) x = static_cast<Poly::Elem>(rng.below(q));
    Poly a(F, c);
    if (a.degree() <= 0) continue;
    Poly b;
    if (F->p() == 2) {
      // absolute trace map: a + a^2 + ... + a^(2^(r d - 1))
      Poly t = a, acc = a;
      for (unsigned j = 1; j < F->r() * static_cast<unsigned>(d); ++j) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      std::uint64_t e = 1;
      for (int j = 0; j < d; ++j) e *= q;
      b = powmod(a, (e - 1) / 2, f) - Poly::constant(F, 1);
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
  throw RetryExhausted("equal-degree splitting gave up on degree " + std::to_string(f.degree()));
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f, Rng& rng) {
  if (f.is_zero()) throw InternalError("cannot factor the zero polynomial");
  const auto& F = f.field();
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::vector<PolyFactor> out;
  for (auto& [g, mult] : sqf) {
    Poly rest = g;
    Poly xm = Poly::x(F) % rest;
    Poly h = xm;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
      h = frobenius_power(h, F->q(), rest, 1);
      Poly common = gcd(rest, h - (Poly::x(F) % rest));
      if (common.degree() > 0) {
        std::vector<Poly> parts;
        equal_degree(common, d, rng, parts);
        for (auto& pp : parts) out.push_back({pp, mult});
        rest = divmod(rest, common).first;
        h = h % rest;
      }
    }
    if (rest.degree() > 0) out.push_back({rest.monic(), mult});
  }
  // merge equal factors coming from different squarefree layers
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor) merged.back().multiplicity += pf.multiplicity;
    else merged.push_back(pf);
  }
  return merged;
}

std::vector<PolyFactor> factor(const Poly& f) {
  Rng rng;
  return factor(f, rng);
}

bool is_irreducible(const Poly& f) {
  // Rabin's test, independent of factor().
  if (f.degree() <= 0) return false;
  const auto& F = f.field();
  const Poly m = f.monic();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  const Poly xm = Poly::x(F) % m;
  if (!(frobenius_power(xm, F->q(), m, n) == xm)) return false;
  for (std::size_t l = 2; l <= n; ++l) {
    if (n % l) continue;
    bool prime = true;
    for (std::size_t d = 2; d * d <= l; ++d) prime = prime && l % d;
    if (!prime) continue;
    Poly h = frobenius_power(xm, F->q(), m, n / l);
    if (gcd(m, h - xm).degree() > 0) return false;
  }
  return true;
}

}  // namespace ksg
