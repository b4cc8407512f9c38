#include "ksg/field.hpp"

#include <map>
#include <mutex>

#include "ksg/error.hpp"
#include "ksg/numtheory.hpp"

namespace ksg {

namespace {

using Coeffs = std::vector<std::uint32_t>;

Coeffs digits(std::uint64_t v, std::uint64_t p, unsigned r) {
  Coeffs c(r);
  for (unsigned i = 0; i < r; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return c;
}

std::uint64_t undigits(const Coeffs& c, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

// Product of a and b reduced by the monic modulus m (degree r).
Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  const std::size_t r = m.size() - 1;
  std::vector<std::uint64_t> prod(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * r; d-- > r;) {
    std::uint64_t c = prod[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= r; ++i) prod[d - r + i] = (prod[d - r + i] + (p - c) * m[i]) % p;
  }
  Coeffs out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

// Monic f over F_p of degree r has no factor of degree <= r/2: test by trial
// division against every monic polynomial of degree 1..r/2.
bool irreducible_over_prime(const Coeffs& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= r; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t v = 0; v < count; ++v) {
      Coeffs g = digits(v, p, static_cast<unsigned>(d));
      g.push_back(1);
      std::vector<std::uint64_t> rem(f.begin(), f.end());
      for (std::size_t k = r + 1; k-- > d;) {
        std::uint64_t c = rem[k];
        if (!c) continue;
        for (std::size_t i = 0; i <= d; ++i) rem[k - d + i] = (rem[k - d + i] + (p - c) * g[i]) % p;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero = zero && rem[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr FiniteField::make(std::uint64_t p, unsigned r) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  if (!is_prime(p)) throw SpecError("field characteristic must be prime, got " + std::to_string(p));
  if (r == 0) throw SpecError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) throw CapExceeded("field order above " + std::to_string(kMaxOrder));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, r}];
  if (!slot) slot = FieldPtr(new FiniteField(p, r));
  return slot;
}

FiniteField::FiniteField(std::uint64_t p, unsigned r) : p_(p), r_(r), q_(ipow(p, r)) {
  // Least monic irreducible, comparing coefficients from the top down.
  if (r == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t v = 0;; ++v) {
      Coeffs f = digits(v, p, r);
      f.push_back(1);
      if (f[0] != 0 && irreducible_over_prime(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  neg_.resize(q_);
  for (std::size_t a = 0; a < q_; ++a) {
    Coeffs c = digits(a, p, r);
    for (auto& x : c) x = static_cast<std::uint32_t>((p - x) % p);
    neg_[a] = static_cast<Elem>(undigits(c, p));
  }
  add_.resize(q_ * q_);
  for (std::size_t a = 0; a < q_; ++a) {
    Coeffs ca = digits(a, p, r);
    for (std::size_t b = 0; b < q_; ++b) {
      Coeffs cb = digits(b, p, r);
      for (unsigned i = 0; i < r; ++i) cb[i] = static_cast<std::uint32_t>((ca[i] + cb[i]) % p);
      add_[a * q_ + b] = static_cast<Elem>(undigits(cb, p));
    }
  }

  // Primitive element by order computation, then exp/log tables.
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  for (std::uint64_t g = 1; g < q_; ++g) {
    Coeffs cg = digits(g, p, r);
    std::vector<Elem> powers{1};
    Coeffs cur = digits(1, p, r);
    for (std::size_t k = 1; k < q_ - 1; ++k) {
      cur = mulmod(cur, cg, modulus_, p);
      if (undigits(cur, p) == 1) break;
      powers.push_back(static_cast<Elem>(undigits(cur, p)));
    }
    if (powers.size() != q_ - 1) continue;
    for (std::size_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = powers[k];
      log_[powers[k]] = static_cast<std::uint32_t>(k);
    }
    exp_[q_ - 1] = 1;
    break;
  }
  KSG_ENSURE(q_ == 2 || exp_[1] != 0, "no primitive element found");
  if (q_ == 2) exp_[0] = exp_[1] = 1;

  mul_.assign(q_ * q_, 0);
  for (std::size_t a = 1; a < q_; ++a)
    for (std::size_t b = 1; b < q_; ++b) mul_[a * q_ + b] = exp_[(log_[a] + log_[b]) % (q_ - 1)];
  inv_.assign(q_, 0);
  for (std::size_t a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InternalError("inverse of zero in F_" + std::to_string(q_));
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(m);
}

std::string FiniteField::modulus_string() const {
  std::string s;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (!modulus_[i]) continue;
    if (!s.empty()) s += "+";
    if (modulus_[i] != 1 || i == 0) s += std::to_string(modulus_[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace ksg
