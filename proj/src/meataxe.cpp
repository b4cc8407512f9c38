#include "ksg/meataxe.hpp"

#include <algorithm>

#include "ksg/error.hpp"

namespace ksg {

using Elem = FiniteField::Elem;

namespace {

FqMatrix random_combination(const std::vector<FqMatrix>& pool, std::size_t take, Rng& rng) {
  const auto& F = pool.front().field();
  const std::size_t n = pool.front().rows();
  FqMatrix out(F, n, n);
  const std::size_t start = pool.size() > take ? pool.size() - take : 0;
  for (std::size_t i = start; i < pool.size(); ++i) {
    Elem c = static_cast<Elem>(rng.below(F->q()));
    if (!c) continue;
    out = out + pool[i].scaled(c);
  }
  return out;
}

}  // namespace

std::optional<EchelonSpace> find_submodule(const GModule& m, Rng& rng) {
  const std::size_t n = m.dim;
  if (n <= 1) return std::nullopt;
  const FieldPtr& F = m.field;
  if (m.action.empty()) {
    // Trivial group: any line is a submodule.
    EchelonSpace w(F, n);
    std::vector<Elem> e(n, 0);
    e[0] = 1;
    w.add(e.data());
    return w;
  }
  std::vector<FqMatrix> pool = m.action;
  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::size_t a = rng.below(pool.size()), b = rng.below(pool.size());
    pool.push_back(pool[a] * pool[b]);
    if (pool.size() > 24) pool.erase(pool.begin() + static_cast<long>(m.action.size()));
    FqMatrix theta = random_combination(pool, 6, rng);
    auto factors = factor(theta.char_poly(), rng);
    std::sort(factors.begin(), factors.end(),
              [](const PolyFactor& x, const PolyFactor& y) { return x.factor < y.factor; });
    int tried = 0;
    for (const auto& pf : factors) {
      if (tried++ == 2) break;
      FqMatrix nf = evaluate(pf.factor, theta);
      FqMatrix kernel = nf.left_nullspace();
      if (kernel.rows() == 0) throw InternalError("factor of the characteristic polynomial with trivial kernel");
      EchelonSpace w = spin(m, kernel.rows_range(0, 1));
      if (w.dim() < n) return w;
      FqMatrix right = nf.nullspace();
      EchelonSpace wt = spin_transposed(m, right.rows_range(0, 1));
      if (wt.dim() < n) {
        FqMatrix ann = wt.basis().nullspace();
        EchelonSpace u(F, n);
        for (std::size_t i = 0; i < ann.rows(); ++i) u.add(ann.row(i));
        return u;
      }
      if (kernel.rows() == static_cast<std::size_t>(pf.factor.degree())) return std::nullopt;
    }
  }
  throw RetryExhausted("MeatAxe could not split or certify a module of dimension " + std::to_string(n));
}

bool is_irreducible(const GModule& m, Rng& rng) { return m.dim > 0 && !find_submodule(m, rng); }

std::vector<GModule> composition_factors(const GModule& m, Rng& rng) {
  std::vector<GModule> out;
  std::vector<GModule> stack{m};
  while (!stack.empty()) {
    GModule cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim == 0) continue;
    auto w = find_submodule(cur, rng);
    if (!w) {
      out.push_back(std::move(cur));
      continue;
    }
    // push quotient first so the submodule is handled first
    stack.push_back(quotient_module(cur, *w));
    stack.push_back(submodule(cur, *w));
  }
  return out;
}

std::vector<CompositionFactor> chop(const GModule& m, Rng& rng) {
  std::vector<CompositionFactor> classes;
  std::vector<std::vector<std::vector<Elem>>> prints;
  for (auto& s : composition_factors(m, rng)) {
    auto fp = fingerprint(s);
    bool found = false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].module.dim != s.dim || prints[c] != fp) continue;
      if (is_isomorphic(classes[c].module, s, rng)) {
        ++classes[c].multiplicity;
        found = true;
        break;
      }
    }
    if (!found) {
      classes.push_back({std::move(s), 1});
      prints.push_back(std::move(fp));
    }
  }
  std::size_t total = 0;
  for (const auto& c : classes) total += c.multiplicity * c.module.dim;
  KSG_ENSURE(total == m.dim, "composition factor dimensions do not add up");
  return classes;
}

std::vector<FqMatrix> hom_space(const GModule& a, const GModule& b) {
  if (a.group != b.group || a.field != b.field) throw InternalError("Hom between modules over different groups");
  const FieldPtr& F = a.field;
  const FiniteField& f = *F;
  const std::size_t na = a.dim, nb = b.dim, ngen = a.action.size();
  if (na == 0 || nb == 0) return {};

  // Spinning basis of a: raw vectors, the seed each hangs from, and the
  // matrix W_k with phi(b_k) = X_seed W_k.
  EchelonSpace span(F, na);
  std::vector<std::vector<Elem>> raw;
  std::vector<std::size_t> seed_of;
  std::vector<FqMatrix> w;
  std::vector<std::pair<std::size_t, std::size_t>> constraints;  // (basis index, generator)
  std::size_t seeds = 0;
  std::vector<Elem> e(na, 0);
  for (std::size_t i = 0; i < na && span.dim() < na; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    if (!span.add(e.data())) continue;
    std::size_t head = raw.size();
    raw.push_back(e);
    seed_of.push_back(seeds);
    w.push_back(FqMatrix::identity(F, nb));
    for (; head < raw.size(); ++head)
      for (std::size_t g = 0; g < ngen; ++g) {
        auto u = a.action[g].left_apply(raw[head].data());
        if (span.add(u.data())) {
          raw.push_back(std::move(u));
          seed_of.push_back(seed_of[head]);
          w.push_back(w[head] * b.action[g]);
        } else {
          constraints.emplace_back(head, g);
        }
      }
    ++seeds;
  }
  // Constraints added before later seeds existed are still valid: the final
  // basis spans a, so every image has coordinates in it.
  FqMatrix p(F, 0, na);
  for (const auto& v : raw) p.append_row(v.data());
  FqMatrix pinv = *p.inverse();

  FqMatrix big(F, seeds * nb, constraints.size() * nb);
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    auto [k, g] = constraints[r];
    auto u = a.action[g].left_apply(raw[k].data());
    auto c = pinv.left_apply(u.data());
    for (std::size_t l = 0; l < na; ++l) {
      if (!c[l]) continue;
      const std::size_t s = seed_of[l];
      for (std::size_t i = 0; i < nb; ++i)
        axpy(f, big.row(s * nb + i) + r * nb, c[l], w[l].row(i), nb);
    }
    FqMatrix wb = w[k] * b.action[g];
    const std::size_t s = seed_of[k];
    for (std::size_t i = 0; i < nb; ++i)
      axpy(f, big.row(s * nb + i) + r * nb, f.neg(1), wb.row(i), nb);
  }
  FqMatrix sol = constraints.empty() ? FqMatrix::identity(F, seeds * nb) : big.left_nullspace();

  std::vector<FqMatrix> out;
  for (std::size_t t = 0; t < sol.rows(); ++t) {
    FqMatrix phi_b(F, na, nb);
    for (std::size_t k = 0; k < na; ++k) {
      const Elem* x = sol.row(t) + seed_of[k] * nb;
      auto img = w[k].left_apply(x);
      std::copy(img.begin(), img.end(), phi_b.row(k));
    }
    FqMatrix phi = pinv * phi_b;
    for (std::size_t g = 0; g < ngen; ++g)
      KSG_ENSURE(a.action[g] * phi == phi * b.action[g], "computed homomorphism does not intertwine");
    out.push_back(std::move(phi));
  }
  return out;
}

std::optional<FqMatrix> is_isomorphic(const GModule& a, const GModule& b, Rng& rng) {
  if (a.group != b.group || a.field != b.field) throw InternalError("comparing modules over different groups");
  if (a.dim != b.dim) return std::nullopt;
  if (a.dim == 0) return FqMatrix(a.field, 0, 0);
  auto homs = hom_space(a, b);
  if (homs.empty()) return std::nullopt;
  const auto& F = *a.field;
  for (int attempt = 0; attempt < 64; ++attempt) {
    FqMatrix t = attempt == 0 ? homs[0] : FqMatrix(a.field, a.dim, a.dim);
    if (attempt > 0)
      for (const auto& h : homs) t = t + h.scaled(static_cast<Elem>(rng.below(F.q())));
    if (t.rank() == a.dim) return t;
  }
  return std::nullopt;
}

std::size_t endo_degree(const GModule& s) { return hom_space(s, s).size(); }

std::vector<std::vector<Elem>> fingerprint(const GModule& m) {
  std::vector<std::vector<Elem>> out;
  if (m.dim == 0 || m.action.empty()) return out;
  // Fixed stream, independent of any user seed.
  Rng words(0x5eed);
  std::vector<FqMatrix> pool = m.action;
  for (int t = 0; t < 6; ++t) {
    const std::size_t a = words.below(pool.size()), b = words.below(pool.size());
    pool.push_back(pool[a] * pool[b]);
    FqMatrix theta(m.field, m.dim, m.dim);
    for (const auto& x : pool) theta = theta + x.scaled(m.field->from_int(static_cast<std::int64_t>(words.below(m.field->p()))));
    out.push_back(theta.char_poly().coeffs());
  }
  return out;
}

}  // namespace ksg
