#include "ksg/cartan.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ksg/cache.hpp"
#include "ksg/error.hpp"
#include "ksg/isolation.hpp"

namespace ksg {

using Elem = FiniteField::Elem;

GroupAlgebraElement algebra_multiply(const FiniteField& f, const FiniteGroup& g, const GroupAlgebraElement& a,
                                     const GroupAlgebraElement& b) {
  const std::size_t n = g.order();
  GroupAlgebraElement out(n, 0);
  std::vector<std::size_t> nzb;
  for (std::size_t y = 0; y < n; ++y)
    if (b[y]) nzb.push_back(y);
  if (f.is_prime_field()) {
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (!a[x]) continue;
      const std::uint64_t ax = a[x];
      for (std::size_t y : nzb) acc[g.mul(x, y)] += ax * b[y];
    }
    for (std::size_t z = 0; z < n; ++z) out[z] = static_cast<Elem>(acc[z] % f.p());
    return out;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    const Elem* row = f.mul_row(a[x]);
    for (std::size_t y : nzb) {
      Elem& o = out[g.mul(x, y)];
      o = f.add(o, row[b[y]]);
    }
  }
  return out;
}

namespace {

bool is_trivial_module(const GModule& m) {
  if (m.dim != 1) return false;
  for (const auto& a : m.action)
    if (a.at(0, 0) != 1) return false;
  return true;
}

GroupAlgebraElement algebra_add(const FiniteField& f, const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                bool subtract = false) {
  GroupAlgebraElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = subtract ? f.sub(a[i], b[i]) : f.add(a[i], b[i]);
  return out;
}

GroupAlgebraElement algebra_power(const FiniteField& f, const FiniteGroup& g, GroupAlgebraElement base,
                                  std::uint64_t e) {
  GroupAlgebraElement result(g.order(), 0);
  result[0] = 1;
  while (e) {
    if (e & 1) result = algebra_multiply(f, g, result, base);
    e >>= 1;
    if (e) base = algebra_multiply(f, g, base, base);
  }
  return result;
}

// p(x) in the corner algebra with identity e.
FqMatrix evaluate_in_corner(const Poly& p, const FqMatrix& x, const FqMatrix& e) {
  FqMatrix acc(x.field(), x.rows(), x.cols());
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + e.scaled(p.coeff(static_cast<std::size_t>(k)));
  return acc;
}

// Primitive idempotents of the image of kG in End(S), split off by CRT
// idempotents of minimal polynomials of random corner elements.
std::vector<FqMatrix> block_idempotents(const std::vector<FqMatrix>& mats, std::size_t d, const FieldPtr& F,
                                        Rng& rng) {
  const std::size_t n = mats.front().rows();
  std::vector<FqMatrix> todo{FqMatrix::identity(F, n)}, done;
  while (!todo.empty()) {
    FqMatrix e = std::move(todo.back());
    todo.pop_back();
    EchelonSpace v(F, n);
    for (std::size_t i = 0; i < n; ++i) v.add(e.row(i));
    const std::size_t r = v.dim();
    if (r == d) {
      done.push_back(std::move(e));
      continue;
    }
    KSG_ENSURE(r > d && r % d == 0, "idempotent rank is not a multiple of the endomorphism degree");
    bool split = false;
    for (int attempt = 0; attempt < 200 && !split; ++attempt) {
      FqMatrix y(F, n, n);
      const std::size_t terms = std::min<std::size_t>(mats.size(), 2 * n + 4);
      for (std::size_t t = 0; t < terms; ++t)
        y = y + mats[rng.below(mats.size())].scaled(static_cast<Elem>(rng.below(F->q())));
      FqMatrix x = e * y * e;
      FqMatrix xv(F, r, r);
      for (std::size_t i = 0; i < r; ++i) {
        auto img = x.left_apply(v.basis().row(i));
        auto c = v.coordinates(img.data());
        KSG_ENSURE(c.has_value(), "corner element leaves the corner");
        std::copy(c->begin(), c->end(), xv.row(i));
      }
      Poly mp = xv.min_poly();
      auto fs = factor(mp, rng);
      if (fs.size() < 2) continue;
      Poly f1 = Poly::constant(F, 1);
      for (int k = 0; k < fs[0].multiplicity; ++k) f1 = f1 * fs[0].factor;
      Poly rest = divmod(mp, f1).first;
      Bezout bz = xgcd(f1, rest);
      KSG_ENSURE(bz.g.degree() == 0, "CRT factors are not coprime");
      FqMatrix eps = evaluate_in_corner(bz.t * rest, x, e);
      KSG_ENSURE(eps * eps == eps, "CRT element is not idempotent");
      FqMatrix other = e - eps;
      if (eps.is_zero() || other.is_zero()) continue;
      todo.push_back(std::move(other));
      todo.push_back(std::move(eps));
      split = true;
    }
    if (!split) throw RetryExhausted("could not split an idempotent of rank " + std::to_string(r));
  }
  return done;
}

}  // namespace

std::vector<SimpleModule> simple_modules(const GroupPtr& g, const FieldPtr& f, Rng& rng) {
  Subgroup s = sylow_subgroup(g, f->p());
  GModule ind = induce(s, trivial_module(s.group(), f));
  auto classes = chop(ind, rng);
  std::vector<SimpleModule> out;
  for (auto& c : classes) {
    SimpleModule sm;
    sm.endo_degree = endo_degree(c.module);
    sm.is_trivial = is_trivial_module(c.module);
    sm.fingerprint = fingerprint(c.module);
    sm.id = out.size();  // discovery order, replaced below
    sm.module = std::move(c.module);
    out.push_back(std::move(sm));
  }
  std::stable_sort(out.begin(), out.end(), [](const SimpleModule& a, const SimpleModule& b) {
    if (a.module.dim != b.module.dim) return a.module.dim < b.module.dim;
    if (a.is_trivial != b.is_trivial) return a.is_trivial;
    if (a.fingerprint != b.fingerprint) return a.fingerprint < b.fingerprint;
    return a.id < b.id;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i;
  return out;
}

std::size_t simple_index(const std::vector<SimpleModule>& simples, const GModule& s, Rng& rng) {
  auto fp = fingerprint(s);
  for (const auto& sm : simples)
    if (sm.module.dim == s.dim && sm.fingerprint == fp && is_isomorphic(sm.module, s, rng)) return sm.id;
  throw InternalError("composition factor matches no registered simple");
}

std::vector<std::size_t> class_in_g0(const std::vector<SimpleModule>& simples, const GModule& m, Rng& rng) {
  std::vector<std::size_t> out(simples.size(), 0);
  for (const auto& c : chop(m, rng)) out[simple_index(simples, c.module, rng)] += c.multiplicity;
  return out;
}

namespace {

FqMatrix image_matrix(const GroupPtr& g, const FieldPtr& f, const std::vector<SimpleModule>& simples) {
  std::size_t total = 0;
  for (const auto& s : simples) total += s.module.dim * s.module.dim;
  FqMatrix r(f, g->order(), total);
  std::size_t off = 0;
  for (const auto& s : simples) {
    auto mats = element_matrices(s.module);
    const std::size_t n = s.module.dim;
    for (std::size_t x = 0; x < g->order(); ++x) std::copy(mats[x].data().begin(), mats[x].data().end(), r.row(x) + off);
    off += n * n;
  }
  return r;
}

}  // namespace

FqMatrix radical(const GroupPtr& g, const FieldPtr& f, const std::vector<SimpleModule>& simples) {
  FqMatrix r = image_matrix(g, f, simples);
  FqMatrix j = r.left_nullspace();
  std::size_t wedderburn = 0;
  for (const auto& s : simples) {
    const std::size_t n = s.module.dim;
    KSG_ENSURE((n * n) % s.endo_degree == 0, "simple dimension incompatible with its endomorphism degree");
    wedderburn += n * n / s.endo_degree;
  }
  if (g->order() - j.rows() != wedderburn)
    throw InternalError("Wedderburn count fails: dim kG/J = " + std::to_string(g->order() - j.rows()) +
                        ", expected " + std::to_string(wedderburn));
  return j;
}

std::size_t nilpotency_index(const GroupPtr& g, const FieldPtr& f, const FqMatrix& j) {
  const FiniteGroup& G = *g;
  const FiniteField& F = *f;
  const std::size_t n = G.order();
  if (j.rows() == 0) return 1;
  // Generators of J as a left ideal.
  EchelonSpace left(f, n);
  std::vector<GroupAlgebraElement> gens;
  for (std::size_t i = 0; i < j.rows() && left.dim() < j.rows(); ++i) {
    if (left.contains(j.row(i))) continue;
    gens.push_back(j.row_vector(i));
    std::vector<GroupAlgebraElement> queue{j.row_vector(i)};
    left.add(j.row(i));
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t k = 0; k < G.generator_count(); ++k) {
        const std::size_t s = G.generator_index(k);
        GroupAlgebraElement v(n, 0);
        for (std::size_t x = 0; x < n; ++x) v[G.mul(s, x)] = queue[head][x];
        if (left.add(v.data())) queue.push_back(std::move(v));
      }
  }
  KSG_ENSURE(left.dim() == j.rows(), "left ideal generated inside J is not J");
  // J^(k+1) = J^k J = sum_s J^k j_s since J^k kG = J^k.
  std::vector<GroupAlgebraElement> cur;
  for (std::size_t i = 0; i < j.rows(); ++i) cur.push_back(j.row_vector(i));
  std::size_t index = 1;
  std::size_t last_dim = cur.size();
  while (!cur.empty()) {
    EchelonSpace next(f, n);
    std::vector<GroupAlgebraElement> basis;
    for (const auto& x : cur)
      for (const auto& s : gens) {
        auto v = algebra_multiply(F, G, x, s);
        if (next.add(v.data())) basis.push_back(std::move(v));
      }
    ++index;
    if (!basis.empty() && basis.size() >= last_dim) throw InternalError("radical is not nilpotent");
    last_dim = basis.size();
    cur = std::move(basis);
  }
  return index;
}

EchelonSpace module_radical(const GModule& m, const std::vector<SimpleModule>& simples) {
  FqMatrix stack(m.field, m.dim, 0);
  std::vector<FqMatrix> homs;
  std::size_t cols = 0;
  for (const auto& s : simples)
    for (auto& h : hom_space(m, s.module)) {
      cols += h.cols();
      homs.push_back(std::move(h));
    }
  FqMatrix big(m.field, m.dim, cols);
  std::size_t off = 0;
  for (const auto& h : homs) {
    for (std::size_t i = 0; i < m.dim; ++i) std::copy(h.row(i), h.row(i) + h.cols(), big.row(i) + off);
    off += h.cols();
  }
  EchelonSpace rad(m.field, m.dim);
  if (cols == 0) {
    std::vector<Elem> e(m.dim, 0);
    for (std::size_t i = 0; i < m.dim; ++i) {
      std::fill(e.begin(), e.end(), 0);
      e[i] = 1;
      rad.add(e.data());
    }
    return rad;
  }
  FqMatrix ker = big.left_nullspace();
  for (std::size_t i = 0; i < ker.rows(); ++i) rad.add(ker.row(i));
  return rad;
}

std::vector<std::size_t> radical_series(const GModule& m, const std::vector<SimpleModule>& simples) {
  std::vector<std::size_t> dims{m.dim};
  GModule cur = m;
  while (cur.dim > 0) {
    EchelonSpace rad = module_radical(cur, simples);
    KSG_ENSURE(rad.dim() < cur.dim, "radical of a nonzero module is not proper; simples registry incomplete");
    cur = submodule(cur, rad);
    dims.push_back(cur.dim);
  }
  return dims;
}

namespace {

// Radical layer multiplicities of m: sum over layers of dim Hom(layer, S_j)/d_j.
std::vector<std::size_t> layer_multiplicities(const GModule& m, const std::vector<SimpleModule>& simples,
                                              std::vector<std::size_t>* top = nullptr) {
  std::vector<std::size_t> mult(simples.size(), 0);
  GModule cur = m;
  bool first = true;
  while (cur.dim > 0) {
    std::vector<FqMatrix> homs;
    std::size_t cols = 0;
    for (std::size_t j = 0; j < simples.size(); ++j) {
      auto h = hom_space(cur, simples[j].module);
      KSG_ENSURE(h.size() % simples[j].endo_degree == 0, "Hom dimension not divisible by the endomorphism degree");
      mult[j] += h.size() / simples[j].endo_degree;
      if (first && top) top->push_back(h.size() / simples[j].endo_degree);
      for (auto& x : h) {
        cols += x.cols();
        homs.push_back(std::move(x));
      }
    }
    first = false;
    KSG_ENSURE(cols > 0, "nonzero module with no simple quotient; simples registry incomplete");
    FqMatrix big(cur.field, cur.dim, cols);
    std::size_t off = 0;
    for (const auto& h : homs) {
      for (std::size_t i = 0; i < cur.dim; ++i) std::copy(h.row(i), h.row(i) + h.cols(), big.row(i) + off);
      off += h.cols();
    }
    FqMatrix ker = big.left_nullspace();
    EchelonSpace rad(cur.field, cur.dim);
    for (std::size_t i = 0; i < ker.rows(); ++i) rad.add(ker.row(i));
    KSG_ENSURE(rad.dim() < cur.dim, "radical layer is empty");
    cur = submodule(cur, rad);
  }
  return mult;
}

}  // namespace

CartanData compute_cartan(const GroupPtr& g, const FieldPtr& f, std::uint64_t seed, std::size_t cap) {
  const FiniteGroup& G = *g;
  const FiniteField& F = *f;
  const std::size_t n = G.order();
  if (n > cap) throw CapExceeded("|G| = " + std::to_string(n) + " above the representation cap " + std::to_string(cap));
  Rng rng(seed);
  CartanData cd;
  cd.group = g;
  cd.field = f;
  cd.seed = seed;
  cd.simples = simple_modules(g, f, rng);
  cd.radical = radical(g, f, cd.simples);
  cd.nilpotency = nilpotency_index(g, f, cd.radical);

  // Semisimple quotient B as the image of kG in the product of End(S).
  FqMatrix r = image_matrix(g, f, cd.simples);
  EchelonSpace bspace(f, r.cols());
  std::vector<std::size_t> bbasis;
  for (std::size_t x = 0; x < n; ++x)
    if (bspace.add(r.row(x))) bbasis.push_back(x);
  FqMatrix rb(f, 0, r.cols());
  for (std::size_t x : bbasis) rb.append_row(r.row(x));
  FqMatrix rbt = rb.transpose();

  std::vector<FqMatrix> bar;  // flattened idempotents of B
  std::size_t off = 0;
  for (const auto& s : cd.simples) {
    auto mats = element_matrices(s.module);
    const std::size_t d = s.module.dim;
    for (auto& e : block_idempotents(mats, s.endo_degree, f, rng)) {
      FqMatrix flat(f, 1, r.cols());
      std::copy(e.data().begin(), e.data().end(), flat.row(0) + off);
      bar.push_back(std::move(flat));
      cd.idempotent_simple.push_back(s.id);
    }
    off += d * d;
  }

  // Lift sequentially along J by p-power iteration.
  std::uint64_t pm = 1;
  while (pm < cd.nilpotency) pm *= F.p();
  GroupAlgebraElement one(n, 0);
  one[0] = 1;
  GroupAlgebraElement fsum(n, 0);
  for (std::size_t i = 0; i < bar.size(); ++i) {
    GroupAlgebraElement e;
    if (i + 1 == bar.size()) {
      e = algebra_add(F, one, fsum, true);
    } else {
      auto c = rbt.solve(bar[i].transpose());
      KSG_ENSURE(c.has_value(), "idempotent of B has no preimage in kG");
      GroupAlgebraElement a(n, 0);
      for (std::size_t t = 0; t < bbasis.size(); ++t) a[bbasis[t]] = c->at(t, 0);
      auto comp = algebra_add(F, one, fsum, true);
      a = algebra_multiply(F, G, algebra_multiply(F, G, comp, a), comp);
      std::uint64_t e_pow = pm;
      e = a;
      while (e_pow > 1) {
        e = algebra_power(F, G, e, F.p());
        e_pow /= F.p();
      }
    }
    fsum = algebra_add(F, fsum, e);
    cd.idempotents.push_back(std::move(e));
  }
  // Verify: idempotent, orthogonal, sum to one, and lifting the right class.
  for (std::size_t i = 0; i < cd.idempotents.size(); ++i) {
    const auto& e = cd.idempotents[i];
    KSG_ENSURE(algebra_multiply(F, G, e, e) == e, "lifted element is not idempotent");
    auto img = r.left_apply(e.data());
    KSG_ENSURE(std::equal(img.begin(), img.end(), bar[i].row(0)), "lifted idempotent has the wrong image mod J");
    for (std::size_t k = 0; k < cd.idempotents.size(); ++k) {
      if (k == i) continue;
      auto prod = algebra_multiply(F, G, e, cd.idempotents[k]);
      KSG_ENSURE(std::all_of(prod.begin(), prod.end(), [](Elem x) { return x == 0; }), "idempotents not orthogonal");
    }
  }
  KSG_ENSURE(fsum == one, "idempotents do not sum to 1");

  // Projective indecomposables P = e kG inside the regular module.
  GModule reg = regular_module(g, f, cap);
  std::size_t total = 0;
  cd.projectives.resize(cd.simples.size());
  cd.projective_dims.assign(cd.simples.size(), 0);
  std::vector<bool> have(cd.simples.size(), false);
  for (std::size_t i = 0; i < cd.idempotents.size(); ++i) {
    const std::size_t s = cd.idempotent_simple[i];
    FqMatrix seed_row(f, 0, n);
    seed_row.append_row(cd.idempotents[i].data());
    EchelonSpace w = spin(reg, seed_row);
    total += w.dim();
    if (have[s]) {
      KSG_ENSURE(w.dim() == cd.projective_dims[s], "projectives with the same top differ in dimension");
      continue;
    }
    have[s] = true;
    cd.projective_dims[s] = w.dim();
    cd.projectives[s] = submodule(reg, w);
  }
  KSG_ENSURE(total == n, "projective indecomposables do not add up to |G|");

  const std::size_t k = cd.simples.size();
  cd.cartan = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> top;
    auto row = layer_multiplicities(cd.projectives[i], cd.simples, &top);
    for (std::size_t j = 0; j < k; ++j) {
      KSG_ENSURE(top[j] == (i == j ? 1u : 0u), "top of a projective indecomposable is not its simple");
      cd.cartan.at(i, j) = static_cast<long long>(row[j]);
    }
  }
  return cd;
}

CartanData rebase(const CartanData& cd, const GroupPtr& g) {
  KSG_ENSURE(group_key(*cd.group) == group_key(*g), "rebasing Cartan data onto a different group");
  CartanData out = cd;
  out.group = g;
  for (auto& s : out.simples) s.module.group = g;
  for (auto& p : out.projectives) p.group = g;
  return out;
}

std::string group_key(const FiniteGroup& g) {
  std::string key = g.hash() + "-g";
  for (std::size_t k = 0; k < g.generator_count(); ++k) key += "." + std::to_string(g.generator_index(k));
  return key;
}

namespace {

std::mutex memo_mutex;
std::map<std::string, std::shared_ptr<const CartanData>> memo;

}  // namespace

std::shared_ptr<const CartanData> cartan_data(const GroupPtr& g, const FieldPtr& f, std::uint64_t seed) {
  const std::string key = cartan_cache_key(*g, *f, seed);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) {
      if (it->second->group == g) return it->second;
      // Same enumeration under another pointer (the key pins hash and generators).
      return std::make_shared<const CartanData>(rebase(*it->second, g));
    }
  }
  std::shared_ptr<const CartanData> cd;
  if (auto cached = load_cartan(g, f, seed)) cd = std::make_shared<const CartanData>(std::move(*cached));
  else {
    cd = std::make_shared<const CartanData>(compute_cartan(g, f, seed));
    store_cartan(*cd);
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo[key] = cd;
  return cd;
}

void clear_cartan_memo() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.clear();
}

}  // namespace ksg
