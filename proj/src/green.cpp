#include "ksg/green.hpp"

#include <algorithm>

#include "ksg/error.hpp"

namespace ksg {

namespace {

std::vector<std::size_t> own_members_in(const Subgroup& k, const Subgroup& h) {
  std::vector<std::size_t> out;
  out.reserve(h.order());
  for (std::size_t x : h.members()) {
    if (!k.contains(x)) throw SpecError("subgroup is not contained in the target subgroup");
    out.push_back(k.to_own(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> to_big(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

// x^G-closure test: some conjugate of r lies inside f.
bool subconjugate(const FiniteGroup& g, const Subgroup& r, const Subgroup& f) {
  if (f.order() % r.order() != 0) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool inside = true;
    for (std::size_t y : r.members())
      if (!f.contains(g.conj(x, y))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

std::vector<std::size_t> least_conjugate(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::size_t> best = h.members(), cur;
  for (std::size_t x = 1; x < g.order(); ++x) {
    cur.clear();
    for (std::size_t y : h.members()) cur.push_back(g.conj(x, y));
    std::sort(cur.begin(), cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

IntMatrix columns_to_matrix(std::size_t rows, const std::vector<std::vector<BigInt>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  return m;
}

}  // namespace

GreenContext::GreenContext(GroupPtr g, FieldPtr f, std::uint64_t seed)
    : group_(std::move(g)), field_(std::move(f)), seed_(seed), rng_(seed) {}

const Subgroup& GreenContext::canonical(const std::vector<std::size_t>& members) {
  auto it = subgroups_.find(members);
  if (it != subgroups_.end()) return *it->second;
  auto sub = members.size() == group_->order() ? std::make_unique<Subgroup>(Subgroup::whole(group_))
                                               : std::make_unique<Subgroup>(group_, members);
  return *subgroups_.emplace(members, std::move(sub)).first->second;
}

const Subgroup& GreenContext::canonical(const Subgroup& h) {
  if (h.parent() != group_ && h.parent()->hash() != group_->hash())
    throw InternalError("subgroup of a different ambient group");
  return canonical(h.members());
}

std::shared_ptr<const CartanData> GreenContext::cartan(const Subgroup& h) {
  return cartan_data(canonical(h).group(), field_, seed_);
}

const G0Level& GreenContext::g0(const Subgroup& h) {
  const Subgroup& c = canonical(h);
  auto it = g0_.find(c.members());
  if (it != g0_.end()) return it->second;
  auto cd = cartan(c);
  G0Level lvl;
  lvl.subgroup = c.members();
  lvl.rank = cd->simples.size();
  lvl.cartan_image = cd->cartan.transpose();
  KSG_ENSURE(determinant(lvl.cartan_image) != 0, "Cartan map is not injective");
  return g0_.emplace(c.members(), std::move(lvl)).first->second;
}

const SkLevel& GreenContext::sk(const Subgroup& h) {
  const Subgroup& c = canonical(h);
  auto it = sk_.find(c.members());
  if (it != sk_.end()) return it->second;
  const G0Level& g = g0(c);
  SkLevel lvl;
  lvl.subgroup = c.members();
  lvl.rank = g.rank;
  lvl.cokernel = std::make_shared<const Cokernel>(g.cartan_image);
  return sk_.emplace(c.members(), std::move(lvl)).first->second;
}

std::vector<std::size_t> GreenContext::g0_class(const Subgroup& h, const GModule& m) {
  const Subgroup& c = canonical(h);
  auto cd = cartan(c);
  if (m.group == c.group()) return class_in_g0(cd->simples, m, rng_);
  KSG_ENSURE(group_key(*m.group) == group_key(*c.group()), "module lives over a different subgroup");
  GModule moved(c.group(), m.field, m.dim, m.action);
  return class_in_g0(cd->simples, moved, rng_);
}

GModule induce_between(const Subgroup& h, const Subgroup& k, const GModule& m) {
  KSG_ENSURE(m.group == h.group(), "module is not over the source subgroup");
  Subgroup l(k.group(), own_members_in(k, h));
  const auto& lg = *l.group();
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < lg.generator_count(); ++i)
    images.push_back(h.to_own(k.to_parent(l.to_parent(lg.generator_index(i)))));
  return induce(l, pullback(m, l.group(), images));
}

GModule restrict_between(const Subgroup& k, const Subgroup& h, const GModule& m) {
  KSG_ENSURE(m.group == k.group(), "module is not over the source subgroup");
  Subgroup l(k.group(), own_members_in(k, h));
  GModule r = restrict(l, m);
  const auto& hg = *h.group();
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < hg.generator_count(); ++i)
    images.push_back(l.to_own(k.to_own(h.to_parent(hg.generator_index(i)))));
  return pullback(r, h.group(), images);
}

SkLevel sk_level(GreenContext& ctx, const Subgroup& h) { return ctx.sk(h); }

GreenMap g0_induction(GreenContext& ctx, const Subgroup& h0, const Subgroup& k0, std::size_t g) {
  const Subgroup& h = ctx.canonical(h0);
  const Subgroup& k = ctx.canonical(k0);
  const auto& G = *ctx.group();
  for (std::size_t x : h.members())
    if (!k.contains(G.conj(g, x))) throw SpecError("g H g^-1 is not contained in K");
  auto ch = ctx.cartan(h);
  const std::size_t rows = ctx.g0(k).rank;
  std::vector<std::vector<BigInt>> cols;
  for (const auto& s : ch->simples) {
    GModule ind;
    if (g == 0) {
      ind = induce_between(h, k, s.module);
    } else {
      auto [c, m] = conjugate_module(h, g, s.module);
      ind = induce_between(c, k, m);
    }
    cols.push_back(to_big(ctx.g0_class(k, ind)));
  }
  return {GreenMap::Level::g0, h.members(), k.members(), columns_to_matrix(rows, cols)};
}

GreenMap g0_restriction(GreenContext& ctx, const Subgroup& k0, const Subgroup& h0) {
  const Subgroup& k = ctx.canonical(k0);
  const Subgroup& h = ctx.canonical(h0);
  if (!h.is_subgroup_of(k)) throw SpecError("restriction target is not a subgroup");
  auto ck = ctx.cartan(k);
  const std::size_t rows = ctx.g0(h).rank;
  std::vector<std::vector<BigInt>> cols;
  for (const auto& s : ck->simples) cols.push_back(to_big(ctx.g0_class(h, restrict_between(k, h, s.module))));
  return {GreenMap::Level::g0, k.members(), h.members(), columns_to_matrix(rows, cols)};
}

GreenMap sk_descend(GreenContext& ctx, const GreenMap& map) {
  KSG_ENSURE(map.level == GreenMap::Level::g0, "only G0 maps descend");
  const G0Level& src_g0 = ctx.g0(ctx.canonical(map.source));
  const SkLevel& src = ctx.sk(map.source);
  const SkLevel& tgt = ctx.sk(map.target);
  KSG_ENSURE(map.matrix.cols() == src.rank && map.matrix.rows() == tgt.rank, "map shape does not match the levels");
  for (std::size_t c = 0; c < src_g0.cartan_image.cols(); ++c)
    if (!tgt.cokernel->is_zero(map.matrix.apply(src_g0.cartan_image.column(c))))
      throw InternalError("map does not carry the Cartan image into the Cartan image");
  const std::size_t sc = src.cokernel->coordinates(), tc = tgt.cokernel->coordinates();
  IntMatrix out(tc, sc);
  for (std::size_t k = 0; k < sc; ++k) {
    auto y = tgt.project(map.matrix.apply(src.cokernel->generator_lift(k)));
    for (std::size_t r = 0; r < tc; ++r) out.at(r, k) = y[r];
  }
  return {GreenMap::Level::sk, map.source, map.target, std::move(out)};
}

bool mackey_check(GreenContext& ctx, const Subgroup& h0, const Subgroup& k0, const GModule& m0) {
  if (m0.dim > 32) throw SpecError("Mackey check is limited to modules of dimension <= 32");
  const Subgroup& h = ctx.canonical(h0);
  const Subgroup& k = ctx.canonical(k0);
  const Subgroup& whole = ctx.whole();
  const auto& G = *ctx.group();
  GModule m = m0;
  if (m.group != h.group()) {
    KSG_ENSURE(group_key(*m.group) == group_key(*h.group()), "module lives over a different subgroup");
    m = GModule(h.group(), m0.field, m0.dim, m0.action);
  }
  auto lhs = ctx.g0_class(k, restrict_between(whole, k, induce_between(h, whole, m)));
  std::vector<std::size_t> rhs(lhs.size(), 0);
  std::size_t covered = 0;
  for (std::size_t g : double_coset_reps(k, h)) {
    Subgroup c = h;
    GModule mc = m;
    if (g != 0) std::tie(c, mc) = conjugate_module(h, g, m);
    Subgroup d = intersection(k, c);
    covered += k.order() * h.order() / d.order();
    auto part = ctx.g0_class(k, induce_between(d, k, restrict_between(c, d, mc)));
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += part[i];
  }
  KSG_ENSURE(covered == G.order(), "double cosets do not partition G");
  return lhs == rhs;
}

std::vector<Subgroup> p_subgroup_family(const GroupPtr& g, std::uint64_t p) {
  std::vector<Subgroup> out;
  for (auto& c : subgroup_classes(g, p)) out.push_back(c.representative);
  return out;
}

bool is_subconjugacy_closed(const GroupPtr& g, const std::vector<Subgroup>& family) {
  const auto& G = *g;
  std::vector<std::vector<std::size_t>> reps;
  bool all_p = true;
  std::uint64_t p = 0;
  for (const auto& f : family) {
    reps.push_back(least_conjugate(G, f));
    std::uint64_t n = f.order();
    if (n == 1) continue;
    std::uint64_t q = 2;
    while (n % q) ++q;
    while (n % q == 0) n /= q;
    if (n != 1 || (p && p != q)) all_p = false;
    p = q;
  }
  std::sort(reps.begin(), reps.end());
  for (const auto& cls : subgroup_classes(g, all_p ? std::max<std::uint64_t>(p, 2) : 0)) {
    const Subgroup& r = cls.representative;
    bool below = std::any_of(family.begin(), family.end(), [&](const Subgroup& f) { return subconjugate(G, r, f); });
    if (below && !std::binary_search(reps.begin(), reps.end(), least_conjugate(G, r))) return false;
  }
  return true;
}

namespace {

// Induction image of one subgroup class in the canonical coordinates of
// S_k(G), with the conjugation invariance check.
std::vector<std::vector<BigInt>> induction_image(GreenContext& ctx, const Subgroup& f) {
  const auto& G = *ctx.group();
  const Subgroup& whole = ctx.whole();
  GreenMap ind = g0_induction(ctx, f, whole, 0);
  for (std::size_t x = 1; x < G.order(); ++x) {
    bool normalizes = std::all_of(f.members().begin(), f.members().end(),
                                  [&](std::size_t y) { return f.contains(G.conj(x, y)); });
    if (normalizes) continue;
    if (!(g0_induction(ctx, f, whole, x).matrix == ind.matrix))
      throw InternalError("induction from a conjugate subgroup gives a different G0 map");
    break;
  }
  GreenMap s = sk_descend(ctx, ind);
  std::vector<std::vector<BigInt>> cols;
  for (std::size_t c = 0; c < s.matrix.cols(); ++c) cols.push_back(s.matrix.column(c));
  return cols;
}

FgAbelianGroup quotient_by_images(const SkLevel& top, const std::vector<std::vector<BigInt>>& images) {
  const auto& moduli = top.cokernel->moduli();
  const std::size_t n = moduli.size();
  std::vector<std::vector<BigInt>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> c(n, 0);
    c[i] = moduli[i];
    rel.push_back(std::move(c));
  }
  rel.insert(rel.end(), images.begin(), images.end());
  return quotient_presentation(n, columns_to_matrix(n, rel));
}

}  // namespace

SurjectivityResult induction_surjectivity(GreenContext& ctx, const std::vector<Subgroup>& family) {
  if (!is_subconjugacy_closed(ctx.group(), family)) throw SpecError("family is not closed under subconjugacy");
  const SkLevel& top = ctx.sk(ctx.whole());
  std::vector<std::vector<BigInt>> images;
  SurjectivityResult res;
  for (const auto& f : family) {
    auto cols = induction_image(ctx, f);
    images.insert(images.end(), cols.begin(), cols.end());
    res.family.push_back(f.members());
  }
  res.cokernel = quotient_by_images(top, images);
  res.surjective = res.cokernel.is_trivial();
  return res;
}

std::vector<Subgroup> defect_base(GreenContext& ctx) {
  const auto& G = *ctx.group();
  auto classes = subgroup_classes(ctx.group());
  if (classes.size() > kDefectBaseClassCap)
    throw CapExceeded(std::to_string(classes.size()) + " subgroup classes, defect base search is capped at " +
                      std::to_string(kDefectBaseClassCap));
  const std::size_t n = classes.size();
  const SkLevel& top = ctx.sk(ctx.whole());
  std::vector<std::vector<std::vector<BigInt>>> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = induction_image(ctx, classes[i].representative);
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      below[i][j] = i != j && subconjugate(G, classes[i].representative, classes[j].representative);
  std::vector<bool> in(n, true);
  auto surjective = [&]() {
    std::vector<std::vector<BigInt>> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (in[i]) cols.insert(cols.end(), image[i].begin(), image[i].end());
    return quotient_by_images(top, cols).is_trivial();
  };
  KSG_ENSURE(surjective(), "induction from all subgroups is not surjective");
  // Surjective families are closed upwards, so with a unique minimal one,
  // peeling maximal members greedily reaches it.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = n; i-- > 0;) {
      if (!in[i]) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < n; ++j)
        if (in[j] && below[i][j]) maximal = false;
      if (!maximal) continue;
      in[i] = false;
      if (surjective()) {
        changed = true;
      } else {
        in[i] = true;
      }
    }
  }
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) out.push_back(classes[i].representative);
  return out;
}

}  // namespace ksg
