#include "ksg/isolation.hpp"

#include <algorithm>
#include <set>

#include "ksg/error.hpp"
#include "ksg/numtheory.hpp"

namespace ksg {

Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p) {
  if (!is_prime(p)) throw SpecError("p must be prime, got " + std::to_string(p));
  const std::uint64_t target = p_part(g->order(), p);
  if (target == 1) return Subgroup::trivial(g);

  std::size_t best = 0, best_order = 1;
  for (std::size_t x = 1; x < g->order(); ++x) {
    std::uint64_t o = g->element_order(x);
    if (is_power_of(o, p) && o > best_order) {
      best = x;
      best_order = o;
    }
  }
  Subgroup P = Subgroup::generated(g, {best});
  while (P.order() < target) {
    Subgroup N = normalizer(g, P);
    std::optional<std::size_t> ext;
    for (std::size_t x : N.members())
      if (!P.contains(x) && is_power_of(g->element_order(x), p)) {
        ext = x;
        break;
      }
    KSG_ENSURE(ext, "Sylow growth stalled below the p-part");
    auto gens = P.generator_indices();
    gens.push_back(*ext);
    P = Subgroup::generated(g, gens);
    KSG_ENSURE(is_power_of(P.order(), p), "Sylow growth left the p-subgroups");
  }
  KSG_ENSURE(P.order() == target, "Sylow growth overshot the p-part");
  return P;
}

bool PrimeGraph::adjacent(std::uint64_t q, std::uint64_t r) const {
  if (q > r) std::swap(q, r);
  return std::find(edges.begin(), edges.end(), std::pair{q, r}) != edges.end();
}

PrimeGraph prime_graph(const FiniteGroup& g) {
  PrimeGraph out;
  out.vertices = prime_divisors(g.order());
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::set<std::uint64_t> orders;
  for (std::size_t x = 0; x < g.order(); ++x) orders.insert(g.element_order(x));
  for (auto o : orders) {
    auto ps = prime_divisors(o);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) edges.insert({ps[i], ps[j]});
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

IsolationVerdict is_p_isolated(const GroupPtr& g, std::uint64_t p) {
  if (!is_prime(p)) throw SpecError("p must be prime, got " + std::to_string(p));
  IsolationVerdict v;
  if (g->order() % p != 0) {
    v.degenerate = true;
    return v;
  }
  // (1) no element of order divisible by p and by another prime
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::uint64_t o = g->element_order(x);
    if (o % p == 0 && !is_power_of(o, p)) {
      v.by_element_orders = false;
      break;
    }
  }
  // (2) and (3) via class sizes: |C(x)| = |G| / |class of x|
  for (const auto& cls : conjugacy_classes(*g)) {
    std::size_t x = cls.front();
    if (x == 0) continue;
    std::uint64_t o = g->element_order(x);
    std::uint64_t c = g->order() / cls.size();
    if (o == p && !is_power_of(c, p)) v.by_p_centralizers = false;
    if (o % p != 0 && c % p == 0) v.by_regular_centralizers = false;
  }
  if (v.by_element_orders != v.by_p_centralizers || v.by_element_orders != v.by_regular_centralizers)
    throw InternalError("p-isolation routines disagree for " + g->label());
  v.isolated = v.by_element_orders;
  return v;
}

bool is_trivial_intersection(const Subgroup& s) {
  const GroupPtr& g = s.parent();
  Subgroup n = normalizer(g, s);
  std::vector<bool> done(g->order(), false);
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (done[x]) continue;
    for (std::size_t m : n.members()) done[g->mul(x, m)] = true;
    if (n.contains(x)) continue;
    for (std::size_t m : s.members())
      if (m != 0 && s.contains(g->conj(x, m))) return false;
  }
  return true;
}

QuotientGroup quotient(const Subgroup& ambient, const Subgroup& normal) {
  const GroupPtr& g = ambient.parent();
  if (!normal.is_subgroup_of(ambient)) throw SpecError("quotient needs S inside N");
  for (std::size_t x : ambient.generator_indices())
    for (std::size_t s : normal.generator_indices())
      if (!normal.contains(g->conj(x, s))) throw SpecError("quotient needs S normal in N");

  const std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_index(g->order(), npos);
  std::vector<std::size_t> cosets;
  for (std::size_t x : ambient.members()) {
    if (coset_index[x] != npos) continue;
    for (std::size_t s : normal.members()) coset_index[g->mul(x, s)] = cosets.size();
    cosets.push_back(x);
  }
  const std::size_t m = cosets.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = coset_index[g->mul(cosets[a], cosets[b])];

  std::vector<Permutation> gens;
  for (std::size_t x : ambient.generator_indices()) {
    std::size_t c = coset_index[x];
    std::vector<Permutation::Point> im(m);
    for (std::size_t a = 0; a < m; ++a) im[a] = static_cast<Permutation::Point>(table[a][c]);
    Permutation perm(im);
    if (!perm.is_identity()) gens.push_back(perm);
  }
  auto reg = FiniteGroup::enumerate(m, gens, g->label() + "-quot");
  KSG_ENSURE(reg->order() == m, "regular representation of the quotient has the wrong order");
  return {ambient, normal, std::move(cosets), std::move(table), std::move(reg), std::move(coset_index)};
}

QuotientGroup weyl_group(const GroupPtr& g, const Subgroup& s) {
  return quotient(normalizer(g, s), s);
}

std::vector<Permutation> weyl_action_on(const QuotientGroup& w) {
  const Subgroup& s = w.normal;
  const GroupPtr& g = s.parent();
  std::vector<Permutation> out;
  for (std::size_t rep : w.cosets) {
    std::vector<Permutation::Point> im(s.order());
    for (std::size_t i = 0; i < s.order(); ++i)
      im[i] = static_cast<Permutation::Point>(s.to_own(g->conj(rep, s.to_parent(i))));
    out.emplace_back(im);
  }
  return out;
}

bool weyl_action_is_free(const QuotientGroup& w) {
  auto act = weyl_action_on(w);
  for (std::size_t c = 1; c < act.size(); ++c)
    for (std::size_t i = 1; i < act[c].degree(); ++i)
      if (act[c][i] == i) return false;
  return true;
}

FrobeniusVerdict is_frobenius_pair(const SemidirectAction& action, std::uint64_t p) {
  if (!is_prime(p)) throw SpecError("p must be prime, got " + std::to_string(p));
  FrobeniusVerdict v;
  auto img = action.extend();
  v.free = true;
  for (std::size_t h = 1; h < img.size() && v.free; ++h)
    for (std::size_t k = 1; k < img[h].degree(); ++k)
      if (img[h][k] == k) {
        v.free = false;
        break;
      }
  if (!v.free) return v;
  const std::uint64_t nk = action.k->order(), nh = action.h->order();
  if (is_power_of(nh, p) && nk % p != 0) v.kernel_is_p_group = false;
  else if (nh % p != 0 && is_power_of(nk, p)) v.kernel_is_p_group = true;
  // A trivial factor makes the decomposition degenerate.
  if (!v.kernel_is_p_group || nk == 1 || nh == 1) {
    v.kernel_is_p_group.reset();
    return v;
  }
  v.certified = true;
  auto g = semidirect_product(action);
  auto iso = is_p_isolated(g, p);
  KSG_ENSURE(iso.isolated, "Frobenius certificate without p-isolation");
  KSG_ENSURE(is_trivial_intersection(sylow_subgroup(g, p)), "Frobenius certificate without TI Sylow");
  return v;
}

}  // namespace ksg
