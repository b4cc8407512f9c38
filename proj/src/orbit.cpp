#include "ksg/orbit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ksg/error.hpp"
#include "ksg/isolation.hpp"
#include "ksg/numtheory.hpp"

namespace ksg {

std::size_t coset_rep(const FiniteGroup& g, const Subgroup& k, std::size_t x) {
  std::size_t best = x;
  for (std::size_t y : k.members()) best = std::min(best, g.mul(y, x));
  return best;
}

std::vector<std::size_t> OrbitCategoryP::hom(std::size_t source, std::size_t target) const {
  const std::size_t n = objects.size();
  std::vector<std::size_t> out;
  for (std::size_t i = offsets[source * n + target]; i < offsets[source * n + target + 1]; ++i) out.push_back(i);
  return out;
}

std::size_t OrbitCategoryP::find(std::size_t source, std::size_t target, std::size_t g) const {
  const std::size_t n = objects.size();
  const std::size_t rep = coset_rep(*group, objects[target], g);
  auto first = morphisms.begin() + static_cast<std::ptrdiff_t>(offsets[source * n + target]);
  auto last = morphisms.begin() + static_cast<std::ptrdiff_t>(offsets[source * n + target + 1]);
  auto it = std::lower_bound(first, last, rep, [](const OrbitMorphism& m, std::size_t r) { return m.rep < r; });
  if (it == last || it->rep != rep) throw InternalError("element does not represent a morphism");
  return static_cast<std::size_t>(it - morphisms.begin());
}

std::size_t OrbitCategoryP::compose(std::size_t first, std::size_t second) const {
  const auto& f = morphisms[first];
  const auto& s = morphisms[second];
  KSG_ENSURE(f.target == s.source, "morphisms are not composable");
  return find(f.source, s.target, group->mul(s.rep, f.rep));
}

std::size_t OrbitCategoryP::identity(std::size_t object) const { return find(object, object, 0); }

OrbitCategoryP orbit_category(const GroupPtr& g, std::uint64_t p, std::vector<Subgroup> objects) {
  const auto& G = *g;
  OrbitCategoryP cat;
  cat.group = g;
  cat.p = p;
  cat.objects = std::move(objects);
  const std::size_t n = cat.objects.size();
  cat.offsets.assign(n * n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Subgroup& h = cat.objects[i];
      const Subgroup& k = cat.objects[j];
      std::set<std::size_t> reps;
      std::size_t transporter = 0;
      if (k.order() % h.order() == 0)
        for (std::size_t x = 0; x < G.order(); ++x) {
          bool inside = true;
          for (std::size_t y : h.generator_indices())
            if (!k.contains(G.conj(x, y))) {
              inside = false;
              break;
            }
          if (!inside) continue;
          ++transporter;
          reps.insert(coset_rep(G, k, x));
        }
      KSG_ENSURE(reps.size() * k.order() == transporter, "transporter is not a union of K-cosets");
      for (std::size_t r : reps) cat.morphisms.push_back({i, j, r});
      cat.offsets[i * n + j + 1] = cat.morphisms.size();
    }
  return cat;
}

OrbitCategoryP orbit_category_p(const GroupPtr& g, std::uint64_t p) {
  std::vector<Subgroup> objects;
  for (auto& c : subgroup_classes(g, p)) objects.push_back(c.representative);
  return orbit_category(g, p, std::move(objects));
}

namespace {

std::vector<std::size_t> conjugate_members(const FiniteGroup& g, const std::vector<std::size_t>& m, std::size_t x) {
  std::vector<std::size_t> out;
  out.reserve(m.size());
  for (std::size_t y : m) out.push_back(g.conj(x, y));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> meet(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool by_order_then_members(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<Subgroup> sylow_intersection_collection(const GroupPtr& g, std::uint64_t p) {
  const auto& G = *g;
  Subgroup s = sylow_subgroup(g, p);
  std::set<std::vector<std::size_t>> members;
  for (std::size_t x = 0; x < G.order(); ++x) members.insert(conjugate_members(G, s.members(), x));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<std::size_t>> cur(members.begin(), members.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (members.insert(meet(cur[i], cur[j])).second) grew = true;
  }
  std::vector<std::vector<std::size_t>> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end(), by_order_then_members);
  std::vector<Subgroup> out;
  for (auto& m : sorted) out.emplace_back(g, m);
  return out;
}

void check_cofinal_collection(const GroupPtr& g, std::uint64_t p, const std::vector<Subgroup>& collection) {
  const auto& G = *g;
  std::set<std::vector<std::size_t>> members;
  for (const auto& a : collection) {
    if (!is_power_of(a.order(), p)) throw SpecError("collection member is not a p-subgroup");
    members.insert(a.members());
  }
  for (const auto& m : members) {
    for (std::size_t k = 0; k < G.generator_count(); ++k)
      if (!members.count(conjugate_members(G, m, G.generator_index(k))))
        throw SpecError("collection is not closed under conjugation");
    for (const auto& m2 : members)
      if (!members.count(meet(m, m2))) throw SpecError("collection is not closed under intersection");
  }
  Subgroup s = sylow_subgroup(g, p);
  bool covered = std::any_of(members.begin(), members.end(), [&](const std::vector<std::size_t>& m) {
    return std::includes(m.begin(), m.end(), s.members().begin(), s.members().end());
  });
  if (!covered) throw SpecError("collection does not cover the p-subgroups");
}

OrbitCategoryP cofinal_reduction(const GroupPtr& g, std::uint64_t p, const std::vector<Subgroup>& collection) {
  check_cofinal_collection(g, p, collection);
  const auto& G = *g;
  std::set<std::vector<std::size_t>> reps;
  for (const auto& a : collection) {
    std::vector<std::size_t> best = a.members();
    for (std::size_t x = 1; x < G.order(); ++x) best = std::min(best, conjugate_members(G, a.members(), x));
    reps.insert(best);
  }
  std::vector<std::vector<std::size_t>> sorted(reps.begin(), reps.end());
  std::sort(sorted.begin(), sorted.end(), by_order_then_members);
  std::vector<Subgroup> objects;
  for (auto& m : sorted) objects.emplace_back(g, m);
  return orbit_category(g, p, std::move(objects));
}

OrbitCategoryP cofinal_reduction(const GroupPtr& g, std::uint64_t p) {
  return cofinal_reduction(g, p, sylow_intersection_collection(g, p));
}

namespace {

IntMatrix reduce_rows(IntMatrix m, const std::vector<BigInt>& moduli) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (moduli[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      BigInt v = m.at(r, c) % moduli[r];
      if (v < 0) v += moduli[r];
      m.at(r, c) = v;
    }
  }
  return m;
}

}  // namespace

AbDiagram sk_diagram(GreenContext& ctx, const OrbitCategoryP& cat) {
  const auto& G = *cat.group;
  KSG_ENSURE(cat.group == ctx.group(), "diagram context is over another group");
  AbDiagram d;
  for (const auto& h : cat.objects) {
    const SkLevel& lvl = ctx.sk(h);
    d.nodes.push_back({describe_subgroup(h), h.members(), lvl.cokernel->moduli(), lvl.group()});
  }
  auto edge_map = [&](std::size_t src, std::size_t tgt, std::size_t rep) {
    const std::size_t sc = d.nodes[src].moduli.size(), tc = d.nodes[tgt].moduli.size();
    if (sc == 0) return IntMatrix(tc, 0);
    const GreenMap ind = g0_induction(ctx, cat.objects[src], cat.objects[tgt], rep);
    return reduce_rows(sk_descend(ctx, ind).matrix, d.nodes[tgt].moduli);
  };
  for (const auto& m : cat.morphisms) {
    IntMatrix map = edge_map(m.source, m.target, m.rep);
    const Subgroup& k = cat.objects[m.target];
    if (map.cols() > 0 && k.order() > 1) {
      const std::size_t y = k.members()[1 + ctx.rng().below(k.order() - 1)];
      if (!(edge_map(m.source, m.target, G.mul(y, m.rep)) == map))
        throw InternalError("S_k map depends on the coset representative");
    }
    d.edges.push_back({m.source, m.target, m.rep, std::move(map)});
  }
  // Functoriality on every composable pair, and identities act trivially.
  for (std::size_t o = 0; o < cat.objects.size(); ++o) {
    const auto& id = d.edges[cat.identity(o)].map;
    KSG_ENSURE(id == reduce_rows(IntMatrix::identity(id.rows()), d.nodes[o].moduli), "identity morphism acts nontrivially");
  }
  const std::size_t n = cat.objects.size();
  for (std::size_t f = 0; f < cat.morphisms.size(); ++f) {
    const auto& mf = cat.morphisms[f];
    if (d.edges[f].map.cols() == 0) continue;
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t s = cat.offsets[mf.target * n + l]; s < cat.offsets[mf.target * n + l + 1]; ++s) {
        const std::size_t c = cat.compose(f, s);
        if (!(reduce_rows(d.edges[s].map * d.edges[f].map, d.nodes[l].moduli) == d.edges[c].map))
          throw InternalError("S_k diagram is not functorial");
      }
  }
  return d;
}

FgAbelianGroup colimit(const AbDiagram& d) {
  std::vector<std::size_t> offset{0};
  for (const auto& node : d.nodes) offset.push_back(offset.back() + node.moduli.size());
  const std::size_t total = offset.back();
  std::vector<std::vector<BigInt>> rel;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t c = 0; c < d.nodes[i].moduli.size(); ++c) {
      std::vector<BigInt> col(total, 0);
      col[offset[i] + c] = d.nodes[i].moduli[c];
      rel.push_back(std::move(col));
    }
  for (const auto& e : d.edges)
    for (std::size_t x = 0; x < e.map.cols(); ++x) {
      std::vector<BigInt> col(total, 0);
      col[offset[e.source] + x] += 1;
      for (std::size_t r = 0; r < e.map.rows(); ++r) col[offset[e.target] + r] -= e.map.at(r, x);
      rel.push_back(std::move(col));
    }
  IntMatrix m(total, rel.size());
  for (std::size_t c = 0; c < rel.size(); ++c)
    for (std::size_t r = 0; r < total; ++r) m.at(r, c) = rel[c][r];
  return quotient_presentation(total, m);
}

FgAbelianGroup weyl_coinvariants(GreenContext& ctx, const Subgroup& s0) {
  const GroupPtr& g = ctx.group();
  const auto& G = *g;
  const std::uint64_t p = ctx.field()->p();
  const Subgroup& s = ctx.canonical(s0);
  if (s.order() != p_part(G.order(), p)) throw HypothesisError("subgroup is not a Sylow " + std::to_string(p) + "-subgroup");
  if (!is_trivial_intersection(s))
    throw HypothesisError("Sylow subgroup is not trivial intersection; use the orbit-category colimit (colimit-check)");
  Subgroup n = normalizer(g, s);
  const SkLevel& lvl = ctx.sk(s);
  const auto& moduli = lvl.cokernel->moduli();
  const std::size_t dim = moduli.size();
  std::vector<std::vector<BigInt>> rel;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<BigInt> c(dim, 0);
    c[i] = moduli[i];
    rel.push_back(std::move(c));
  }
  std::vector<bool> seen(G.order(), false);
  for (std::size_t x : n.members()) {
    if (seen[x]) continue;
    for (std::size_t y : s.members()) seen[G.mul(x, y)] = true;
    GreenMap conj = g0_induction(ctx, s, s, x);
    // W permutes the simples of kS.
    for (std::size_t c = 0; c < conj.matrix.cols(); ++c) {
      BigInt sum = 0;
      for (std::size_t r = 0; r < conj.matrix.rows(); ++r) sum += conj.matrix.at(r, c);
      KSG_ENSURE(sum == 1, "Weyl element does not permute the simples");
    }
    GreenMap w = sk_descend(ctx, conj);
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<BigInt> col(dim, 0);
      col[c] = 1;
      for (std::size_t r = 0; r < dim; ++r) col[r] -= w.matrix.at(r, c);
      rel.push_back(std::move(col));
    }
  }
  IntMatrix m(dim, rel.size());
  for (std::size_t c = 0; c < rel.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = rel[c][r];
  return quotient_presentation(dim, m);
}

std::string describe_subgroup(const Subgroup& h) {
  const auto& H = *h.group();
  const std::size_t n = H.order();
  if (n == 1) return "e";
  std::size_t max_order = 0;
  for (std::size_t i = 0; i < n; ++i) max_order = std::max(max_order, H.element_order(i));
  if (max_order == n) return "C" + std::to_string(n);
  if (H.is_abelian()) {
    // Per prime, the partition of the exponent is read off from the counts
    // of elements killed by q^i.
    std::string out;
    for (std::uint64_t q : prime_divisors(n)) {
      std::vector<std::size_t> s{0};
      for (std::uint64_t qi = q;; qi *= q) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (qi % H.element_order(i) == 0) ++count;
        std::size_t e = 0;
        for (std::size_t c = count; c > 1; c /= q) ++e;
        if (e == s.back()) break;
        s.push_back(e);
      }
      // parts >= i is s[i] - s[i-1]; parts of size exactly i follow.
      std::map<std::uint64_t, std::size_t> parts;
      for (std::size_t i = 1; i < s.size(); ++i) {
        const std::size_t ge = s[i] - s[i - 1];
        const std::size_t ge_next = i + 1 < s.size() ? s[i + 1] - s[i] : 0;
        if (ge > ge_next) parts[ipow(q, i)] = ge - ge_next;
      }
      for (auto& [order, mult] : parts) {
        if (!out.empty()) out += "x";
        out += "C" + std::to_string(order);
        if (mult > 1) out += "^" + std::to_string(mult);
      }
    }
    return out;
  }
  std::size_t involutions = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (H.element_order(i) == 2) ++involutions;
  if (n == 8) return involutions == 1 ? "Q8" : "D4";
  if (max_order == n / 2 && (involutions == n / 2 + 1 || involutions == n / 2)) return "D" + std::to_string(n / 2);
  return "G" + std::to_string(n);
}

}  // namespace ksg
