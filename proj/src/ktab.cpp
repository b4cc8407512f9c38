#include "ksg/ktab.hpp"

#include <map>

#include "ksg/cartan.hpp"
#include "ksg/error.hpp"
#include "ksg/isolation.hpp"
#include "ksg/numtheory.hpp"
#include "ksg/orbit.hpp"

namespace ksg {

namespace {

std::string field_name(std::uint64_t p, unsigned r) {
  return "F_" + std::to_string(p) + (r > 1 ? "^" + std::to_string(r) : "");
}

FgAbelianGroup elementary(std::uint64_t p, std::size_t rank) {
  FgAbelianGroup out;
  out.torsion.assign(rank, BigInt(p));
  return out;
}

void count_partitions(unsigned left, unsigned max_part, std::uint64_t p, std::size_t& count) {
  if (left == 0) {
    ++count;
    return;
  }
  for (unsigned part = std::min(left, max_part); part >= 1; --part)
    if (part % p != 0) count_partitions(left - part, part, p, count);
}

}  // namespace

FgAbelianGroup quillen_k(const BigInt& q, unsigned n) {
  if (n == 0) return FgAbelianGroup::cyclic(0);
  if (n % 2 == 0) return FgAbelianGroup::trivial();
  const unsigned i = (n + 1) / 2;
  return FgAbelianGroup::cyclic(boost::multiprecision::pow(q, i) - 1);
}

KTable g_theory_table(const GroupPtr& g, std::uint64_t p, unsigned r, unsigned n_max, std::uint64_t seed) {
  auto f = FiniteField::make(p, r);
  auto cd = cartan_data(g, f, seed);
  KTable t;
  t.subject = "G_n(" + field_name(p, r) + "[" + g->label() + "])";
  t.group_label = g->label();
  t.p = p;
  t.r = r;
  t.n_max = n_max;
  std::string endo;
  for (const auto& s : cd->simples) {
    if (!endo.empty()) endo += ",";
    endo += std::to_string(s.endo_degree);
  }
  t.notes.push_back("simples: " + std::to_string(cd->simples.size()) + ", endomorphism degrees over k: " + endo);
  for (unsigned n = 0; n <= n_max; ++n) {
    FgAbelianGroup sum;
    for (const auto& s : cd->simples)
      sum = sum.direct_sum(quillen_k(boost::multiprecision::pow(BigInt(f->q()), static_cast<unsigned>(s.endo_degree)), n));
    std::string formula = n == 0 ? "Z^c" : (n % 2 ? "sum_V Z/(|End V|^i-1)" : "0");
    t.rows.push_back({n, sum, formula, "g-theory-decomposition"});
  }
  return t;
}

std::string sylp_formula(std::uint64_t m) { return m == 1 ? "k^i" : "k^{" + std::to_string(m) + "i}"; }

KTable sylp_table(const GroupPtr& g, std::uint64_t p, unsigned r, unsigned n_max, SylpFacts* facts,
                  std::uint64_t seed) {
  if (!is_prime(p)) throw SpecError("p must be prime");
  auto v = is_p_isolated(g, p);
  if (v.degenerate) throw HypothesisError("p does not divide |G|; see reduce for the general statement");
  if (!v.isolated) throw HypothesisError("G is not " + std::to_string(p) + "-isolated; see reduce");
  Subgroup s = sylow_subgroup(g, p);
  if (s.order() != p)
    throw HypothesisError("Sylow " + std::to_string(p) + "-subgroup has order " + std::to_string(s.order()) +
                          ", not p; see reduce");
  const std::size_t w = weyl_group(g, s).order();
  KSG_ENSURE((p - 1) % w == 0, "|W| does not divide p - 1");
  const std::uint64_t m = (p - 1) / w;
  SylpFacts local;
  local.weyl_order = w;
  local.exponent = m;
  if (g->order() <= kRepresentationCap) {
    GreenContext ctx(g, FiniteField::make(p, r), seed);
    const FgAbelianGroup zp = FgAbelianGroup::cyclic(p);
    if (!(ctx.sk(ctx.whole()).group() == zp)) throw InternalError("S_k(G) is not Z/p for a Sylow of order p");
    if (!(weyl_coinvariants(ctx, s) == zp)) throw InternalError("Weyl coinvariants are not Z/p for a Sylow of order p");
    local.gate = "checked";
  } else {
    local.gate = "skipped";
  }
  KTable t;
  t.subject = "K_n(" + field_name(p, r) + "[" + g->label() + "]; Z_" + std::to_string(p) + ")";
  t.group_label = g->label();
  t.p = p;
  t.r = r;
  t.n_max = n_max;
  t.notes.push_back("k^m is reported as its additive group (Z/" + std::to_string(p) + ")^" +
                    (r == 1 ? std::string("m") : "{" + std::to_string(r) + "m}"));
  t.notes.push_back("|W| = " + std::to_string(w) + ", (p-1)/|W| = " + std::to_string(m));
  t.notes.push_back("S_k gate: " + local.gate);
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n % 2) {
      const unsigned i = (n + 1) / 2;
      t.rows.push_back({n, elementary(p, static_cast<std::size_t>(r) * m * i), sylp_formula(m), "sylow-order-p"});
    } else {
      t.rows.push_back({n, FgAbelianGroup::trivial(), "0", "sylow-order-p"});
    }
  }
  if (facts) *facts = local;
  return t;
}

std::size_t p_regular_partitions(unsigned n, std::uint64_t p) {
  std::size_t count = 0;
  count_partitions(n, n, p, count);
  return count;
}

KTable integral_sigma_p_table(std::uint64_t p, unsigned r, unsigned n_max) {
  if (!is_prime(p)) throw SpecError("p must be prime");
  const std::size_t c = p_regular_partitions(static_cast<unsigned>(p), p);
  KTable t;
  t.subject = "K_n(" + field_name(p, r) + "[S" + std::to_string(p) + "])";
  t.group_label = "S" + std::to_string(p);
  t.p = p;
  t.r = r;
  t.n_max = n_max;
  t.notes.push_back("c = " + std::to_string(c) + " (p-regular classes of S" + std::to_string(p) + ")");
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n == 0) {
      FgAbelianGroup z;
      z.free_rank = c;
      t.rows.push_back({n, z, "Z^c", "integral-sigma-p"});
    } else if (n % 2) {
      const unsigned i = (n + 1) / 2;
      std::vector<BigInt> orders(c, boost::multiprecision::pow(BigInt(p), r * i) - 1);
      for (unsigned k = 0; k < r * i; ++k) orders.push_back(p);
      t.rows.push_back({n, FgAbelianGroup::from_cyclic_orders(orders), "(Z/(p^{ri}-1))^c + (Z/p)^{ri}",
                        "integral-sigma-p"});
    } else {
      t.rows.push_back({n, FgAbelianGroup::trivial(), "0", "integral-sigma-p"});
    }
  }
  return t;
}

bool is_hyperelementary(const Subgroup& h) {
  const auto& H = *h.group();
  const std::size_t n = H.order();
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t m = H.element_order(c);
    const std::size_t index = n / m;
    if (index == 1) return true;  // cyclic
    auto qs = prime_divisors(index);
    if (qs.size() != 1 || m % qs[0] == 0) continue;
    // <c> normal: conjugates of c stay in <c>.
    std::vector<bool> in(n, false);
    for (std::size_t x = 0, k = 0; k < m; ++k, x = H.mul(x, c)) in[x] = true;
    bool normal = true;
    for (std::size_t k = 0; k < H.generator_count() && normal; ++k)
      normal = in[H.conj(H.generator_index(k), c)];
    if (normal) return true;
  }
  return false;
}

ReductionReport reduction_report(const GroupPtr& g, std::uint64_t p, unsigned r, unsigned n_max, std::uint64_t seed) {
  if (!is_prime(p)) throw SpecError("p must be prime");
  ReductionReport rep;
  rep.group_label = g->label();
  rep.order = g->order();
  rep.p = p;
  rep.r = r;
  auto v = is_p_isolated(g, p);
  rep.isolated = v.isolated && !v.degenerate;
  Subgroup s = sylow_subgroup(g, p);
  rep.sylow = describe_subgroup(s);
  rep.sylow_order = s.order();
  rep.trivial_intersection = is_trivial_intersection(s);
  auto w = weyl_group(g, s);
  rep.weyl_order = w.order();
  const std::string ps = std::to_string(p);
  auto kn = [&](const std::string& h) { return h == "e" ? std::string("K_n(k; Z_") + ps + ") = 0" : "K_n(k" + h + "; Z_" + ps + ")"; };
  const bool small = g->order() <= kRepresentationCap;
  std::optional<GreenContext> ctx;
  if (small) ctx.emplace(g, FiniteField::make(p, r), seed);

  if (!rep.isolated) {
    rep.applicable = false;
    rep.shape = "inapplicable";
    rep.statement = v.degenerate ? "p does not divide |G|" : "G is not " + ps + "-isolated; the colimit over O_" + ps +
                                                                 "(G) does not compute K_n(kG; Z_" + ps +
                                                                 "). Fallback: colimit over the hyperelementary family";
    std::vector<Subgroup> hyper;
    if (small) {
      for (auto& c : subgroup_classes(g))
        if (is_hyperelementary(c.representative)) {
          rep.hyperelementary_classes.push_back(describe_subgroup(c.representative));
          hyper.push_back(c.representative);
        }
      rep.sk_group = ctx->sk(ctx->whole()).group();
      if (!v.degenerate) rep.sk_colimit = colimit(sk_diagram(*ctx, orbit_category_p(g, p)));
      rep.hyperelementary_surjective = induction_surjectivity(*ctx, hyper).surjective;
    }
    return rep;
  }
  rep.applicable = true;
  OrbitCategoryP red = cofinal_reduction(g, p);
  for (const auto& o : red.objects) {
    rep.objects.push_back(describe_subgroup(o));
    rep.node_values.push_back(kn(rep.objects.back()));
  }
  for (std::size_t i = 0; i < red.objects.size(); ++i)
    for (std::size_t j = 0; j < red.objects.size(); ++j) {
      const std::size_t count = red.offsets[i * red.objects.size() + j + 1] - red.offsets[i * red.objects.size() + j];
      if (count) rep.edges.push_back({i, j, count});
    }
  const std::string wname = describe_subgroup(Subgroup::whole(w.regular_rep));
  if (s.order() == p) {
    rep.shape = "table";
    rep.table = sylp_table(g, p, r, n_max, nullptr, seed);
    rep.statement = "K_{2i-1}(kG; Z_" + ps + ") = " + sylp_formula((p - 1) / rep.weyl_order) + ", i > 0; 0 in even degrees";
  } else if (rep.trivial_intersection) {
    rep.shape = "coinvariants";
    rep.statement = "K_n(kG; Z_" + ps + ") = " + kn(rep.sylow) + (rep.weyl_order > 1 ? "/" + wname : "") + ", n >= 1";
  } else {
    rep.shape = "colimit";
    rep.statement = "K_n(kG; Z_" + ps + ") = colim of K_n(kH; Z_" + ps + ") over the reduced category, n >= 1";
  }
  if (small) {
    rep.sk_group = ctx->sk(ctx->whole()).group();
    rep.sk_colimit = colimit(sk_diagram(*ctx, orbit_category_p(g, p)));
    rep.sk_reduced_colimit = colimit(sk_diagram(*ctx, red));
    if (rep.trivial_intersection) rep.sk_coinvariants = weyl_coinvariants(*ctx, s);
  }
  return rep;
}

}  // namespace ksg
