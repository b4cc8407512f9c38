#include <gtest/gtest.h>

#include <map>

#include "ksg/error.hpp"
#include "ksg/isolation.hpp"
#include "ksg/named_groups.hpp"
#include "ksg/numtheory.hpp"
#include "ksg/zoo.hpp"
#include "oracles.hpp"

using namespace ksg;

namespace {

std::vector<std::string> small_zoo() {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& e : zoo_entries())
    if (seen.insert(e.group).second && parse_group_spec(e.group)->order() <= 400) out.push_back(e.group);
  return out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Permutation, ProductAppliesLeftFactorFirst) {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  Permutation ab = a * b;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ab[i], b[a[i]]);
}

TEST(Permutation, OrderIsLcmOfCycleLengths) {
  Permutation x = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(x.order(), 6u);
  EXPECT_EQ(x.cycle_type(), (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE((x * x.inverse()).is_identity());
}

TEST(Enumerate, SmallClosures) {
  auto c2 = FiniteGroup::enumerate(2, {Permutation::from_cycles(2, {{0, 1}})});
  EXPECT_EQ(c2->order(), 2u);
  auto s3 = FiniteGroup::enumerate(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(s3->order(), 6u);
  auto e = FiniteGroup::enumerate(1, {});
  EXPECT_EQ(e->order(), 1u);
  EXPECT_TRUE(e->element(0).is_identity());
}

TEST(Enumerate, IdentityFirstAndWordTreeConsistent) {
  auto g = symmetric(4);
  EXPECT_TRUE(g->element(0).is_identity());
  for (std::size_t i = 1; i < g->order(); ++i)
    EXPECT_EQ(g->element(i), g->element(g->word_parent(i)) * g->generators()[g->word_generator(i)]);
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(FiniteGroup::enumerate(8,
                                      {Permutation::from_cycles(8, {{0, 1}}),
                                       Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})},
                                      "", 1000),
               CapExceeded);
}

TEST(NamedGroups, Orders) {
  for (std::size_t n = 1; n <= 15; ++n) EXPECT_EQ(cyclic(n)->order(), n);
  for (std::size_t n = 3; n <= 15; ++n) EXPECT_EQ(dihedral(n)->order(), 2 * n);
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(symmetric(n)->order(), factorial(n));
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(alternating(n)->order(), factorial(n) / 2);
  EXPECT_EQ(quaternion8()->order(), 8u);
  for (std::uint64_t p : {3, 5, 7}) {
    EXPECT_EQ(agl1(p)->order(), p * (p - 1));
    EXPECT_EQ(psl2(p)->order(), p * (p * p - 1) / 2);
  }
  EXPECT_EQ(psl2(5)->degree(), 6u);
  EXPECT_EQ(m9()->order(), 72u);
  EXPECT_EQ(parse_group_spec("cyclic:3*cyclic:2*cyclic:4")->order(), 24u);
}

TEST(NamedGroups, QuaternionHasOneInvolution) {
  auto q = quaternion8();
  std::size_t involutions = 0;
  for (std::size_t x = 0; x < q->order(); ++x) involutions += q->element_order(x) == 2;
  EXPECT_EQ(involutions, 1u);
}

TEST(NamedGroups, M9IsFrobeniusWithKernelC3Squared) {
  auto g = m9();
  // Element orders of C_3^2 x| Q_8 acting freely: 1, 3 (8 of them), 2, 4.
  std::map<std::size_t, std::size_t> orders;
  for (std::size_t x = 0; x < g->order(); ++x) ++orders[g->element_order(x)];
  EXPECT_EQ(orders[3], 8u);
  EXPECT_EQ(orders.count(6), 0u);
  EXPECT_EQ(orders.count(12), 0u);
}

TEST(NamedGroups, MalformedSpecs) {
  EXPECT_THROW(parse_group_spec("nonsense:3"), SpecError);
  EXPECT_THROW(parse_group_spec("cyclic:x"), SpecError);
  EXPECT_THROW(parse_group_spec("psl2:6"), SpecError);
  EXPECT_THROW(parse_group_json("{\"degree\": 3, \"generators\": [[0, 0, 1]]}"), SpecError);
  EXPECT_THROW(parse_group_json("not json"), SpecError);
}

TEST(NamedGroups, JsonGenerators) {
  auto g = parse_group_json(R"({"degree": 4, "generators": [[1, 0, 2, 3], [1, 2, 3, 0]], "label": "sym4"})");
  EXPECT_EQ(g->order(), 24u);
  EXPECT_EQ(g->label(), "sym4");
  EXPECT_EQ(parse_group_json(R"({"named": "dihedral", "n": 5})")->order(), 10u);
}

TEST(NamedGroups, SemidirectRejectsNonHomomorphism) {
  SemidirectAction a = inversion_action(5);
  // Send the generator of C_2 to an element-index permutation that is not an
  // automorphism of C_5.
  std::vector<std::size_t> images(5);
  for (std::size_t i = 0; i < 5; ++i) images[i] = i;
  std::swap(images[0], images[1]);
  a.generator_images = {Permutation(std::vector<Permutation::Point>(images.begin(), images.end()))};
  EXPECT_THROW(semidirect_product(a), SpecError);
}

TEST(Classes, SizesDivideOrderAndSum) {
  for (const auto& spec : small_zoo()) {
    auto g = parse_group_spec(spec);
    auto cls = conjugacy_classes(*g);
    std::size_t total = 0;
    for (const auto& c : cls) {
      EXPECT_EQ(g->order() % c.size(), 0u) << spec;
      total += c.size();
    }
    EXPECT_EQ(total, g->order()) << spec;
    EXPECT_EQ(cls.size(), oracle::class_count(*g)) << spec;
  }
}

TEST(Classes, Symmetric4) {
  auto cls = conjugacy_classes(*symmetric(4));
  std::multiset<std::size_t> sizes;
  for (const auto& c : cls) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 3, 6, 6, 8}));
}

TEST(Subgroups, CentralizerOfFiveCycle) {
  auto g = symmetric(5);
  auto x = g->index_checked(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}));
  Subgroup c = centralizer(g, x);
  EXPECT_EQ(c.order(), 5u);
  EXPECT_TRUE(c.group()->is_abelian());
}

TEST(Subgroups, NormalizerMatchesBruteForce) {
  for (const char* spec : {"symmetric:4", "alternating:5", "dihedral:6", "agl1:7"}) {
    auto g = parse_group_spec(spec);
    for (const auto& h : all_subgroups(g))
      EXPECT_EQ(normalizer(g, h).order(), oracle::normalizer_order(*g, h.members())) << spec;
  }
}

TEST(Subgroups, DoubleCosetsPartition) {
  auto g = symmetric(4);
  auto subs = all_subgroups(g);
  for (std::size_t i = 0; i < subs.size(); i += 3)
    for (std::size_t j = 0; j < subs.size(); j += 5) {
      const auto& k = subs[i];
      const auto& h = subs[j];
      std::size_t covered = 0;
      for (auto d : double_coset_reps(k, h)) {
        std::set<std::size_t> coset;
        for (auto a : k.members())
          for (auto b : h.members()) coset.insert(g->mul(g->mul(a, d), b));
        covered += coset.size();
      }
      EXPECT_EQ(covered, g->order());
    }
}

TEST(Subgroups, CountsOfSymmetric4) {
  // S4 has 30 subgroups in 11 conjugacy classes.
  auto g = symmetric(4);
  EXPECT_EQ(all_subgroups(g).size(), 30u);
  EXPECT_EQ(subgroup_classes(g).size(), 11u);
}

TEST(Sylow, OrderIsExactPPartOnZoo) {
  for (const auto& spec : small_zoo()) {
    auto g = parse_group_spec(spec);
    for (auto p : oracle::primes_of(g->order())) {
      Subgroup s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), oracle::p_part(g->order(), p)) << spec << " p=" << p;
      // Number of Sylows is 1 mod p.
      const std::size_t count = g->order() / oracle::normalizer_order(*g, s.members());
      EXPECT_EQ(count % p, 1u) << spec << " p=" << p;
    }
  }
}

TEST(Sylow, NamedExamples) {
  auto s4 = sylow_subgroup(symmetric(4), 2);
  EXPECT_EQ(s4.order(), 8u);
  EXPECT_FALSE(s4.group()->is_abelian());
  EXPECT_EQ(sylow_subgroup(symmetric(3), 3).order(), 3u);
  auto a5 = sylow_subgroup(alternating(5), 2);
  EXPECT_EQ(a5.order(), 4u);
  for (std::size_t x = 1; x < 4; ++x) EXPECT_EQ(a5.group()->element_order(x), 2u);
}

TEST(Isolation, RoutinesAgreeWithElementOrders) {
  for (const auto& spec : small_zoo()) {
    auto g = parse_group_spec(spec);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      auto v = is_p_isolated(g, p);
      EXPECT_EQ(v.by_element_orders, v.by_p_centralizers);
      EXPECT_EQ(v.by_element_orders, v.by_regular_centralizers);
      EXPECT_EQ(v.degenerate, g->order() % p != 0);
      if (g->order() % p == 0) EXPECT_EQ(v.isolated, oracle::isolated(*g, p)) << spec << " p=" << p;
    }
  }
}

TEST(Isolation, Examples) {
  EXPECT_TRUE(is_p_isolated(symmetric(4), 2).isolated);
  EXPECT_FALSE(is_p_isolated(cyclic(6), 2).isolated);
  EXPECT_FALSE(is_p_isolated(symmetric(5), 2).isolated);
  EXPECT_TRUE(is_p_isolated(symmetric(5), 5).isolated);
}

TEST(PrimeGraph, MatchesElementOrders) {
  for (const auto& spec : small_zoo()) {
    auto g = parse_group_spec(spec);
    auto pg = prime_graph(*g);
    auto edges = oracle::prime_graph_edges(*g);
    std::set<std::pair<std::uint64_t, std::uint64_t>> got(pg.edges.begin(), pg.edges.end());
    EXPECT_EQ(got, edges) << spec;
    EXPECT_EQ(pg.vertices, oracle::primes_of(g->order())) << spec;
  }
  auto s5 = prime_graph(*symmetric(5));
  EXPECT_EQ(s5.vertices, (std::vector<std::uint64_t>{2, 3, 5}));
  ASSERT_EQ(s5.edges.size(), 1u);
  EXPECT_EQ(s5.edges[0], (std::pair<std::uint64_t, std::uint64_t>{2, 3}));
}

TEST(TrivialIntersection, MatchesBruteForce) {
  for (const auto& spec : small_zoo()) {
    auto g = parse_group_spec(spec);
    for (auto p : oracle::primes_of(g->order())) {
      Subgroup s = sylow_subgroup(g, p);
      EXPECT_EQ(is_trivial_intersection(s), oracle::trivial_intersection(*g, s.members())) << spec << " p=" << p;
    }
  }
  EXPECT_FALSE(is_trivial_intersection(sylow_subgroup(symmetric(4), 2)));
}

TEST(Weyl, FreeActionAndDivisibility) {
  for (const auto& spec : small_zoo()) {
    auto g = parse_group_spec(spec);
    for (auto p : oracle::primes_of(g->order())) {
      if (!oracle::isolated(*g, p)) continue;
      Subgroup s = sylow_subgroup(g, p);
      auto w = weyl_group(g, s);
      EXPECT_EQ(w.order(), oracle::normalizer_order(*g, s.members()) / s.order());
      EXPECT_TRUE(weyl_action_is_free(w)) << spec << " p=" << p;
      if (s.order() == p) EXPECT_EQ((p - 1) % w.order(), 0u) << spec;
      // Abelian Sylow in a p-isolated group is trivial intersection.
      if (s.group()->is_abelian()) EXPECT_TRUE(oracle::trivial_intersection(*g, s.members())) << spec;
    }
  }
}

TEST(Weyl, A4AtTwoIsC3) {
  auto g = alternating(4);
  auto w = weyl_group(g, sylow_subgroup(g, 2));
  EXPECT_EQ(w.order(), 3u);
}

TEST(Frobenius, Certificates) {
  auto inv5 = is_frobenius_pair(inversion_action(5), 2);
  EXPECT_TRUE(inv5.free);
  EXPECT_TRUE(inv5.certified);
  for (std::uint64_t p : {5, 7}) {
    auto v = is_frobenius_pair(full_automorphism_action(p), p);
    EXPECT_TRUE(v.free);
    EXPECT_TRUE(v.certified);
  }
  auto m = is_frobenius_pair(m9_action(), 2);
  EXPECT_TRUE(m.certified);
}

TEST(Frobenius, TrivialComplementIsVacuous) {
  SemidirectAction a{cyclic(6), trivial_group(), {}};
  auto v = is_frobenius_pair(a, 2);
  EXPECT_TRUE(v.free);
  EXPECT_FALSE(v.certified);
}
