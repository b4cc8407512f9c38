#include <gtest/gtest.h>

#include "ksg/error.hpp"
#include "ksg/isolation.hpp"
#include "ksg/named_groups.hpp"
#include "ksg/orbit.hpp"
#include "ksg/zoo.hpp"
#include "oracles.hpp"

using namespace ksg;

TEST(OrbitCategory, CyclicOfOrderP) {
  for (std::uint64_t p : {2, 3, 5}) {
    auto cat = orbit_category_p(cyclic(p), p);
    ASSERT_EQ(cat.objects.size(), 2u);
    EXPECT_EQ(cat.objects[0].order(), 1u);
    EXPECT_EQ(cat.objects[1].order(), p);
    EXPECT_EQ(cat.hom(0, 1).size(), 1u);
    EXPECT_EQ(cat.hom(1, 1).size(), 1u);
    EXPECT_EQ(cat.hom(0, 0).size(), p);
    EXPECT_EQ(cat.hom(1, 0).size(), 0u);
  }
}

TEST(OrbitCategory, HomCountsMatchTransporters) {
  for (const auto& [spec, p] : std::vector<std::pair<const char*, std::uint64_t>>{
           {"symmetric:4", 2}, {"alternating:5", 2}, {"dihedral:6", 2}, {"alternating:4", 3}, {"m9", 3}}) {
    auto g = parse_group_spec(spec);
    auto cat = orbit_category_p(g, p);
    for (std::size_t i = 0; i < cat.objects.size(); ++i)
      for (std::size_t j = 0; j < cat.objects.size(); ++j)
        EXPECT_EQ(cat.hom(i, j).size(), oracle::hom_count(*g, cat.objects[i].members(), cat.objects[j].members()))
            << spec << " " << i << "->" << j;
  }
}

TEST(OrbitCategory, Symmetric4HasSevenClassesOfTwoSubgroups) {
  // e, <(01)>, <(01)(23)>, C4, the normal Klein group, a non-normal Klein group, D4.
  auto cat = orbit_category_p(symmetric(4), 2);
  EXPECT_EQ(cat.objects.size(), 7u);
}

TEST(OrbitCategory, SylowEndomorphismsAreTheWeylGroup) {
  for (const auto& e : isolated_zoo()) {
    auto g = parse_group_spec(e.group);
    if (g->order() > 200) continue;
    auto cat = orbit_category_p(g, e.p);
    const std::size_t top = cat.objects.size() - 1;
    ASSERT_EQ(cat.objects[top].order(), oracle::p_part(g->order(), e.p));
    EXPECT_EQ(cat.hom(top, top).size(), weyl_group(g, sylow_subgroup(g, e.p)).order()) << e.group;
  }
}

TEST(OrbitCategory, CompositionIsAssociativeWithIdentities) {
  for (const auto& [spec, p] : std::vector<std::pair<const char*, std::uint64_t>>{{"symmetric:4", 2}, {"agl1:5", 5}}) {
    auto cat = orbit_category_p(parse_group_spec(spec), p);
    const std::size_t n = cat.objects.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (auto f : cat.hom(a, b)) {
          EXPECT_EQ(cat.compose(cat.identity(a), f), f);
          EXPECT_EQ(cat.compose(f, cat.identity(b)), f);
          for (std::size_t c = 0; c < n; ++c)
            for (auto g : cat.hom(b, c))
              for (std::size_t d = 0; d < n; ++d)
                for (auto h : cat.hom(c, d))
                  EXPECT_EQ(cat.compose(cat.compose(f, g), h), cat.compose(f, cat.compose(g, h)));
        }
  }
}

TEST(OrbitCategory, CosetRepIsLeastElement) {
  auto g = symmetric(4);
  for (const auto& k : all_subgroups(g, 2))
    for (std::size_t x = 0; x < g->order(); ++x) {
      std::size_t least = g->order();
      for (auto y : k.members()) least = std::min(least, g->mul(y, x));
      EXPECT_EQ(coset_rep(*g, k, x), least);
    }
}

TEST(Colimit, PGroupsGiveTheirOwnLevel) {
  for (const char* spec : {"cyclic:4", "dihedral:4", "quaternion8", "cyclic:9"}) {
    auto g = parse_group_spec(spec);
    const std::uint64_t p = oracle::primes_of(g->order())[0];
    GreenContext ctx(g, FiniteField::make(p));
    EXPECT_EQ(colimit(sk_diagram(ctx, orbit_category_p(g, p))), ctx.sk(ctx.whole()).group()) << spec;
  }
}

TEST(Colimit, OneObjectDiagram) {
  auto g = symmetric(3);
  GreenContext ctx(g, FiniteField::make(3));
  auto cat = orbit_category(g, 3, {sylow_subgroup(g, 3)});
  auto d = sk_diagram(ctx, cat);
  ASSERT_EQ(d.nodes.size(), 1u);
  // The Weyl group C2 acts trivially on S_k(C3) = Z/3.
  EXPECT_EQ(colimit(d), FgAbelianGroup::cyclic(3));
}

TEST(Colimit, IsolatedGroupsMatchSk) {
  for (const auto& e : isolated_zoo()) {
    auto g = parse_group_spec(e.group);
    if (g->order() > 200) continue;
    GreenContext ctx(g, FiniteField::make(e.p, e.r));
    EXPECT_EQ(colimit(sk_diagram(ctx, orbit_category_p(g, e.p))), ctx.sk(ctx.whole()).group()) << e.group;
  }
}

TEST(Colimit, C6AtTwoOverF4) {
  auto g = cyclic(6);
  GreenContext ctx(g, FiniteField::make(2, 2));
  EXPECT_EQ(colimit(sk_diagram(ctx, orbit_category_p(g, 2))), FgAbelianGroup::cyclic(2));
  EXPECT_EQ(ctx.sk(ctx.whole()).group(), FgAbelianGroup::from_cyclic_orders({2, 2, 2}));
}

TEST(Reduction, TrivialIntersectionGivesTwoObjects) {
  for (const auto& [spec, p] : std::vector<std::pair<const char*, std::uint64_t>>{
           {"alternating:5", 2}, {"dihedral:5", 2}, {"psl2:7", 7}, {"alternating:6", 3}}) {
    auto g = parse_group_spec(spec);
    auto red = cofinal_reduction(g, p);
    ASSERT_EQ(red.objects.size(), 2u) << spec;
    EXPECT_EQ(red.objects[0].order(), 1u);
    EXPECT_EQ(red.objects[1].order(), oracle::p_part(g->order(), p));
  }
}

TEST(Reduction, Symmetric4AtTwo) {
  auto g = symmetric(4);
  auto red = cofinal_reduction(g, 2);
  ASSERT_EQ(red.objects.size(), 2u);
  EXPECT_EQ(describe_subgroup(red.objects[0]), "C2^2");
  EXPECT_EQ(describe_subgroup(red.objects[1]), "D4");
  EXPECT_EQ(red.hom(0, 0).size(), 6u);  // N(V4)/V4 = S3
  EXPECT_EQ(red.hom(0, 1).size(), 3u);
  EXPECT_EQ(red.hom(1, 1).size(), 1u);
  EXPECT_EQ(red.hom(1, 0).size(), 0u);
}

TEST(Reduction, PGroupIsItsOwnReduction) {
  auto g = dihedral(4);
  auto red = cofinal_reduction(g, 2);
  ASSERT_EQ(red.objects.size(), 1u);
  EXPECT_EQ(red.objects[0].order(), 8u);
}

TEST(Reduction, DoesNotChangeTheColimit) {
  for (const auto& e : zoo_entries()) {
    auto g = parse_group_spec(e.group);
    if (g->order() > 120 || g->order() % e.p != 0) continue;
    GreenContext ctx(g, FiniteField::make(e.p, e.r));
    EXPECT_EQ(colimit(sk_diagram(ctx, cofinal_reduction(g, e.p))), colimit(sk_diagram(ctx, orbit_category_p(g, e.p))))
        << e.group << " p=" << e.p;
  }
}

TEST(Reduction, RejectsCollectionsMissingSubgroups) {
  auto g = symmetric(4);
  EXPECT_THROW(check_cofinal_collection(g, 2, {sylow_subgroup(g, 2)}), SpecError);
  EXPECT_NO_THROW(check_cofinal_collection(g, 2, sylow_intersection_collection(g, 2)));
}

TEST(Coinvariants, MatchColimitForTrivialIntersection) {
  for (const auto& e : zoo_entries()) {
    auto g = parse_group_spec(e.group);
    if (g->order() > 200 || g->order() % e.p != 0) continue;
    Subgroup s = sylow_subgroup(g, e.p);
    if (!oracle::isolated(*g, e.p) || !oracle::trivial_intersection(*g, s.members())) continue;
    GreenContext ctx(g, FiniteField::make(e.p, e.r));
    EXPECT_EQ(weyl_coinvariants(ctx, ctx.canonical(s)), colimit(sk_diagram(ctx, orbit_category_p(g, e.p))))
        << e.group << " p=" << e.p;
  }
}

TEST(Coinvariants, RefusedForSymmetric4) {
  auto g = symmetric(4);
  GreenContext ctx(g, FiniteField::make(2));
  EXPECT_THROW(weyl_coinvariants(ctx, ctx.canonical(sylow_subgroup(g, 2))), HypothesisError);
  // Not a Sylow subgroup.
  auto subs = all_subgroups(g, 2);
  EXPECT_THROW(weyl_coinvariants(ctx, ctx.canonical(subs[1])), HypothesisError);
}

TEST(Describe, Names) {
  auto s4 = symmetric(4);
  EXPECT_EQ(describe_subgroup(sylow_subgroup(s4, 2)), "D4");
  EXPECT_EQ(describe_subgroup(sylow_subgroup(alternating(5), 2)), "C2^2");
  EXPECT_EQ(describe_subgroup(sylow_subgroup(cyclic(12), 2)), "C4");
  EXPECT_EQ(describe_subgroup(Subgroup::whole(quaternion8())), "Q8");
  EXPECT_EQ(describe_subgroup(Subgroup::trivial(s4)), "e");
}
