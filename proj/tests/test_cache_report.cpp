#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "ksg/cache.hpp"
#include "ksg/ktab.hpp"
#include "ksg/named_groups.hpp"
#include "ksg/report.hpp"
#include "ksg/zoo.hpp"

using namespace ksg;
namespace fs = std::filesystem;

namespace {

struct TempCacheDir {
  fs::path path;
  TempCacheDir() {
    path = fs::temp_directory_path() / ("ksg-cache-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
    set_cache_dir(path.string());
    clear_cartan_memo();
  }
  ~TempCacheDir() {
    set_cache_dir(std::nullopt);
    clear_cartan_memo();
    fs::remove_all(path);
  }
  std::size_t files() const {
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(path)) n += e.is_regular_file();
    return n;
  }
};

}  // namespace

TEST(Cache, RoundTripEqualsRecompute) {
  TempCacheDir dir;
  for (const auto& [spec, p, r] : std::vector<std::tuple<const char*, std::uint64_t, unsigned>>{
           {"symmetric:4", 2, 1}, {"alternating:5", 2, 2}, {"dihedral:5", 5, 1}, {"cyclic:6", 2, 2}}) {
    auto g = parse_group_spec(spec);
    auto f = FiniteField::make(p, r);
    auto fresh = compute_cartan(g, f);
    store_cartan(fresh);
    auto loaded = load_cartan(g, f, Rng::kDefaultSeed);
    ASSERT_TRUE(loaded.has_value()) << spec;
    EXPECT_TRUE(loaded->cartan == fresh.cartan) << spec;
    EXPECT_EQ(loaded->nilpotency, fresh.nilpotency);
    EXPECT_EQ(loaded->projective_dims, fresh.projective_dims);
    ASSERT_EQ(loaded->simples.size(), fresh.simples.size());
    for (std::size_t i = 0; i < fresh.simples.size(); ++i) {
      EXPECT_EQ(loaded->simples[i].module.dim, fresh.simples[i].module.dim);
      EXPECT_EQ(loaded->simples[i].endo_degree, fresh.simples[i].endo_degree);
      EXPECT_EQ(loaded->simples[i].fingerprint, fresh.simples[i].fingerprint);
    }
    EXPECT_EQ(serialize_cartan(*loaded), serialize_cartan(fresh)) << spec;
  }
  EXPECT_EQ(dir.files(), 4u);
}

TEST(Cache, MemoWritesThrough) {
  TempCacheDir dir;
  auto g = symmetric(3);
  auto f = FiniteField::make(3);
  auto first = cartan_data(g, f);
  EXPECT_EQ(dir.files(), 1u);
  clear_cartan_memo();
  auto second = cartan_data(g, f);
  EXPECT_EQ(serialize_cartan(*first), serialize_cartan(*second));
}

TEST(Cache, DifferentSeedsHaveDifferentKeys) {
  auto g = symmetric(3);
  auto f = FiniteField::make(3);
  EXPECT_NE(cartan_cache_key(*g, *f, 1), cartan_cache_key(*g, *f, 2));
  EXPECT_NE(cartan_cache_key(*g, *f, 1), cartan_cache_key(*g, *FiniteField::make(3, 2), 1));
}

TEST(Cache, RejectsMismatchedGroup) {
  auto f = FiniteField::make(2);
  auto text = serialize_cartan(compute_cartan(symmetric(3), f));
  EXPECT_FALSE(deserialize_cartan(text, cyclic(6), f).has_value());
  EXPECT_FALSE(deserialize_cartan(text, symmetric(3), FiniteField::make(3)).has_value());
  EXPECT_FALSE(deserialize_cartan("{}", symmetric(3), f).has_value());
  EXPECT_FALSE(deserialize_cartan("not json", symmetric(3), f).has_value());
  EXPECT_TRUE(deserialize_cartan(text, symmetric(3), f).has_value());
}

TEST(Cache, CorruptFileFallsBackToCompute) {
  TempCacheDir dir;
  auto g = dihedral(4);
  auto f = FiniteField::make(2);
  auto want = serialize_cartan(*cartan_data(g, f));
  for (const auto& e : fs::directory_iterator(dir.path)) std::ofstream(e.path()) << "garbage";
  clear_cartan_memo();
  EXPECT_EQ(serialize_cartan(*cartan_data(g, f)), want);
}

TEST(Report, CsvIsExact) {
  auto csv = ktable_csv(integral_sigma_p_table(2, 1, 3));
  EXPECT_EQ(csv, "n,invariant_factors,provenance\n0,0,integral-sigma-p\n1,2,integral-sigma-p\n2,,integral-sigma-p\n"
                 "3,2 6,integral-sigma-p\n");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Report, BigIntegersBecomeStrings) {
  EXPECT_TRUE(big_json(BigInt(42)).is_number());
  BigInt big = 1;
  for (int i = 0; i < 80; ++i) big *= 2;
  auto j = big_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(j.get<std::string>(), "1208925819614629174706176");
  // Torsion orders of a large K-group survive the round trip.
  auto t = to_json(g_theory_table(trivial_group(), 2, 10, 9));
  EXPECT_EQ(t.dump().find("e+"), std::string::npos);
}

TEST(Report, DumpIsSortedAndIndented) {
  json j = {{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}};
  EXPECT_EQ(dump(j), "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
}

TEST(Zoo, DeterministicAcrossRunsAndThreads) {
  std::vector<ZooEntry> entries{{"symmetric:3", 3, 1}, {"alternating:4", 2, 1}, {"cyclic:6", 2, 2}, {"dihedral:5", 5, 1}};
  auto a = dump(run_zoo(entries, Rng::kDefaultSeed, 5, 1, true));
  clear_cartan_memo();
  auto b = dump(run_zoo(entries, Rng::kDefaultSeed, 5, 3, true));
  EXPECT_EQ(a, b);
}
