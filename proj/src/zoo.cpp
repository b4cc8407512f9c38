#include "ksg/zoo.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ksg/error.hpp"
#include "ksg/named_groups.hpp"
#include "ksg/numtheory.hpp"

namespace ksg {

std::vector<ZooEntry> zoo_entries() {
  std::vector<std::string> groups;
  for (int n = 2; n <= 15; ++n) groups.push_back("cyclic:" + std::to_string(n));
  for (int n : {16, 25, 27, 32, 49, 64, 81, 125}) groups.push_back("cyclic:" + std::to_string(n));
  for (int n = 3; n <= 15; ++n) groups.push_back("dihedral:" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) groups.push_back("symmetric:" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) groups.push_back("alternating:" + std::to_string(n));
  groups.push_back("quaternion8");
  for (int p : {5, 7}) groups.push_back("agl1:" + std::to_string(p));
  for (int p : {5, 7}) groups.push_back("psl2:" + std::to_string(p));
  groups.push_back("m9");
  groups.push_back("cyclic:2*cyclic:4");
  groups.push_back("cyclic:3*cyclic:2*cyclic:4");
  std::vector<ZooEntry> out;
  for (const auto& g : groups) {
    const std::size_t order = parse_group_spec(g)->order();
    for (auto p : prime_divisors(order)) out.push_back({g, p, 1});
  }
  // Characteristics prime to |G|.
  for (auto [g, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"cyclic:5", 2},
                                                                         {"cyclic:7", 3},
                                                                         {"symmetric:3", 5},
                                                                         {"dihedral:5", 3},
                                                                         {"alternating:4", 5},
                                                                         {"alternating:5", 7},
                                                                         {"quaternion8", 3},
                                                                         {"agl1:5", 3},
                                                                         {"psl2:7", 5},
                                                                         {"m9", 5}})
    out.push_back({g, p, 1});
  out.push_back({"cyclic:6", 2, 2});
  return out;
}

std::vector<ZooEntry> isolated_zoo() {
  return {{"symmetric:3", 3, 1},   {"symmetric:4", 2, 1}, {"symmetric:5", 5, 1}, {"alternating:4", 2, 1},
          {"alternating:5", 2, 1}, {"alternating:5", 5, 1}, {"alternating:6", 3, 1}, {"dihedral:5", 5, 1},
          {"dihedral:7", 7, 1},    {"dihedral:5", 2, 1},  {"dihedral:7", 2, 1},  {"agl1:5", 5, 1},
          {"agl1:7", 7, 1},        {"psl2:5", 5, 1},      {"psl2:7", 7, 1},      {"m9", 2, 1}};
}

std::pair<std::size_t, std::size_t> mackey_suite(GreenContext& ctx) {
  const auto& g = ctx.group();
  auto subs = all_subgroups(g);
  std::size_t checked = 0, passed = 0;
  for (const auto& h0 : subs) {
    const Subgroup& h = ctx.canonical(h0);
    GModule trivial = trivial_module(h.group(), ctx.field());
    GModule other;
    if (h.order() == 1) {
      other = direct_sum(trivial, trivial);
    } else if (h.order() <= 32) {
      other = regular_module(h.group(), ctx.field());
    } else {
      other = ctx.cartan(h)->simples.back().module;
    }
    for (const auto& k : subs) {
      checked += 2;
      passed += mackey_check(ctx, h, k, trivial);
      passed += mackey_check(ctx, h, k, other);
    }
  }
  return {checked, passed};
}

json run_zoo_entry(const ZooEntry& e, std::uint64_t seed, unsigned n_max, bool mackey) {
  GroupPtr g = parse_group_spec(e.group);
  const std::uint64_t p = e.p;
  json j{{"group", g->label()}, {"spec", e.group}, {"order", g->order()}, {"p", p}, {"r", e.r}};
  auto v = is_p_isolated(g, p);
  const bool divides = !v.degenerate;
  j["p_divides_order"] = divides;
  j["isolated"] = v.isolated;
  Subgroup s = sylow_subgroup(g, p);
  j["sylow"] = describe_subgroup(s);
  j["sylow_order"] = s.order();
  const bool ti = is_trivial_intersection(s);
  j["trivial_intersection"] = ti;
  j["weyl_order"] = weyl_group(g, s).order();
  if (g->order() > kRepresentationCap) {
    j["representation_theory"] = "skipped: |G| above the representation cap";
    return j;
  }
  GreenContext ctx(g, FiniteField::make(p, e.r), seed);
  auto cd = ctx.cartan(ctx.whole());
  const BigInt det = determinant(cd->cartan);
  BigInt rest = det;
  while (rest % p == 0 && rest != 0) rest /= p;
  j["cartan"] = to_json(cd->cartan);
  j["cartan_determinant"] = big_json(det);
  j["determinant_is_p_power"] = rest == 1;
  j["simples"] = cd->simples.size();
  const FgAbelianGroup sk = ctx.sk(ctx.whole()).group();
  j["sk"] = to_json(sk);
  if (divides) {
    auto cat = orbit_category_p(g, p);
    const FgAbelianGroup col = colimit(sk_diagram(ctx, cat));
    j["colimit"] = to_json(col);
    j["colimit_matches_sk"] = col == sk;
    const FgAbelianGroup red = colimit(sk_diagram(ctx, cofinal_reduction(g, p)));
    j["reduced_colimit"] = to_json(red);
    auto surj = induction_surjectivity(ctx, p_subgroup_family(g, p));
    j["induction_surjective"] = surj.surjective;
    j["induction_cokernel"] = to_json(surj.cokernel);
    if (ti) {
      j["weyl_coinvariants"] = to_json(weyl_coinvariants(ctx, s));
    } else {
      j["weyl_coinvariants"] = "refused: Sylow subgroup is not trivial intersection";
    }
    if (v.isolated && s.order() == p) j["table"] = to_json(sylp_table(g, p, e.r, n_max, nullptr, seed));
  }
  if (mackey && g->order() <= kMackeyOrderCap) {
    auto [checked, passed] = mackey_suite(ctx);
    j["mackey"] = {{"checked", checked}, {"passed", passed}};
  }
  return j;
}

json run_zoo(const std::vector<ZooEntry>& entries, std::uint64_t seed, unsigned n_max, unsigned jobs, bool mackey) {
  std::vector<json> results(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        results[i] = run_zoo_entry(entries[i], seed, n_max, mackey);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::size_t isolated = 0, matched = 0, surjective = 0, det_ok = 0, det_total = 0;
  for (const auto& r : results) {
    if (r.contains("determinant_is_p_power")) {
      ++det_total;
      det_ok += r["determinant_is_p_power"].get<bool>();
    }
    if (r.value("isolated", false) && r.value("p_divides_order", false) && r.contains("colimit_matches_sk")) {
      ++isolated;
      matched += r["colimit_matches_sk"].get<bool>();
      surjective += r["induction_surjective"].get<bool>();
    }
  }
  json summary{{"entries", results.size()},
               {"isolated_entries", isolated},
               {"colimit_matches", matched},
               {"surjective", surjective},
               {"cartan_entries", det_total},
               {"determinant_p_power", det_ok}};
  return {{"schema", kReportSchema}, {"command", "zoo"}, {"seed", seed}, {"entries", results}, {"summary", summary}};
}

}  // namespace ksg
