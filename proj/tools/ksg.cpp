// ksg: batch front end over the library. One subcommand per operation
// family; every report carries the seed it was computed with.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ksg/cache.hpp"
#include "ksg/cartan.hpp"
#include "ksg/error.hpp"
#include "ksg/green.hpp"
#include "ksg/isolation.hpp"
#include "ksg/ktab.hpp"
#include "ksg/named_groups.hpp"
#include "ksg/numtheory.hpp"
#include "ksg/orbit.hpp"
#include "ksg/report.hpp"
#include "ksg/zoo.hpp"

using namespace ksg;

namespace {

enum Exit : int {
  kOk = 0,
  kUnexpected = 1,
  kMalformed = 2,
  kCap = 3,
  kRefused = 4,
  kInternal = 5,
};

struct Job {
  std::string command;
  std::string group, group_file;
  std::uint64_t p = 0;
  unsigned r = 1;
  std::uint64_t seed = Rng::kDefaultSeed;
  unsigned n_max = kDefaultNMax;
  std::string format = "text";
  std::string cache_dir;
  unsigned jobs = 1;
  std::string kind = "sylp";
  bool no_mackey = false;
};

struct Output {
  json result;
  std::string text;
  std::optional<std::string> csv;
};

GroupPtr load_group(const Job& job) {
  if (!job.group.empty() && !job.group_file.empty()) throw SpecError("give either --group or --group-file, not both");
  if (!job.group_file.empty()) {
    std::ifstream in(job.group_file);
    if (!in) throw SpecError("cannot read group file " + job.group_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_json(ss.str());
  }
  if (job.group.empty()) throw SpecError("--group or --group-file is required");
  return parse_group_spec(job.group);
}

void require_prime(const Job& job) {
  if (job.p == 0) throw SpecError("--p is required");
  if (!is_prime(job.p)) throw SpecError("p = " + std::to_string(job.p) + " is not prime");
  if (job.r == 0) throw SpecError("--r must be at least 1");
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Output cmd_prime_graph(const Job& job) {
  GroupPtr g = load_group(job);
  PrimeGraph pg = prime_graph(*g);
  std::string text = "vertices:";
  for (auto v : pg.vertices) text += " " + std::to_string(v);
  text += "\nedges:";
  for (auto [a, b] : pg.edges) text += " " + std::to_string(a) + "-" + std::to_string(b);
  return {to_json(pg), text + "\n"};
}

Output cmd_isolate(const Job& job) {
  require_prime(job);
  GroupPtr g = load_group(job);
  auto v = is_p_isolated(g, job.p);
  json j{{"isolated", v.isolated},
         {"p_divides_order", !v.degenerate},
         {"routines",
          {{"element_orders", v.by_element_orders},
           {"p_centralizers", v.by_p_centralizers},
           {"regular_centralizers", v.by_regular_centralizers}}}};
  std::string text = yes_no(v.isolated) + "\n";
  if (v.degenerate) text += "  p does not divide |G|\n";
  return {j, text};
}

Output cmd_sylow(const Job& job) {
  require_prime(job);
  GroupPtr g = load_group(job);
  Subgroup s = sylow_subgroup(g, job.p);
  const bool ti = is_trivial_intersection(s);
  const std::size_t w = weyl_group(g, s).order();
  json j{{"structure", describe_subgroup(s)},
         {"order", s.order()},
         {"members", s.members()},
         {"trivial_intersection", ti},
         {"weyl_order", w}};
  std::ostringstream os;
  os << describe_subgroup(s) << " (order " << s.order() << ")\n"
     << "  trivial intersection: " << yes_no(ti) << "\n"
     << "  |W| = " << w << "\n";
  return {j, os.str()};
}

Output cmd_cartan(const Job& job) {
  require_prime(job);
  GroupPtr g = load_group(job);
  auto cd = cartan_data(g, FiniteField::make(job.p, job.r), job.seed);
  std::ostringstream os;
  os << "simples:";
  for (const auto& s : cd->simples) os << " " << s.module.dim << (s.endo_degree > 1 ? "*" : "");
  os << "\ncartan:\n";
  for (std::size_t i = 0; i < cd->cartan.rows(); ++i) {
    os << " ";
    for (std::size_t k = 0; k < cd->cartan.cols(); ++k) os << " " << cd->cartan.at(i, k);
    os << "\n";
  }
  os << "determinant: " << determinant(cd->cartan) << "\n";
  os << "nilpotency index: " << cd->nilpotency << "\n";
  os << "S_k = " << cokernel(cd->cartan.transpose()).to_string() << "\n";
  return {cartan_json(*cd), os.str()};
}

Output cmd_sk(const Job& job) {
  require_prime(job);
  GroupPtr g = load_group(job);
  GreenContext ctx(g, FiniteField::make(job.p, job.r), job.seed);
  const auto& lvl = ctx.sk(ctx.whole());
  json j{{"sk", to_json(lvl.group())}, {"simples", lvl.rank}};
  return {j, lvl.group().to_string() + "\n"};
}

Output cmd_green_check(const Job& job) {
  require_prime(job);
  GroupPtr g = load_group(job);
  GreenContext ctx(g, FiniteField::make(job.p, job.r), job.seed);
  json j;
  std::ostringstream os;
  bool ok = true;
  if (g->order() <= kMackeyOrderCap) {
    auto [checked, passed] = mackey_suite(ctx);
    j["mackey"] = {{"checked", checked}, {"passed", passed}};
    ok = checked == passed;
    os << "mackey: " << passed << "/" << checked << "\n";
  } else {
    j["mackey"] = "skipped: |G| above " + std::to_string(kMackeyOrderCap);
    os << "mackey: skipped (|G| > " << kMackeyOrderCap << ")\n";
  }
  auto family = p_subgroup_family(g, job.p);
  auto surj = induction_surjectivity(ctx, family);
  const bool isolated = is_p_isolated(g, job.p).isolated;
  j["isolated"] = isolated;
  j["induction_surjective"] = surj.surjective;
  j["induction_cokernel"] = to_json(surj.cokernel);
  os << "induction from p-subgroups surjective: " << yes_no(surj.surjective);
  if (!surj.surjective) os << " (cokernel " << surj.cokernel.to_string() << ")";
  os << "\n";
  try {
    json base = json::array();
    os << "defect base:";
    for (const auto& h : defect_base(ctx)) {
      base.push_back({{"structure", describe_subgroup(h)}, {"order", h.order()}});
      os << " " << describe_subgroup(h);
    }
    os << "\n";
    j["defect_base"] = base;
  } catch (const CapExceeded& e) {
    j["defect_base"] = std::string("skipped: ") + e.what();
    os << "\n  skipped: " << e.what() << "\n";
  }
  if (!ok) throw InternalError("Mackey formula failed on " + j["mackey"].dump());
  if (isolated && !surj.surjective)
    throw InternalError("induction from p-subgroups not surjective on a p-isolated group");
  return {j, (ok ? "PASS\n" : "FAIL\n") + os.str()};
}

Output cmd_colimit_check(const Job& job) {
  require_prime(job);
  GroupPtr g = load_group(job);
  GreenContext ctx(g, FiniteField::make(job.p, job.r), job.seed);
  const FgAbelianGroup sk = ctx.sk(ctx.whole()).group();
  auto cat = orbit_category_p(g, job.p);
  auto d = sk_diagram(ctx, cat);
  const FgAbelianGroup col = colimit(d);
  const bool isolated = is_p_isolated(g, job.p).isolated;
  const bool match = col == sk;
  json j{{"match", match},
         {"isolated", isolated},
         {"sk", to_json(sk)},
         {"colimit", to_json(col)},
         {"diagram", diagram_json(cat, d, col)}};
  if (isolated && !match)
    throw InternalError("colimit " + col.to_string() + " differs from S_k(G) " + sk.to_string() +
                        " on a p-isolated group");
  std::string text = match ? "MATCH (both sides " + sk.to_string() + ")\n"
                           : "MISMATCH (colimit " + col.to_string() + ", S_k(G) " + sk.to_string() + ")\n";
  if (!isolated) text += "  G is not p-isolated\n";
  return {j, text};
}

Output table_output(const KTable& t, json extra = json::object()) {
  json j = to_json(t);
  for (auto& [k, v] : extra.items()) j[k] = v;
  return {j, ktable_text(t), ktable_csv(t)};
}

Output cmd_k_table(const Job& job) {
  require_prime(job);
  if (job.kind == "integral-sigma-p") return table_output(integral_sigma_p_table(job.p, job.r, job.n_max));
  GroupPtr g = load_group(job);
  if (job.kind == "g-theory") return table_output(g_theory_table(g, job.p, job.r, job.n_max, job.seed));
  SylpFacts facts;
  KTable t = sylp_table(g, job.p, job.r, job.n_max, &facts, job.seed);
  return table_output(t, {{"weyl_order", facts.weyl_order}, {"exponent", facts.exponent}, {"gate", facts.gate}});
}

Output cmd_reduce(const Job& job) {
  require_prime(job);
  GroupPtr g = load_group(job);
  auto r = reduction_report(g, job.p, job.r, job.n_max, job.seed);
  return {to_json(r), reduction_text(r)};
}

std::string zoo_line(const json& e) {
  std::ostringstream os;
  os << e["group"].get<std::string>() << " p=" << e["p"] << " r=" << e["r"]
     << " isolated=" << yes_no(e["isolated"].get<bool>());
  if (e.contains("sk")) os << " S_k=" << e["sk"]["text"].get<std::string>();
  if (e.contains("colimit")) os << " colim=" << e["colimit"]["text"].get<std::string>();
  if (e.contains("induction_surjective")) os << " surjective=" << yes_no(e["induction_surjective"].get<bool>());
  if (e.contains("mackey")) os << " mackey=" << e["mackey"]["passed"] << "/" << e["mackey"]["checked"];
  if (e.contains("representation_theory")) os << " (above representation cap)";
  return os.str();
}

json envelope(const Job& job, const GroupPtr& g, const json& result) {
  json j{{"schema", kReportSchema}, {"command", job.command}, {"seed", job.seed}};
  if (g) {
    j["group"] = g->label();
    j["order"] = g->order();
    j["spec"] = job.group.empty() ? job.group_file : job.group;
  }
  if (job.p) j["p"] = job.p;
  j["r"] = job.r;
  j["result"] = result;
  return j;
}

int run(const Job& job) {
  if (!job.cache_dir.empty()) set_cache_dir(job.cache_dir);
  if (job.command == "zoo") {
    if (job.format == "csv") throw SpecError("csv output is only available for k-table");
    json z = run_zoo(zoo_entries(), job.seed, job.n_max, job.jobs, !job.no_mackey);
    if (job.format == "json") {
      std::cout << dump(z);
    } else {
      for (const auto& e : z["entries"]) std::cout << zoo_line(e) << "\n";
      std::cout << "summary: " << z["summary"].dump() << "\nseed: " << job.seed << "\n";
    }
    return kOk;
  }
  Output out;
  if (job.command == "prime-graph") out = cmd_prime_graph(job);
  else if (job.command == "isolate") out = cmd_isolate(job);
  else if (job.command == "sylow") out = cmd_sylow(job);
  else if (job.command == "cartan") out = cmd_cartan(job);
  else if (job.command == "sk") out = cmd_sk(job);
  else if (job.command == "green-check") out = cmd_green_check(job);
  else if (job.command == "colimit-check") out = cmd_colimit_check(job);
  else if (job.command == "k-table") out = cmd_k_table(job);
  else if (job.command == "reduce") out = cmd_reduce(job);
  else throw SpecError("unknown command " + job.command);

  if (job.format == "csv") {
    if (!out.csv) throw SpecError("csv output is only available for k-table");
    std::cout << *out.csv;
  } else if (job.format == "json") {
    GroupPtr g;
    if (!(job.command == "k-table" && job.kind == "integral-sigma-p")) g = load_group(job);
    std::cout << dump(envelope(job, g, out.result));
  } else {
    std::cout << out.text << "seed: " << job.seed << "\n";
  }
  return kOk;
}

int fail(const char* kind, const std::string& msg, int code) {
  std::string line = msg;
  for (auto& c : line)
    if (c == '\n') c = ' ';
  std::cerr << "error: " << kind << ": " << line << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ksg: p-isolated finite groups, Cartan levels and orbit-category colimits"};
  app.fallthrough();
  app.require_subcommand(1);
  Job job;

  app.add_option("--group", job.group, "group spec, e.g. symmetric:4, psl2:7, cyclic:2*cyclic:4");
  app.add_option("--group-file", job.group_file, "JSON file with permutation generators");
  app.add_option("--p", job.p, "prime");
  app.add_option("--r", job.r, "field degree, k = F_{p^r}")->capture_default_str();
  app.add_option("--seed", job.seed, "RNG seed")->capture_default_str();
  app.add_option("--n-max", job.n_max, "last K-group degree in tables")->capture_default_str();
  app.add_option("--format", job.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--cache-dir", job.cache_dir, "Cartan cache directory")->envname("KSG_CACHE_DIR");
  app.add_option("--jobs", job.jobs, "worker threads for zoo")->capture_default_str();

  const std::pair<const char*, const char*> commands[] = {
      {"prime-graph", "prime graph of G"},
      {"isolate", "is G p-isolated (three independent routines)"},
      {"sylow", "Sylow p-subgroup, trivial intersection, Weyl group order"},
      {"cartan", "simples, Cartan matrix and S_k(G) over F_{p^r}"},
      {"sk", "S_k(G) = coker of the Cartan map"},
      {"green-check", "Mackey formula suite, induction surjectivity, defect base"},
      {"colimit-check", "colimit of S_k over O_p(G) against S_k(G)"},
      {"k-table", "K-group tables"},
      {"reduce", "reduction report for K(kG; Z_p)"},
      {"zoo", "full acceptance matrix over the built-in groups"},
  };
  for (auto [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&job, n = std::string(name)] { job.command = n; });
    if (std::string(name) == "k-table")
      sub->add_option("--kind", job.kind, "sylp | g-theory | integral-sigma-p")
          ->check(CLI::IsMember({"sylp", "g-theory", "integral-sigma-p"}))
          ->capture_default_str();
    if (std::string(name) == "zoo") sub->add_flag("--no-mackey", job.no_mackey, "skip the Mackey suite");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("malformed-spec", e.what(), kMalformed);
  }

  try {
    return run(job);
  } catch (const CapExceeded& e) {
    return fail(e.kind(), e.what(), kCap);
  } catch (const HypothesisError& e) {
    return fail(e.kind(), e.what(), kRefused);
  } catch (const InternalError& e) {
    return fail(e.kind(), e.what(), kInternal);
  } catch (const SpecError& e) {
    return fail(e.kind(), e.what(), kMalformed);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), kUnexpected);
  } catch (const std::exception& e) {
    return fail("unexpected", e.what(), kUnexpected);
  }
}
