#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksg/report.hpp"

namespace ksg {

struct ZooEntry {
  std::string group;  // group spec, e.g. "symmetric:4"
  std::uint64_t p = 2;
  unsigned r = 1;
};

// The built-in group list crossed with the primes dividing each order, plus
// a few coprime characteristics and the F_4 run of C6.
std::vector<ZooEntry> zoo_entries();
// The p-isolated pairs the colimit identity is checked on.
std::vector<ZooEntry> isolated_zoo();

inline constexpr std::size_t kMackeyOrderCap = 48;

// One entry of the zoo report: isolation data, Cartan facts, S_k(G), the
// colimit over O_p(G), surjectivity, coinvariants, and the closed-form
// table where it applies. Fields that would exceed the representation cap
// are reported as skipped.
json run_zoo_entry(const ZooEntry& e, std::uint64_t seed, unsigned n_max, bool mackey);

// Runs entries on `jobs` worker threads; output order follows `entries`.
json run_zoo(const std::vector<ZooEntry>& entries, std::uint64_t seed, unsigned n_max, unsigned jobs, bool mackey);

// Mackey formula over all subgroup pairs with the trivial module and one
// nontrivial module per source subgroup. Returns {checked, passed}.
std::pair<std::size_t, std::size_t> mackey_suite(GreenContext& ctx);

}  // namespace ksg
