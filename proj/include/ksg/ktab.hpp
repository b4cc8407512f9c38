#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksg/group.hpp"
#include "ksg/rng.hpp"
#include "ksg/smith.hpp"

namespace ksg {

struct KTableRow {
  unsigned n = 0;
  FgAbelianGroup group;
  std::string formula;     // symbolic value, e.g. "k^{2i}" or "Z/(q^i-1)"
  std::string provenance;  // which closed form produced the row, or "computed"
};

struct KTable {
  std::string subject;  // e.g. "K_n(F_25[D5]; Z_5)"
  std::string group_label;
  std::uint64_t p = 0;
  unsigned r = 1;
  unsigned n_max = 0;
  std::vector<KTableRow> rows;
  std::vector<std::string> notes;
};

inline constexpr unsigned kDefaultNMax = 20;

// K_n(F_q): Z, Z/(q^i - 1) at n = 2i - 1, 0 at even n > 0.
FgAbelianGroup quillen_k(const BigInt& q, unsigned n);

// G_n(kG) as the sum over simples V of K_n(End(V)).
KTable g_theory_table(const GroupPtr& g, std::uint64_t p, unsigned r, unsigned n_max = kDefaultNMax,
                      std::uint64_t seed = Rng::kDefaultSeed);

struct SylpFacts {
  std::size_t weyl_order = 0;
  std::uint64_t exponent = 0;  // (p - 1) / |W|
  // "checked": S_k(G) and the Weyl coinvariants both equal Z/p; "skipped"
  // when |G| is above the representation cap.
  std::string gate;
};

// p-adic K-groups of a p-isolated group with Sylow of order p: k^{m i} at
// n = 2i - 1, m = (p - 1)/|W|, as (Z/p)^{r m i}. HypothesisError otherwise.
KTable sylp_table(const GroupPtr& g, std::uint64_t p, unsigned r, unsigned n_max = kDefaultNMax,
                  SylpFacts* facts = nullptr, std::uint64_t seed = Rng::kDefaultSeed);
// The symbolic row value for exponent m: "k^i", "k^{2i}", ...
std::string sylp_formula(std::uint64_t m);

// Number of p-regular conjugacy classes of Sigma_n, from cycle types.
std::size_t p_regular_partitions(unsigned n, std::uint64_t p);

// K_n(F_{p^r} Sigma_p): Z^c, (Z/(p^{ri}-1))^c + (Z/p)^{ri} at n = 2i - 1, 0 otherwise.
KTable integral_sigma_p_table(std::uint64_t p, unsigned r, unsigned n_max = kDefaultNMax);

struct ReductionEdge {
  std::size_t source = 0, target = 0;
  std::size_t count = 0;  // parallel morphisms
};

struct ReductionReport {
  std::string group_label;
  std::size_t order = 0;
  std::uint64_t p = 0;
  unsigned r = 1;
  bool isolated = false;
  bool applicable = false;
  std::string sylow;  // structural name
  std::size_t sylow_order = 0;
  bool trivial_intersection = false;
  std::size_t weyl_order = 0;
  std::string shape;  // "table", "coinvariants", "colimit", "inapplicable"
  std::string statement;
  // Reduced index category.
  std::vector<std::string> objects;     // structural names
  std::vector<std::string> node_values;  // symbolic, e.g. "K_n(kC2^2; Z_2)"
  std::vector<ReductionEdge> edges;
  // S_k-level evidence (empty when above the representation cap).
  std::optional<FgAbelianGroup> sk_group, sk_colimit, sk_reduced_colimit, sk_coinvariants;
  std::optional<KTable> table;
  // Fallback when not p-isolated.
  std::vector<std::string> hyperelementary_classes;
  std::optional<bool> hyperelementary_surjective;
};

ReductionReport reduction_report(const GroupPtr& g, std::uint64_t p, unsigned r, unsigned n_max = kDefaultNMax,
                                 std::uint64_t seed = Rng::kDefaultSeed);

// Hyperelementary: C x| Q with C cyclic normal of order prime to q, Q a q-group.
bool is_hyperelementary(const Subgroup& h);

}  // namespace ksg
