#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ksg/group.hpp"
#include "ksg/named_groups.hpp"

namespace ksg {

// Growth algorithm: start from a cyclic p-subgroup of largest order, extend
// by p-elements of the normalizer until the p-part is reached.
Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p);

struct PrimeGraph {
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  // q < r, sorted
  bool adjacent(std::uint64_t q, std::uint64_t r) const;
};
PrimeGraph prime_graph(const FiniteGroup& g);

struct IsolationVerdict {
  bool isolated = true;
  bool degenerate = false;  // p does not divide |G|
  bool by_element_orders = true;
  bool by_p_centralizers = true;
  bool by_regular_centralizers = true;
};
// Three independent routines; throws InternalError if they disagree.
IsolationVerdict is_p_isolated(const GroupPtr& g, std::uint64_t p);

bool is_trivial_intersection(const Subgroup& s);

// N / S for S normal in N.
struct QuotientGroup {
  Subgroup ambient;
  Subgroup normal;
  std::vector<std::size_t> cosets;         // least parent index of each coset
  std::vector<std::vector<std::size_t>> table;
  GroupPtr regular_rep;
  std::vector<std::size_t> coset_index;    // parent index -> coset, or npos outside N

  std::size_t order() const { return cosets.size(); }
};
QuotientGroup quotient(const Subgroup& ambient, const Subgroup& normal);

QuotientGroup weyl_group(const GroupPtr& g, const Subgroup& s);
// One permutation of S's own element indices per coset representative:
// s -> w s w^-1.
std::vector<Permutation> weyl_action_on(const QuotientGroup& w);
// Every orbit of the action on S \ {e} has size |W|.
bool weyl_action_is_free(const QuotientGroup& w);

struct FrobeniusVerdict {
  bool free = false;       // every nontrivial h fixes only e in K
  bool certified = false;  // free and one of the coprimality hypotheses holds
  std::optional<bool> kernel_is_p_group;  // which hypothesis applied
};
// When certified, the product is built and checked to be p-isolated with
// trivial intersection Sylows; a failed check is an InternalError.
FrobeniusVerdict is_frobenius_pair(const SemidirectAction& action, std::uint64_t p);

}  // namespace ksg
