#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ksg/perm.hpp"

namespace ksg {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A permutation group with every element enumerated.
//
// Elements are ordered breadth first by word length in the generators, ties
// broken by lexicographic image sequence, so element 0 is the identity and
// every downstream basis built from the element list is reproducible. Each
// element other than the identity records the word-tree edge it was found
// along: element(i) == element(word_parent(i)) * generator(word_generator(i)).
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;
  static constexpr std::size_t kTableLimit = 2048;

  static GroupPtr enumerate(std::size_t degree, std::vector<Permutation> generators,
                            std::string label = {}, std::size_t cap = kDefaultCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  // Element index of generator k.
  std::size_t generator_index(std::size_t k) const { return gen_index_[k]; }

  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const Permutation& g) const;
  // Throws SpecError when g is not an element.
  std::size_t index_checked(const Permutation& g) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  // g * x * g^-1
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(std::size_t a) const { return elements_[a].order(); }

  std::size_t word_parent(std::size_t i) const { return parent_[i]; }
  std::size_t word_generator(std::size_t i) const { return parent_gen_[i]; }
  // Generator indices whose left-to-right product is element i.
  std::vector<std::size_t> word(std::size_t i) const;

  // FNV-1a over the ordered element list; used as a cache key.
  const std::string& hash() const { return hash_; }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::string label_;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> gen_index_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;
  std::string hash_;
};

// A subgroup of an enumerated parent. Carries its own enumeration (group())
// whose element i sits at parent index to_parent(i).
class Subgroup {
 public:
  // members: parent indices forming a subgroup (closure is verified).
  Subgroup(GroupPtr parent, std::vector<std::size_t> members);

  static Subgroup generated(GroupPtr parent, const std::vector<std::size_t>& generators);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const GroupPtr& group() const { return group_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(std::size_t parent_index) const { return mask_[parent_index]; }
  std::size_t to_parent(std::size_t own_index) const { return own_to_parent_[own_index]; }
  // Own-enumeration index of a parent index known to be a member.
  std::size_t to_own(std::size_t parent_index) const;
  // Parent indices of the chosen generators.
  const std::vector<std::size_t>& generator_indices() const { return gens_; }

  bool is_subgroup_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  GroupPtr parent_;
  std::vector<std::size_t> members_;
  std::vector<bool> mask_;
  std::vector<std::size_t> gens_;
  GroupPtr group_;
  std::vector<std::size_t> own_to_parent_;
};

// Closure of a set of parent indices (sorted member list).
std::vector<std::size_t> closure(const FiniteGroup& g, const std::vector<std::size_t>& generators);

// Conjugacy classes as sorted index lists, ordered by least member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& set);
Subgroup centralizer(const GroupPtr& g, std::size_t x);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
// g * H * g^-1
Subgroup conjugate(const Subgroup& h, std::size_t g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

struct ConjugacyWitness {
  bool conjugate = false;
  std::optional<std::size_t> witness;  // g with g H g^-1 = K
};
ConjugacyWitness is_conjugate_subgroups(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

// Least element of each right coset H g, in increasing order.
std::vector<std::size_t> right_transversal(const Subgroup& h);
// Least element of each double coset K g H, in increasing order.
std::vector<std::size_t> double_coset_reps(const Subgroup& k, const Subgroup& h);

// Every subgroup (or every p-subgroup when p != 0), sorted by order then by
// member list.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::uint64_t p = 0);

struct SubgroupClass {
  Subgroup representative;  // the conjugate with the least member list
  std::size_t size;         // number of conjugates
};
// Conjugacy classes of subgroups (p-subgroups when p != 0), sorted like
// all_subgroups by representative.
std::vector<SubgroupClass> subgroup_classes(const GroupPtr& g, std::uint64_t p = 0);

}  // namespace ksg
