#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksg/group.hpp"

namespace ksg {

GroupPtr trivial_group();
GroupPtr cyclic(std::size_t n);
// Order 2n, acting on n points (n >= 3); D_1 = C_2 and D_2 = C_2 x C_2.
GroupPtr dihedral(std::size_t n);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
GroupPtr quaternion8();
// x -> ax + b on F_p.
GroupPtr agl1(std::uint64_t p);
// Linear fractional maps on the projective line over F_p, infinity = p.
GroupPtr psl2(std::uint64_t p);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// Action of H on K given per generator of H as a permutation of K's element
// indices. Read as a right action k -> k^h, so the product on pairs is
// (h1, k1)(h2, k2) = (h1 h2, k1^h2 k2).
struct SemidirectAction {
  GroupPtr k;
  GroupPtr h;
  std::vector<Permutation> generator_images;
  // Image permutation of every element of h, extended along words.
  // Throws SpecError when the data is not a homomorphism H -> Aut(K).
  std::vector<Permutation> extend() const;
};

// Built on the set H x K, index h*|K| + k, by the right regular action.
GroupPtr semidirect_product(const SemidirectAction& action, std::string label = {});

// C_3^2 x| Q_8, Q_8 acting freely through SL_2(F_3).
SemidirectAction m9_action();
GroupPtr m9();

// Inversion action of C_2 on C_n.
SemidirectAction inversion_action(std::size_t n);
// Full automorphism group C_{p-1} of C_p, generated by a primitive root.
SemidirectAction full_automorphism_action(std::uint64_t p);

std::uint64_t primitive_root(std::uint64_t p);

// "symmetric:4", "psl2:7", "cyclic:2*cyclic:4", "quaternion8", "m9", ...
GroupPtr parse_group_spec(const std::string& spec);
// {"named": "symmetric", "n": 4} or {"named": "symmetric:4"} or
// {"degree": n, "generators": [[images], ...], "label": "..."}.
GroupPtr parse_group_json(const std::string& text);

}  // namespace ksg
