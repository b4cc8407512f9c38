#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksg/green.hpp"

namespace ksg {

// A morphism G/H -> G/K, aH -> a g K, for g in the transporter N_G(H, K);
// rep is the least element of the coset K g.
struct OrbitMorphism {
  std::size_t source = 0, target = 0;
  std::size_t rep = 0;
};

// Full subcategory of the orbit category on one representative per
// conjugacy class of the chosen subgroups.
struct OrbitCategoryP {
  GroupPtr group;
  std::uint64_t p = 0;
  std::vector<Subgroup> objects;
  std::vector<OrbitMorphism> morphisms;  // sorted by (source, target, rep)
  std::vector<std::size_t> offsets;      // hom(i, j) = [offsets[i n + j], offsets[i n + j + 1])

  // Morphisms source -> target, as indices into `morphisms`.
  std::vector<std::size_t> hom(std::size_t source, std::size_t target) const;
  // Index of the morphism source -> target represented by g in G.
  std::size_t find(std::size_t source, std::size_t target, std::size_t g) const;
  // second o first.
  std::size_t compose(std::size_t first, std::size_t second) const;
  std::size_t identity(std::size_t object) const;
};

// Least element of the coset K g.
std::size_t coset_rep(const FiniteGroup& g, const Subgroup& k, std::size_t x);

OrbitCategoryP orbit_category(const GroupPtr& g, std::uint64_t p, std::vector<Subgroup> objects);
// O_p(G): all p-subgroups up to conjugacy.
OrbitCategoryP orbit_category_p(const GroupPtr& g, std::uint64_t p);

// Sylow p-subgroups closed under intersection (the trivial subgroup joins
// exactly when some two Sylows meet trivially).
std::vector<Subgroup> sylow_intersection_collection(const GroupPtr& g, std::uint64_t p);
// Checks that `collection` is closed under conjugation and intersection and
// that every p-subgroup lies in a member; SpecError otherwise.
void check_cofinal_collection(const GroupPtr& g, std::uint64_t p, const std::vector<Subgroup>& collection);
// Full subcategory on a cofinal collection (default: the Sylow
// intersection collection).
OrbitCategoryP cofinal_reduction(const GroupPtr& g, std::uint64_t p);
OrbitCategoryP cofinal_reduction(const GroupPtr& g, std::uint64_t p, const std::vector<Subgroup>& collection);

struct AbDiagramNode {
  std::string label;
  std::vector<std::size_t> members;
  std::vector<BigInt> moduli;  // canonical coordinates; 0 means Z
  FgAbelianGroup group;
};

struct AbDiagramEdge {
  std::size_t source = 0, target = 0;
  std::size_t rep = 0;
  IntMatrix map;  // target coordinates x source coordinates
};

struct AbDiagram {
  std::vector<AbDiagramNode> nodes;
  std::vector<AbDiagramEdge> edges;
};

// H -> S_k(H) with f_g acting as conjugation by g then induction. Checks a
// second coset representative per edge and functoriality on all composable
// pairs; InternalError on failure.
AbDiagram sk_diagram(GreenContext& ctx, const OrbitCategoryP& cat);
FgAbelianGroup colimit(const AbDiagram& d);

// S_k(S)_W for a trivial intersection Sylow S. HypothesisError otherwise.
FgAbelianGroup weyl_coinvariants(GreenContext& ctx, const Subgroup& s);

// Short structural name for small subgroups: e, C4, C2^2, D4, Q8, ...
std::string describe_subgroup(const Subgroup& h);

}  // namespace ksg
