#pragma once

#include <utility>
#include <vector>

#include "ksg/fqmatrix.hpp"
#include "ksg/group.hpp"
#include "ksg/rng.hpp"

namespace ksg {

// Right kG-module on row vectors: v -> v * action[k] for generator k.
struct GModule {
  GroupPtr group;
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<FqMatrix> action;

  GModule() = default;
  // Checks shapes and invertibility of the generator matrices.
  GModule(GroupPtr g, FieldPtr f, std::size_t dim, std::vector<FqMatrix> action);
};

inline constexpr std::size_t kRepresentationCap = 500;

// Matrix of every group element, built along the word tree.
std::vector<FqMatrix> element_matrices(const GModule& m);
// Word evaluation must be a homomorphism: compares M(a) M(b) with M(ab) on
// random pairs. Throws SpecError on failure.
void check_homomorphism(const GModule& m, Rng& rng, int samples = 16);

GModule regular_module(const GroupPtr& g, const FieldPtr& f, std::size_t cap = kRepresentationCap);
GModule trivial_module(const GroupPtr& g, const FieldPtr& f);
GModule tensor(const GModule& a, const GModule& b);
GModule dual(const GModule& m);
GModule direct_sum(const GModule& a, const GModule& b);
// Same module in the basis given by the rows of p: action p A p^-1.
GModule base_change(const GModule& m, const FqMatrix& p);

// Module over `target` in which target generator k acts as source element
// gen_images[k] acts on m.
GModule pullback(const GModule& m, const GroupPtr& target, const std::vector<std::size_t>& gen_images);

// m is a module over h.parent(); result is over h.group().
GModule restrict(const Subgroup& h, const GModule& m);
// m is a module over h.group(); result is over h.parent(). Basis m_i (x) t
// for t in the right transversal of h, blocks ordered by coset.
GModule induce(const Subgroup& h, const GModule& m);
// m is a module over h.group(); result is a module over the own group of
// g h g^-1 (returned alongside) where x acts as g^-1 x g did.
std::pair<Subgroup, GModule> conjugate_module(const Subgroup& h, std::size_t g, const GModule& m);

// Submodule spanned by an invariant subspace, in its echelon basis.
GModule submodule(const GModule& m, const EchelonSpace& w);
// Quotient by an invariant subspace, on the non-pivot coordinates.
GModule quotient_module(const GModule& m, const EchelonSpace& w);

// Spin of the rows of seeds under the generators.
EchelonSpace spin(const GModule& m, const FqMatrix& seeds);
// Same, under the transposed generators.
EchelonSpace spin_transposed(const GModule& m, const FqMatrix& seeds);

}  // namespace ksg
