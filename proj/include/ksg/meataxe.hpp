#pragma once

#include <optional>
#include <vector>

#include "ksg/module.hpp"

namespace ksg {

// A proper nonzero invariant subspace, or nullopt when m is irreducible.
// Throws RetryExhausted if the random search neither splits nor certifies.
std::optional<EchelonSpace> find_submodule(const GModule& m, Rng& rng);
bool is_irreducible(const GModule& m, Rng& rng);

// Every irreducible subquotient of a composition series, in discovery order.
std::vector<GModule> composition_factors(const GModule& m, Rng& rng);

struct CompositionFactor {
  GModule module;
  std::size_t multiplicity;
};
// Isomorphism class representatives with multiplicities; sum of
// multiplicity * dim equals m.dim.
std::vector<CompositionFactor> chop(const GModule& m, Rng& rng);

// Basis of Hom_kG(a, b): matrices T with a.action[k] T = T b.action[k].
std::vector<FqMatrix> hom_space(const GModule& a, const GModule& b);
// An invertible intertwiner when a and b are isomorphic. Exact when either is
// irreducible; otherwise a randomized search over Hom(a, b).
std::optional<FqMatrix> is_isomorphic(const GModule& a, const GModule& b, Rng& rng);
// d with End(s) = F_{q^d}, for irreducible s.
std::size_t endo_degree(const GModule& s);

// Characteristic polynomials of fixed algebra elements; isomorphism
// invariant, used to order simples reproducibly.
std::vector<std::vector<FiniteField::Elem>> fingerprint(const GModule& m);

}  // namespace ksg
