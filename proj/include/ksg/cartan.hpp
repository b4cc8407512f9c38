#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ksg/meataxe.hpp"
#include "ksg/smith.hpp"

namespace ksg {

struct SimpleModule {
  GModule module;
  std::size_t endo_degree = 1;
  std::size_t id = 0;
  bool is_trivial = false;
  std::vector<std::vector<FiniteField::Elem>> fingerprint;
};

// An element of kG as coefficients over the enumerated group elements.
using GroupAlgebraElement = std::vector<FiniteField::Elem>;

GroupAlgebraElement algebra_multiply(const FiniteField& f, const FiniteGroup& g,
                                     const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// Simples of kG, found as the composition factors of Ind_S^G k for a Sylow
// p-subgroup S (every simple is a quotient of it), in registry order:
// dimension, trivial first, fingerprint, discovery order.
std::vector<SimpleModule> simple_modules(const GroupPtr& g, const FieldPtr& f, Rng& rng);

// Position of the registry simple isomorphic to irreducible s.
std::size_t simple_index(const std::vector<SimpleModule>& simples, const GModule& s, Rng& rng);
// Composition multiplicities of m in the registry basis (chop).
std::vector<std::size_t> class_in_g0(const std::vector<SimpleModule>& simples, const GModule& m, Rng& rng);

// Rows: basis of J(kG) = intersection of the annihilators of the simples.
// Checks the Wedderburn dimension count.
FqMatrix radical(const GroupPtr& g, const FieldPtr& f, const std::vector<SimpleModule>& simples);
// Least N with J^N = 0; InternalError if J is not nilpotent.
std::size_t nilpotency_index(const GroupPtr& g, const FieldPtr& f, const FqMatrix& j);

// rad(m) = intersection of kernels of all maps m -> S.
EchelonSpace module_radical(const GModule& m, const std::vector<SimpleModule>& simples);
// Dimensions of m, rad m, rad^2 m, ..., 0.
std::vector<std::size_t> radical_series(const GModule& m, const std::vector<SimpleModule>& simples);

struct CartanData {
  GroupPtr group;
  FieldPtr field;
  std::uint64_t seed = 0;
  std::vector<SimpleModule> simples;
  FqMatrix radical;
  std::size_t nilpotency = 0;
  // Primitive orthogonal idempotents summing to 1, and the simple each
  // one's projective cover has as top.
  std::vector<GroupAlgebraElement> idempotents;
  std::vector<std::size_t> idempotent_simple;
  // For each simple i, P_i = e kG for the first idempotent e with top S_i.
  std::vector<GModule> projectives;
  std::vector<std::size_t> projective_dims;
  // c_ij = multiplicity of S_j as a composition factor of P_i.
  IntMatrix cartan;
};

// Full pipeline. |G| must be within the representation cap.
CartanData compute_cartan(const GroupPtr& g, const FieldPtr& f, std::uint64_t seed = Rng::kDefaultSeed,
                          std::size_t cap = kRepresentationCap);

// Memoised by (group hash, generators, p, r, seed); thread safe. When a cache
// directory is configured the data is also persisted there.
std::shared_ptr<const CartanData> cartan_data(const GroupPtr& g, const FieldPtr& f,
                                              std::uint64_t seed = Rng::kDefaultSeed);
void clear_cartan_memo();
// The same data over an identical enumeration held by another pointer.
CartanData rebase(const CartanData& cd, const GroupPtr& g);

// Key used for the memo and the on-disk cache.
std::string group_key(const FiniteGroup& g);

}  // namespace ksg
