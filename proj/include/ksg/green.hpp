#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ksg/cartan.hpp"
#include "ksg/smith.hpp"

namespace ksg {

// One level of R_k: the simples basis of G0(kH) and the Cartan image inside it.
struct G0Level {
  std::vector<std::size_t> subgroup;  // members in the ambient group
  std::size_t rank = 0;               // number of simples
  IntMatrix cartan_image;             // column i = class of P_i (transpose of the Cartan matrix)
};

// S_k(H) = G0(kH) / Cartan image, with its projection.
struct SkLevel {
  std::vector<std::size_t> subgroup;
  std::size_t rank = 0;
  std::shared_ptr<const Cokernel> cokernel;

  const FgAbelianGroup& group() const { return cokernel->group(); }
  std::vector<BigInt> project(const std::vector<BigInt>& x) const { return cokernel->project(x); }
};

struct GreenMap {
  enum class Level { g0, sk };
  Level level = Level::g0;
  std::vector<std::size_t> source, target;  // subgroup members in the ambient group
  // On G0: target simples x source simples. On S_k: canonical coordinates.
  IntMatrix matrix;
};

// Per-ambient-group state. Subgroups are canonicalised by member list so that
// modules and Cartan data for one subgroup always live over one group object.
// Not thread safe; use one context per worker.
class GreenContext {
 public:
  GreenContext(GroupPtr g, FieldPtr f, std::uint64_t seed = Rng::kDefaultSeed);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  Rng& rng() { return rng_; }

  const Subgroup& canonical(const Subgroup& h);
  const Subgroup& canonical(const std::vector<std::size_t>& members);
  const Subgroup& whole() { return canonical(Subgroup::whole(group_)); }

  std::shared_ptr<const CartanData> cartan(const Subgroup& h);
  const G0Level& g0(const Subgroup& h);
  const SkLevel& sk(const Subgroup& h);
  const SkLevel& sk(const std::vector<std::size_t>& members) { return sk(canonical(members)); }

  // Composition multiplicities of a module over canonical(h).group().
  std::vector<std::size_t> g0_class(const Subgroup& h, const GModule& m);

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::uint64_t seed_;
  Rng rng_;
  std::map<std::vector<std::size_t>, std::unique_ptr<Subgroup>> subgroups_;
  std::map<std::vector<std::size_t>, G0Level> g0_;
  std::map<std::vector<std::size_t>, SkLevel> sk_;
};

// Module transport between subgroups of one ambient group. m lives over
// h.group(); h <= k is checked.
GModule induce_between(const Subgroup& h, const Subgroup& k, const GModule& m);
// m lives over k.group(); h <= k is checked; result over h.group().
GModule restrict_between(const Subgroup& k, const Subgroup& h, const GModule& m);

SkLevel sk_level(GreenContext& ctx, const Subgroup& h);
// G0(kH) -> G0(kK) for g H g^-1 <= K: S -> Ind(conj_g S).
GreenMap g0_induction(GreenContext& ctx, const Subgroup& h, const Subgroup& k, std::size_t g = 0);
// G0(kK) -> G0(kH) for H <= K.
GreenMap g0_restriction(GreenContext& ctx, const Subgroup& k, const Subgroup& h);
// Induced map on S_k; InternalError if the Cartan image is not carried into
// the target Cartan image.
GreenMap sk_descend(GreenContext& ctx, const GreenMap& map);

// Res_K Ind_H^G M against the double coset formula, compared in G0(kK).
bool mackey_check(GreenContext& ctx, const Subgroup& h, const Subgroup& k, const GModule& m);

struct SurjectivityResult {
  bool surjective = false;
  FgAbelianGroup cokernel;  // S_k(G) modulo the induction images
  std::vector<std::vector<std::size_t>> family;  // class representatives used
};
// family: subgroup class representatives, checked to be closed under
// subconjugacy.
SurjectivityResult induction_surjectivity(GreenContext& ctx, const std::vector<Subgroup>& family);
// All p-subgroups up to conjugacy.
std::vector<Subgroup> p_subgroup_family(const GroupPtr& g, std::uint64_t p);
// Whether `family` (class representatives) is closed under subconjugacy.
bool is_subconjugacy_closed(const GroupPtr& g, const std::vector<Subgroup>& family);

inline constexpr std::size_t kDefectBaseClassCap = 40;
// Minimal subconjugacy-closed family with surjective induction, as class
// representatives. CapExceeded above kDefectBaseClassCap subgroup classes.
std::vector<Subgroup> defect_base(GreenContext& ctx);

}  // namespace ksg
