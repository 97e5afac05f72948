#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionsys/morphism.hpp"

namespace fusionsys {

// An endomorphism f with its forced complement chi(x) = f(x)^-1 x, where f
// and chi are summable and f + chi = Id.
struct NormalEndomorphism {
  FusionMorphism f;
  FusionMorphism complement;
  bool surjective = false;
  bool invertible = false;
};

// A group of automorphisms of F given by generators; closure holds every
// element as a map on the base.
struct OmegaContext {
  std::vector<FusionMorphism> generators;
  std::vector<ElemMap> closure;

  bool trivial() const { return generators.empty(); }
  // Every generator maps the subgroup onto itself.
  bool invariant(SubgroupId t) const;
  // f commutes with every generator (f given on the base of F).
  bool commutes_with(const ElemMap& f) const;
};

// Conjugation by point permutations w (x -> w x w^-1) normalizing the
// permutation group G and its subgroup S, as maps on S in position order.
std::vector<ElemMap> conjugation_maps(const FiniteGroup& G, const Subgroup& S,
                                      const std::vector<Permutation>& perms);

// Validates each generator as an invertible endomorphism of F and closes
// under composition up to the omega guardrail.
OmegaContext make_omega(const SystemPtr& F, const std::vector<ElemMap>& generators);

// Throws NotNormal naming the first failed clause. For surjective f the
// commutator and focal criterion is cross-checked against the verdict.
NormalEndomorphism normal_complement(const SystemPtr& F, const ElemMap& f);
std::optional<NormalEndomorphism> try_normal(const SystemPtr& F, const ElemMap& f);

// Normality tests over one system, sharing its generating arrows, center
// and focal subgroup.
class NormalTester {
 public:
  explicit NormalTester(SystemPtr F);

  const std::vector<Arrow>& arrows() const { return arrows_; }
  SubgroupId center();
  // As normal_complement.
  NormalEndomorphism check(const ElemMap& f);
  std::optional<NormalEndomorphism> try_check(const ElemMap& f);
  // f + f' for normal f, f' with f o f' = 0 (HypothesisFailed otherwise).
  // With `experimental`, f f'(S) <= Z(F) is accepted instead; that weakening
  // is unproved, so the result is always checked and a failure throws
  // NotNormal.
  NormalEndomorphism sum(const NormalEndomorphism& a, const NormalEndomorphism& b, bool experimental = false);

 private:
  SystemPtr F_;
  std::vector<Arrow> arrows_;
  std::optional<SubgroupId> center_;
  std::optional<SubgroupId> focal_;
};

NormalEndomorphism normal_sum(const SystemPtr& F, const NormalEndomorphism& a, const NormalEndomorphism& b,
                              bool experimental = false);

// Every endomorphism of the base that is a morphism of F.
std::vector<FusionMorphism> endomorphisms(const SystemPtr& F);
// Normal (Omega-normal when omega is nontrivial) endomorphisms, in the
// order of the underlying hom enumeration.
std::vector<NormalEndomorphism> normal_endos(const SystemPtr& F, const OmegaContext& omega = {});

struct NormalEndReport {
  SubgroupId image_base = 0;       // T = f(S)
  SubgroupId complement_base = 0;  // U = chi(S)
  SubgroupId meet = 0;             // T cap U
};

// Checks the structure theorem for normal endomorphisms of a saturated
// system; throws InternalInconsistency naming the failed clause.
NormalEndReport normal_end_properties(const SystemPtr& F, const NormalEndomorphism& ne);

// Memo of two-part decomposition checks over one system.
struct SplitCache {
  std::map<std::pair<SubgroupId, SubgroupId>, bool> decomposes;
};

struct FittingResult {
  SubgroupId t = 0;  // f^n(S): f is an automorphism here
  SubgroupId u = 0;  // Ker(f^n): f is nilpotent here
  SystemPtr e;
  SystemPtr d;
  int stable_power = 0;
};

// Brute-force uniqueness is checked when the base has order <= 64.
FittingResult fitting_factorize(const SystemPtr& F, const NormalEndomorphism& ne,
                                SplitCache* cache = nullptr);

struct Factorization {
  std::vector<Subsystem> parts;  // sorted by base id
  std::optional<FusionMorphism> witness;  // external product -> F
};

enum class SearchOrder { kAscending, kDescending };

// Does F = F|T x F|U hold, with T, U strongly closed and commuting?
bool is_splitting_pair(const SystemPtr& F, SubgroupId t, SubgroupId u, SplitCache* cache = nullptr);

// Splitting pairs (T, U) with T < U by id, both Omega-invariant.
std::vector<std::pair<SubgroupId, SubgroupId>> splitting_pairs(const SystemPtr& F,
                                                               const OmegaContext& omega = {});

Factorization factorize(const SystemPtr& F, const OmegaContext& omega = {},
                        SearchOrder order = SearchOrder::kAscending);
// Every factorization into Omega-indecomposable parts, as sorted part lists.
std::vector<Factorization> all_factorizations(const SystemPtr& F, const OmegaContext& omega = {});
bool is_indecomposable(const SystemPtr& E, const OmegaContext& omega = {});
// Parts F|<=T_i for the given bases, sorted; NotCommuting unless F is their
// internal product.
Factorization factorization_from_bases(const SystemPtr& F, std::vector<SubgroupId> bases);

struct KrsCertificate {
  NormalEndomorphism alpha;  // alpha(E_i) = E*_sigma(i)
  std::vector<int> sigma;    // 0-based
  std::vector<ElemMap> log;  // h_1, ..., h_m
  std::vector<int> chosen;   // j_1, ..., j_m
  bool fallback = false;
  std::string discrepancy;
};

KrsCertificate krs_certificate(const SystemPtr& F, const Factorization& fact1,
                               const Factorization& fact2, const OmegaContext& omega = {});
// Exhaustive search over Aut^Omega(F) and part permutations.
std::optional<KrsCertificate> krs_exhaustive(const SystemPtr& F, const Factorization& fact1,
                                             const Factorization& fact2, const OmegaContext& omega = {});
// Same search over a precomputed Aut^Omega(F), e.g. the invertible members
// of normal_endos(F, omega).
std::optional<KrsCertificate> krs_exhaustive(const SystemPtr& F, const Factorization& fact1,
                                             const Factorization& fact2,
                                             const std::vector<NormalEndomorphism>& automorphisms);
// Does alpha carry each part of fact1 onto the sigma-matched part of fact2,
// table for table?
bool maps_parts(const SystemPtr& F, const ElemMap& alpha, const Factorization& fact1,
                const Factorization& fact2, const std::vector<int>& sigma);

struct AutStructure {
  std::size_t aut_order = 0;
  std::size_t aut0_order = 0;
  std::vector<std::size_t> part_aut_orders;
  std::vector<std::vector<int>> gamma;  // induced part permutations, sorted
  std::vector<ElemMap> section;         // K, one element per gamma entry
};

// Every automorphism of the base that is a morphism of F.
std::vector<FusionMorphism> fusion_automorphisms(const SystemPtr& F);
// Invertible morphisms between two systems on the same lattice.
std::vector<ElemMap> isomorphisms_between(const SystemPtr& E1, const SystemPtr& E2);

// Requires Z(F) = 1 or foc(F) = S (HypothesisFailed otherwise).
AutStructure aut_structure(const SystemPtr& F, const Factorization& fact);

struct GoldschmidtResult {
  std::vector<Subgroup> factors;  // subgroups of G
};

// G at p = 2 with F = fusion_of_group(G, 2) over `sylow` (default: the
// deterministic Sylow subgroup).
GoldschmidtResult goldschmidt_factor(const FiniteGroup& G, const SystemPtr& F, const Factorization& fact,
                                     const std::optional<Subgroup>& sylow_subgroup = std::nullopt);

// Component of x in each part of an internal direct product.
std::vector<Elem> split_element(const SubgroupLattice& lat, const std::vector<SubgroupId>& parts, Elem x);
// Projections of the base onto each part along the others.
std::vector<ElemMap> projection_maps(const FusionSystem& F, const std::vector<SubgroupId>& parts);
ElemMap projection_map(const FusionSystem& F, const std::vector<SubgroupId>& parts, std::size_t i);

}  // namespace fusionsys
