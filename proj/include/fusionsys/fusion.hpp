#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusionsys/lattice.hpp"

namespace fusionsys {

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

// An injective map out of a lattice subgroup P: entry k is the image of
// P.elements[k] (ids of the lattice group).
using ElemMap = std::vector<Elem>;

// An isomorphism src -> dst between lattice subgroups.
struct Arrow {
  SubgroupId src = 0;
  SubgroupId dst = 0;
  ElemMap map;
  bool operator==(const Arrow&) const = default;
};

// Same subgroup list in the same order (pointer equality short-circuits).
bool same_lattice(const SubgroupLattice& a, const SubgroupLattice& b);

ElemMap identity_map(const SubgroupLattice& lat, SubgroupId p);
// psi o phi, where phi maps into `mid` and psi is defined on `mid`.
ElemMap compose_maps(const SubgroupLattice& lat, SubgroupId mid, const ElemMap& psi,
                     const ElemMap& phi);
ElemMap invert_map(const SubgroupLattice& lat, SubgroupId src, SubgroupId dst, const ElemMap& map);
ElemMap restrict_map(const SubgroupLattice& lat, SubgroupId p, const ElemMap& map, SubgroupId r);
std::optional<SubgroupId> image_of(const SubgroupLattice& lat, const ElemMap& map);
ElemMap conjugation_map(const SubgroupLattice& lat, SubgroupId p, Elem g);
inline Elem apply_map(const SubgroupLattice& lat, SubgroupId p, const ElemMap& map, Elem x) {
  return map[lat.position(p, x)];
}

// A fusion system over the lattice subgroup `base`. Only isomorphisms are
// stored; Hom(P, Q) is the union of Iso(P, R) over R <= Q. Subsystems over
// smaller bases live in the same lattice so tables compare entrywise.
class FusionSystem {
 public:
  using IsoList = std::vector<std::pair<SubgroupId, ElemMap>>;

  FusionSystem() = default;
  // Sorts and deduplicates each list; entries for non-objects must be empty.
  FusionSystem(LatticePtr lattice, SubgroupId base, int p, std::vector<IsoList> isos);

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const FiniteGroup& group() const { return lattice_->group(); }
  SubgroupId base() const { return base_; }
  const Subgroup& base_subgroup() const { return (*lattice_)[base_]; }
  int prime() const { return p_; }

  const std::vector<SubgroupId>& objects() const { return lattice_->below(base_); }
  bool is_object(SubgroupId p) const { return lattice_->contains(base_, p); }

  // All isomorphisms out of P, sorted by (dst, map).
  const IsoList& isos_from(SubgroupId p) const { return isos_[p]; }
  std::vector<ElemMap> isos(SubgroupId p, SubgroupId q) const;
  bool has_iso(SubgroupId p, SubgroupId q, const ElemMap& map) const;
  // Is the map on P (with any image) a morphism of F?
  bool contains(SubgroupId p, const ElemMap& map) const;
  std::vector<ElemMap> homs(SubgroupId p, SubgroupId q) const;
  std::vector<ElemMap> automorphisms(SubgroupId p) const { return isos(p, p); }
  std::size_t iso_count() const;

  bool operator==(const FusionSystem& other) const;

 private:
  LatticePtr lattice_;
  SubgroupId base_ = 0;
  int p_ = 0;
  std::vector<IsoList> isos_;
};

// F_T(T): conjugation by elements of the base.
FusionSystem inner_fusion(LatticePtr lattice, SubgroupId base, int p);

// Conjugation by `conjugators` (ids of G) restricted to subgroups of `base`.
// embed[x] is the G-id of lattice element x.
FusionSystem group_fusion(const FiniteGroup& G, std::span<const Elem> conjugators,
                          LatticePtr lattice, SubgroupId base, const std::vector<Elem>& embed,
                          int p);

// F_S(G). S defaults to the deterministic Sylow subgroup; a supplied S
// must be Sylow.
FusionSystem fusion_of_group(const FiniteGroup& G, int p,
                             const std::optional<Subgroup>& S = std::nullopt);

// The least fusion system over `base` containing the inner maps and the
// given isomorphisms.
FusionSystem generated_fusion(LatticePtr lattice, SubgroupId base, int p,
                              const std::vector<Arrow>& gens,
                              const Guardrails& limits = Guardrails::current());

// Generators given as injective homomorphisms between subgroups of the
// lattice group; each is corestricted to its image.
std::vector<Arrow> arrows_from_maps(const SubgroupLattice& lat,
                                    const std::vector<std::pair<SubgroupId, ElemMap>>& maps);

// F|<=T over the subgroup T of the base.
FusionSystem restrict_full(const FusionSystem& F, SubgroupId t);

struct Conjugacy {
  std::vector<std::vector<SubgroupId>> subgroup_classes;
  std::vector<std::vector<Elem>> element_classes;
};
Conjugacy conjugacy(const FusionSystem& F);
// F-class of x (sorted).
std::vector<Elem> element_class(const FusionSystem& F, Elem x);

SubgroupId center_of(const FusionSystem& F);
SubgroupId focal_of(const FusionSystem& F);
// Elements of Z(base) fixed by all fusion, as a subgroup id.
SubgroupId fixed_center(const FusionSystem& F);
bool is_central(const FusionSystem& F, SubgroupId p);

struct SubgroupClassification {
  bool strongly_closed = false;
  bool centric = false;
  bool radical = false;
};
bool is_strongly_closed(const FusionSystem& F, SubgroupId p);
bool is_centric(const FusionSystem& F, SubgroupId p);
bool is_radical(const FusionSystem& F, SubgroupId p);
SubgroupClassification classify_subgroup(const FusionSystem& F, SubgroupId p);

struct FusionInvariants {
  SubgroupId center = 0;
  SubgroupId focal = 0;
  std::vector<SubgroupId> strongly_closed;
  std::vector<SubgroupId> centric;
  std::vector<SubgroupId> radical;
};
FusionInvariants invariants(const FusionSystem& F);

// C_T(P) and N_T(P) within the base T.
SubgroupId base_centralizer(const FusionSystem& F, SubgroupId p);
SubgroupId base_normalizer(const FusionSystem& F, SubgroupId p);
// |Aut_T(P)| = |N_T(P)| / |C_T(P)|.
std::size_t base_automizer_order(const FusionSystem& F, SubgroupId p);

struct SaturationClass {
  std::vector<SubgroupId> members;
  std::optional<SubgroupId> witness;
  // Failure record of the representative when no witness exists.
  SubgroupId representative = 0;
  std::string failing_axiom;
  std::optional<Arrow> failing_map;
  std::optional<SubgroupId> n_phi;
};

struct SaturationReport {
  bool verdict = true;
  bool continuity_vacuous = true;  // finite base: every chain stabilizes
  std::vector<SaturationClass> classes;
};

bool is_fully_automized(const FusionSystem& F, SubgroupId p);
// On failure returns the first non-extendable phi with its N_phi.
std::optional<std::pair<Arrow, SubgroupId>> receptive_failure(const FusionSystem& F, SubgroupId p);
SaturationReport saturation_report(const FusionSystem& F);
bool is_saturated(const FusionSystem& F);

struct AlperinGenerator {
  SubgroupId subgroup;
  std::vector<ElemMap> automorphisms;
};
// Centric radical subgroups with their F-automorphisms; regenerating from
// them must give F back.
std::vector<AlperinGenerator> alperin_generators(const FusionSystem& F);

// Aut_F(P) as a permutation group on the positions of P.
FiniteGroup automizer_group(const FusionSystem& F, SubgroupId p);

}  // namespace fusionsys
