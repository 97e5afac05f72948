#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusionsys/fusion.hpp"
#include "fusionsys/group_ops.hpp"

namespace fusionsys {

using SystemPtr = std::shared_ptr<const FusionSystem>;
inline SystemPtr share(FusionSystem F) { return std::make_shared<const FusionSystem>(std::move(F)); }

// A homomorphism between the bases of two fusion systems that carries
// morphisms to morphisms. f lists the images of source.base_subgroup()
// elements (target lattice ids).
struct FusionMorphism {
  SystemPtr source;
  SystemPtr target;
  ElemMap f;

  Elem operator()(Elem x) const;
  SubgroupId image_subgroup(SubgroupId p) const;
  // f-bar(phi) for phi: P -> Q in the source. Throws NotFusionPreserving if
  // it is not well defined or not in the target.
  Arrow functor(SubgroupId p, SubgroupId q, const ElemMap& phi) const;
  bool is_injective() const;
  bool is_surjective() const;
  bool operator==(const FusionMorphism& other) const { return f == other.f; }
};

// Arrows that generate F under composition and restriction: per subgroup
// class, the automorphisms of its least member and one isomorphism from it
// to every other member.
std::vector<Arrow> generating_arrows(const FusionSystem& F);

// Checks that f is a homomorphism E.base -> F.base carrying every morphism of
// E into F. Throws NotFusionPreserving with a witness otherwise.
FusionMorphism check_morphism(SystemPtr E, SystemPtr F, ElemMap f);
// Same, with precomputed generating arrows of E.
FusionMorphism check_morphism(SystemPtr E, SystemPtr F, ElemMap f, const std::vector<Arrow>& arrows);
bool is_morphism(const FusionSystem& E, const FusionSystem& F, const ElemMap& f);

FusionMorphism identity_morphism(SystemPtr F);
FusionMorphism zero_morphism(SystemPtr E, SystemPtr F);
// g o f
FusionMorphism compose(const FusionMorphism& g, const FusionMorphism& f);

SubgroupId kernel(const FusionMorphism& m);
// The least subsystem of the target containing every f-bar(phi).
FusionSystem image(const FusionMorphism& m);

struct ProductSystem {
  std::vector<SystemPtr> factors;
  SystemPtr product;
  std::vector<FusionMorphism> embeddings;
  std::vector<FusionMorphism> projections;
  // Element (x_1, ..., x_k) of the product group is stored at
  // sum_i pos_i * stride[i], pos_i the position of x_i in the i-th base.
  std::vector<std::size_t> strides;
};

ProductSystem product(const std::vector<SystemPtr>& factors);

struct Subsystem {
  SubgroupId base;
  SystemPtr system;
};

// One tuple (P_i, phi_i) per part; parts without an entry act as identity on
// their whole base.
struct CommuteWitness {
  std::vector<Arrow> tuple;
  std::string reason;
};

enum class CommuteMode { kPadded, kExhaustive };

struct CommuteResult {
  bool commute = false;
  std::optional<CommuteWitness> witness;
  // Set on acceptance.
  std::optional<ProductSystem> external;
  std::optional<FusionMorphism> inclusion;  // I: E_1 x ... x E_k -> F
  std::optional<FusionSystem> inner_product;  // Im(I)
};

// Decision only.
CommuteResult commute_test(const FusionSystem& F, const std::vector<Subsystem>& parts,
                           CommuteMode mode = CommuteMode::kPadded);
// Decision plus I and Im(I) on acceptance.
CommuteResult commute_check(const SystemPtr& F, const std::vector<Subsystem>& parts,
                            CommuteMode mode = CommuteMode::kPadded);

// Commuting parts with trivially intersecting bases whose product is the
// base and whose inner product is F.
bool is_product_decomposition(const SystemPtr& F, const std::vector<Subsystem>& parts);

// Pointwise product of morphisms whose images commute in the target.
FusionMorphism sum(const std::vector<FusionMorphism>& morphisms);
bool summable(const std::vector<FusionMorphism>& morphisms);
// Decides summability from the images of generating arrows of the common
// source, without building the image systems.
bool summable(const std::vector<FusionMorphism>& morphisms, const std::vector<Arrow>& source_arrows);

}  // namespace fusionsys
