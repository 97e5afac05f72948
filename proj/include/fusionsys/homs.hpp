#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fusionsys/group.hpp"

namespace fusionsys {

// A homomorphism between subgroups (possibly of different groups). The map
// is stored densely: images[k] is the image of domain.elements[k].
struct GroupHom {
  Subgroup domain;
  Subgroup codomain;
  std::vector<Elem> images;

  Elem operator()(Elem x) const;
  bool is_injective() const;
  bool operator==(const GroupHom& other) const {
    return domain == other.domain && images == other.images;
  }
};

// A Burnside basis when P is a p-group (so its size is the rank of
// P/Frattini(P)); greedy in id order otherwise.
std::vector<Elem> minimal_generators(const FiniteGroup& group, const Subgroup& sub);

// All homomorphisms P -> Q (P <= G, Q <= H) as image vectors over
// P.elements, in lexicographic order of generator images. Generator images
// are assigned by backtracking with an incremental Cayley-graph check.
std::vector<std::vector<Elem>> enumerate_homs(const FiniteGroup& G, const Subgroup& P,
                                              const FiniteGroup& H, const Subgroup& Q,
                                              bool injective_only,
                                              const Guardrails& limits = Guardrails::current());

std::vector<GroupHom> homomorphisms(const FiniteGroup& G, const Subgroup& P,
                                    const FiniteGroup& H, const Subgroup& Q);

// All injective homomorphisms P -> Q for subgroups of one group.
std::vector<GroupHom> injective_homs(const FiniteGroup& G, const Subgroup& P, const Subgroup& Q);

// Extends generator images to a homomorphism on P, if one exists.
std::optional<std::vector<Elem>> extend_to_hom(const FiniteGroup& G, const Subgroup& P,
                                               std::span<const Elem> gens,
                                               std::span<const Elem> gen_images,
                                               const FiniteGroup& H);

}  // namespace fusionsys
