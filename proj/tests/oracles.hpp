#pragma once

// Brute-force reference computations used to derive and freeze expected
// values. They share only FiniteGroup arithmetic with the library.

#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "fusionsys/group.hpp"

namespace oracle {

using fusionsys::Elem;
using fusionsys::FiniteGroup;

FiniteGroup perm_group(std::size_t degree, const std::vector<std::vector<std::vector<int>>>& gens);

// Every subgroup generated by at most `max_gens` elements, as sorted member
// lists, sorted.
std::vector<std::vector<Elem>> subgroups_by_generation(const FiniteGroup& g, int max_gens);

// Closure test over all pairs.
bool closed(const FiniteGroup& g, const std::vector<Elem>& set);

// All homomorphisms from <dom> to <cod> found by mapping every element
// independently under a generator-image assignment and checking all pairs.
std::set<std::vector<Elem>> homs(const FiniteGroup& g, const std::vector<Elem>& dom,
                                 const FiniteGroup& h, const std::vector<Elem>& cod,
                                 bool injective);

std::vector<Elem> center(const FiniteGroup& g);
std::vector<Elem> sorted_set(std::vector<Elem> v);

}  // namespace oracle

#include <map>

#include "fusionsys/fusion.hpp"

namespace oracle {

using fusionsys::FusionSystem;
using fusionsys::SubgroupId;

// Triples (src, dst, map) of all isomorphisms of a fusion system.
using IsoTriple = std::tuple<SubgroupId, SubgroupId, std::vector<Elem>>;
std::set<IsoTriple> iso_triples(const FusionSystem& F);

// All conjugation maps c_g|P (g in G) between subgroups of S, where S is the
// lattice group embedded in G via `embed`, computed pair by pair.
std::set<IsoTriple> conjugation_triples(const FiniteGroup& G, const fusionsys::SubgroupLattice& lat,
                                        SubgroupId base, const std::vector<Elem>& embed);

// Naive fixpoint: inner maps plus generators, closed under inverses,
// restriction to every subgroup and all pairwise composites.
std::set<IsoTriple> naive_closure(const fusionsys::SubgroupLattice& lat, SubgroupId base,
                                  const std::vector<IsoTriple>& gens);

// Automorphisms of the base that carry every isomorphism of F into F,
// found by testing every injective endomorphism against the full table.
std::size_t fusion_aut_count(const FusionSystem& F);

}  // namespace oracle
