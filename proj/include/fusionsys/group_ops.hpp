#pragma once

#include <vector>

#include "fusionsys/group.hpp"
#include "fusionsys/homs.hpp"

namespace fusionsys {

struct CharacteristicSubgroups {
  Subgroup center;
  Subgroup derived;
  Subgroup o_p_prime;
  Subgroup o_upper_p_prime;
};

Subgroup center(const FiniteGroup& group);
Subgroup derived_subgroup(const FiniteGroup& group);
Subgroup normal_closure(const FiniteGroup& group, const Subgroup& sub);
// Largest normal subgroup of order prime to p.
Subgroup o_p_prime(const FiniteGroup& group, int p);
// Subgroup generated by all p-elements.
Subgroup o_upper_p_prime(const FiniteGroup& group, int p);
// Largest normal p-subgroup.
Subgroup o_p(const FiniteGroup& group, int p);
CharacteristicSubgroups characteristic_subgroups(const FiniteGroup& group, int p);

bool is_normal(const FiniteGroup& group, const Subgroup& sub);
// Deterministic Sylow p-subgroup: the conjugate with the least sorted member
// tuple, which is also the one with least canonical index.
Subgroup sylow(const FiniteGroup& group, int p);
bool is_sylow(const FiniteGroup& group, const Subgroup& sub, int p);

struct OmegaSeries {
  std::vector<Subgroup> terms;
};

// Z~_0 = 1 and Z~_n/Z~_{n-1} = Omega_1(Z(S/Z~_{n-1})), up to the fixed point.
OmegaSeries omega_central_series(const FiniteGroup& S);

struct FittingSplit {
  Subgroup image_part;   // T = f^n(A)
  Subgroup kernel_part;  // U = Ker(f^n)
  int stable_power = 0;
};

// Fitting decomposition of an endomorphism of a finite abelian group. The
// endomorphism is given by its images of all elements 0..|A|-1.
FittingSplit fitting_split(const FiniteGroup& A, const std::vector<Elem>& f);

struct DirectProduct {
  FiniteGroup product;
  GroupHom embed1, embed2, proj1, proj2;
};

// Element (a, b) of G1 x G2 has id a * |G2| + b.
DirectProduct direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                             const Guardrails& limits = Guardrails::current());

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> coset_of;  // element id -> quotient id
};

// Cosets ordered by least member; the quotient is given by its Cayley table.
Quotient quotient(const FiniteGroup& group, const Subgroup& normal);

// Every automorphism of G, as image vectors over the element ids.
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& group);

}  // namespace fusionsys
