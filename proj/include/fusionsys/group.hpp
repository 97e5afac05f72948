#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionsys/element_set.hpp"
#include "fusionsys/error.hpp"

namespace fusionsys {

// A permutation of {0..k-1}; entry i is the image of point i.
using Permutation = std::vector<int>;

// Parses cycle notation with 1-based points, e.g. {{1,2,3},{4,5}}.
Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<int>>& cycles);
std::string cycles_string(const Permutation& perm);

class FiniteGroup;
struct PermIndex;

// A subgroup of a FiniteGroup, stored by membership. canonical_index is set
// only when the subgroup was taken from a SubgroupLattice.
struct Subgroup {
  ElementSet members;
  std::vector<Elem> elements;  // ascending ids, elements[0] == 0
  std::vector<Elem> generators;
  int canonical_index = -1;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const { return members.contains(x); }
  bool operator==(const Subgroup& other) const { return members == other.members; }
  // Position of x in `elements`, or -1.
  int position(Elem x) const;
};

// A finite group on dense ids 0..n-1 with 0 the identity. The multiplication
// table is materialized for small groups; larger permutation groups multiply
// through their permutations. Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Element ids follow a BFS over the generators in input order.
  static FiniteGroup from_permutations(const std::vector<Permutation>& gens,
                                       const Guardrails& limits = Guardrails::current());
  static FiniteGroup from_cayley(const std::vector<std::vector<Elem>>& table);

  std::size_t order() const { return inverse_.size(); }
  std::size_t degree() const { return degree_; }
  std::span<const Elem> generators() const { return generators_; }
  std::optional<int> prime_hint() const { return prime_hint_; }
  void set_prime_hint(std::optional<int> p) { prime_hint_ = p; }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long k) const;
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int element_order(Elem a) const { return element_order_[a]; }

  bool has_permutations() const { return !perms_.empty(); }
  const Permutation& permutation(Elem a) const { return perms_[a]; }
  std::string render(Elem a) const;
  // Id of a permutation of the same degree, if it lies in the group.
  std::optional<Elem> find(const Permutation& perm) const;

  // Subgroup generated by `gens`.
  ElementSet closure(std::span<const Elem> gens) const;
  Subgroup subgroup(std::span<const Elem> gens) const;
  Subgroup subgroup_from_set(const ElementSet& members) const;
  Subgroup whole() const;
  Subgroup trivial() const;
  bool is_subgroup(const ElementSet& set) const;

  bool is_abelian() const;
  // Prime p with |G| = p^k, k >= 0 (1 for the trivial group), if any.
  std::optional<int> p_group_prime() const;
  bool is_p_group(int p) const;

  // The subgroup as a group in its own right; its ids are the positions in
  // sub.elements, so embedding[i] == sub.elements[i].
  FiniteGroup induced(const Subgroup& sub) const;

  struct Raw {
    std::vector<Elem> table;  // row-major, may be empty when perms present
    std::vector<Permutation> perms;
    std::vector<Elem> generators;
    std::size_t order = 0;
    std::size_t degree = 0;
  };
  static FiniteGroup from_raw(Raw raw);

 private:
  void finish();
  Elem lookup(const Permutation& p) const;

  std::size_t degree_ = 0;
  std::vector<Elem> table_;
  std::vector<Permutation> perms_;
  std::shared_ptr<const PermIndex> perm_index_;  // set for table-less groups
  std::vector<Elem> inverse_;
  std::vector<int> element_order_;
  std::vector<Elem> generators_;
  std::optional<int> prime_hint_;
};

bool is_prime(long long n);
// Largest power of p dividing n.
long long p_part(long long n, int p);

}  // namespace fusionsys
