#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fusionsys/group.hpp"

namespace fusionsys {

using SubgroupId = int;

// All subgroups of G in canonical order: order ascending, then sorted member
// tuple lexicographic. Id 0 is the trivial subgroup, the last id is G.
std::vector<Subgroup> subgroups(const FiniteGroup& group,
                                const Guardrails& limits = Guardrails::current());

// The subgroup poset of one group with index lookups, containment lists and
// element positions. Immutable after construction.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(FiniteGroup group, const Guardrails& limits = Guardrails::current());
  static std::shared_ptr<const SubgroupLattice> make(FiniteGroup group);

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return subs_.size(); }
  const Subgroup& operator[](SubgroupId id) const { return subs_[id]; }
  const std::vector<Subgroup>& all() const { return subs_; }
  SubgroupId trivial_id() const { return 0; }
  SubgroupId whole_id() const { return static_cast<SubgroupId>(subs_.size()) - 1; }

  std::optional<SubgroupId> find(const ElementSet& members) const;
  // Throws NotSubgroup when the set is not a subgroup.
  SubgroupId id_of(const ElementSet& members) const;
  SubgroupId generated(std::span<const Elem> gens) const;
  SubgroupId join(SubgroupId a, SubgroupId b) const;
  SubgroupId meet(SubgroupId a, SubgroupId b) const;

  bool contains(SubgroupId big, SubgroupId small) const;
  // Subgroups of `id` (including itself), ascending ids.
  const std::vector<SubgroupId>& below(SubgroupId id) const { return below_[id]; }
  // Subgroups containing `id` (including itself), ascending ids.
  const std::vector<SubgroupId>& above(SubgroupId id) const { return above_[id]; }
  const std::vector<SubgroupId>& maximal(SubgroupId id) const { return maximal_[id]; }

  int position(SubgroupId id, Elem x) const {
    return positions_[static_cast<std::size_t>(id) * group_.order() + x];
  }

  SubgroupId normalizer(SubgroupId id) const;
  SubgroupId centralizer(SubgroupId id) const;
  bool is_normal(SubgroupId id) const;

 private:
  FiniteGroup group_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
  std::vector<std::vector<SubgroupId>> below_;
  std::vector<std::vector<SubgroupId>> above_;
  std::vector<std::vector<SubgroupId>> maximal_;
  std::vector<int> positions_;
};

}  // namespace fusionsys
