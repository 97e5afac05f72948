#include "fusionsys/lattice.hpp"

#include <algorithm>

namespace fusionsys {

std::vector<Subgroup> subgroups(const FiniteGroup& group, const Guardrails& limits) {
  const std::size_t n = group.order();
  if (n > limits.subgroups) {
    fail(ErrorCode::kGroupTooLarge, "subgroup enumeration limited to order " +
                                        std::to_string(limits.subgroups) + ", got " +
                                        std::to_string(n));
  }
  std::vector<Subgroup> found{group.trivial()};
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  seen.emplace(found[0].members, 0);
  // <H, xh> = <H, x>, so one representative per left coset xH suffices.
  for (std::size_t head = 0; head < found.size(); ++head) {
    ElementSet done = found[head].members;
    for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
      if (done.contains(x)) continue;
      const Subgroup& h = found[head];
      for (Elem y : h.elements) done.insert(group.mul(x, y));
      std::vector<Elem> gens = h.generators;
      gens.push_back(x);
      ElementSet k = group.closure(gens);
      if (seen.count(k)) continue;
      if (found.size() >= limits.lattice_size) {
        fail(ErrorCode::kGuardrailExceeded, "subgroup count exceeds lattice guardrail");
      }
      Subgroup s;
      s.members = k;
      s.elements = k.members();
      s.generators = std::move(gens);
      seen.emplace(k, found.size());
      found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  for (std::size_t i = 0; i < found.size(); ++i) found[i].canonical_index = static_cast<int>(i);
  return found;
}

SubgroupLattice::SubgroupLattice(FiniteGroup group, const Guardrails& limits)
    : group_(std::move(group)), subs_(subgroups(group_, limits)) {
  const std::size_t m = subs_.size();
  const std::size_t n = group_.order();
  for (std::size_t i = 0; i < m; ++i) index_.emplace(subs_[i].members, static_cast<SubgroupId>(i));
  below_.resize(m);
  above_.resize(m);
  maximal_.resize(m);
  for (std::size_t big = 0; big < m; ++big) {
    for (std::size_t small = 0; small <= big; ++small) {
      if (subs_[big].order() % subs_[small].order() != 0) continue;
      if (subs_[small].members.subset_of(subs_[big].members)) {
        below_[big].push_back(static_cast<SubgroupId>(small));
        above_[small].push_back(static_cast<SubgroupId>(big));
      }
    }
  }
  for (std::size_t p = 0; p < m; ++p) {
    // Larger candidates first: every non-maximal proper subgroup lies in a
    // larger maximal one that has already been recorded.
    std::vector<SubgroupId> cands(below_[p].begin(), below_[p].end() - 1);
    std::sort(cands.begin(), cands.end(), [](SubgroupId a, SubgroupId b) { return a > b; });
    for (SubgroupId q : cands) {
      bool inside = false;
      for (SubgroupId mx : maximal_[p]) {
        if (subs_[q].members.subset_of(subs_[mx].members)) {
          inside = true;
          break;
        }
      }
      if (!inside) maximal_[p].push_back(q);
    }
    std::sort(maximal_[p].begin(), maximal_[p].end());
  }
  positions_.assign(m * n, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& el = subs_[i].elements;
    for (std::size_t k = 0; k < el.size(); ++k) positions_[i * n + el[k]] = static_cast<int>(k);
  }
}

std::shared_ptr<const SubgroupLattice> SubgroupLattice::make(FiniteGroup group) {
  return std::make_shared<const SubgroupLattice>(std::move(group));
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const ElementSet& members) const {
  auto id = find(members);
  if (!id) fail(ErrorCode::kNotSubgroup, "element set is not a subgroup");
  return *id;
}

SubgroupId SubgroupLattice::generated(std::span<const Elem> gens) const {
  return id_of(group_.closure(gens));
}

SubgroupId SubgroupLattice::join(SubgroupId a, SubgroupId b) const {
  if (contains(a, b)) return a;
  if (contains(b, a)) return b;
  std::vector<Elem> gens = subs_[a].generators;
  gens.insert(gens.end(), subs_[b].generators.begin(), subs_[b].generators.end());
  return generated(gens);
}

SubgroupId SubgroupLattice::meet(SubgroupId a, SubgroupId b) const {
  return id_of(subs_[a].members & subs_[b].members);
}

bool SubgroupLattice::contains(SubgroupId big, SubgroupId small) const {
  return std::binary_search(below_[big].begin(), below_[big].end(), small);
}

SubgroupId SubgroupLattice::normalizer(SubgroupId id) const {
  const Subgroup& p = subs_[id];
  std::vector<Elem> norm;
  for (std::size_t g = 0; g < group_.order(); ++g) {
    bool ok = true;
    for (Elem x : p.generators) {
      if (!p.contains(group_.conj(static_cast<Elem>(g), x))) {
        ok = false;
        break;
      }
    }
    if (ok) norm.push_back(static_cast<Elem>(g));
  }
  return id_of(ElementSet::of(group_.order(), norm));
}

SubgroupId SubgroupLattice::centralizer(SubgroupId id) const {
  const Subgroup& p = subs_[id];
  std::vector<Elem> cent;
  for (std::size_t g = 0; g < group_.order(); ++g) {
    bool ok = true;
    for (Elem x : p.generators) {
      if (group_.mul(static_cast<Elem>(g), x) != group_.mul(x, static_cast<Elem>(g))) {
        ok = false;
        break;
      }
    }
    if (ok) cent.push_back(static_cast<Elem>(g));
  }
  return id_of(ElementSet::of(group_.order(), cent));
}

bool SubgroupLattice::is_normal(SubgroupId id) const { return normalizer(id) == whole_id(); }

}  // namespace fusionsys
