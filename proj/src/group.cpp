#include "fusionsys/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fusionsys {

namespace {

constexpr std::size_t kTableLimit = 2048;

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : p) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation invert(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

}  // namespace

struct PermIndex {
  std::unordered_map<Permutation, Elem, PermHash> ids;
};

Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> seen(degree, false);
  for (const auto& cycle : cycles) {
    for (int pt : cycle) {
      if (pt < 1 || static_cast<std::size_t>(pt) > degree) {
        fail(ErrorCode::kNotBijection,
             "point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      }
      if (seen[pt - 1]) {
        fail(ErrorCode::kNotBijection, "point " + std::to_string(pt) + " repeated in cycles");
      }
      seen[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

std::string cycles_string(const Permutation& perm) {
  std::ostringstream out;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

int Subgroup::position(Elem x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return -1;
  return static_cast<int>(it - elements.begin());
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long p_part(long long n, int p) {
  long long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& gens,
                                           const Guardrails& limits) {
  if (gens.empty()) fail(ErrorCode::kInvalidInput, "generator list is empty");
  const std::size_t degree = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != degree) fail(ErrorCode::kNotBijection, "generators of different degree");
    std::vector<bool> hit(degree, false);
    for (int x : g) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || hit[x]) {
        fail(ErrorCode::kNotBijection, "generator is not a bijection");
      }
      hit[x] = true;
    }
  }

  auto index = std::make_shared<PermIndex>();
  Raw raw;
  raw.degree = degree;
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  raw.perms.push_back(id);
  index->ids.emplace(id, 0);
  for (std::size_t head = 0; head < raw.perms.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(raw.perms[head], g);
      if (index->ids.count(next)) continue;
      if (raw.perms.size() >= limits.closure) {
        fail(ErrorCode::kClosureTooLarge,
             "generated group exceeds " + std::to_string(limits.closure) + " elements");
      }
      index->ids.emplace(next, static_cast<Elem>(raw.perms.size()));
      raw.perms.push_back(std::move(next));
    }
  }
  for (const auto& g : gens) raw.generators.push_back(index->ids.at(g));
  raw.order = raw.perms.size();

  FiniteGroup group;
  group.degree_ = degree;
  group.perms_ = std::move(raw.perms);
  group.generators_ = std::move(raw.generators);
  group.perm_index_ = index;
  const std::size_t n = group.perms_.size();
  if (n <= kTableLimit) {
    group.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        group.table_[a * n + b] = index->ids.at(compose(group.perms_[a], group.perms_[b]));
      }
    }
  }
  group.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    group.inverse_[a] = index->ids.at(invert(group.perms_[a]));
  }
  group.finish();
  return group;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) fail(ErrorCode::kInvalidInput, "empty Cayley table");
  FiniteGroup group;
  group.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) fail(ErrorCode::kInvalidInput, "Cayley table is not square");
    std::vector<bool> hit(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = rows[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) {
        fail(ErrorCode::kInvalidInput, "Cayley table row is not a permutation");
      }
      hit[v] = true;
      group.table_[a * n + b] = v;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (group.table_[a] != static_cast<Elem>(a) || group.table_[a * n] != static_cast<Elem>(a)) {
      fail(ErrorCode::kInvalidInput, "id 0 is not the identity");
    }
  }
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Elem ab = group.table_[a * n + b];
          Elem bc = group.table_[b * n + c];
          if (group.table_[ab * n + c] != group.table_[a * n + bc]) {
            fail(ErrorCode::kInvalidInput, "Cayley table is not associative");
          }
        }
  }
  group.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (group.table_[a * n + b] == 0) {
        group.inverse_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  // Greedy generating set in id order.
  ElementSet span(n);
  span.insert(0);
  for (std::size_t x = 1; x < n; ++x) {
    if (span.contains(static_cast<Elem>(x))) continue;
    group.generators_.push_back(static_cast<Elem>(x));
    span = group.closure(group.generators_);
  }
  group.finish();
  return group;
}

FiniteGroup FiniteGroup::from_raw(Raw raw) {
  FiniteGroup group;
  group.degree_ = raw.degree;
  group.generators_ = std::move(raw.generators);
  group.perms_ = std::move(raw.perms);
  const std::size_t n = raw.order;
  if (!raw.table.empty()) {
    group.table_ = std::move(raw.table);
  } else {
    if (group.perms_.size() != n) fail(ErrorCode::kInvalidInput, "raw group without table or permutations");
    auto index = std::make_shared<PermIndex>();
    for (std::size_t i = 0; i < n; ++i) index->ids.emplace(group.perms_[i], static_cast<Elem>(i));
    group.perm_index_ = index;
    if (n <= kTableLimit) {
      group.table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          group.table_[a * n + b] = index->ids.at(compose(group.perms_[a], group.perms_[b]));
    }
  }
  group.inverse_.assign(n, 0);
  if (!group.table_.empty()) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (group.table_[a * n + b] == 0) {
          group.inverse_[a] = static_cast<Elem>(b);
          break;
        }
  } else {
    for (std::size_t a = 0; a < n; ++a) group.inverse_[a] = group.lookup(invert(group.perms_[a]));
  }
  group.finish();
  return group;
}

void FiniteGroup::finish() {
  const std::size_t n = order();
  element_order_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 0) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
    }
    element_order_[a] = k;
  }
}

Elem FiniteGroup::lookup(const Permutation& p) const {
  auto it = perm_index_->ids.find(p);
  if (it == perm_index_->ids.end()) fail(ErrorCode::kInternalInconsistency, "permutation not in group");
  return it->second;
}

std::optional<Elem> FiniteGroup::find(const Permutation& perm) const {
  if (perm_index_) {
    auto it = perm_index_->ids.find(perm);
    if (it == perm_index_->ids.end()) return std::nullopt;
    return it->second;
  }
  for (std::size_t a = 0; a < perms_.size(); ++a) {
    if (perms_[a] == perm) return static_cast<Elem>(a);
  }
  return std::nullopt;
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return lookup(compose(perms_[a], perms_[b]));
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  int ord = element_order_[a];
  k %= ord;
  if (k < 0) k += ord;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::string FiniteGroup::render(Elem a) const {
  if (has_permutations()) return cycles_string(perms_[a]);
  return "#" + std::to_string(a);
}

ElementSet FiniteGroup::closure(std::span<const Elem> gens) const {
  ElementSet set(order());
  std::vector<Elem> queue{0};
  set.insert(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (Elem g : gens) {
      Elem y = mul(x, g);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

Subgroup FiniteGroup::subgroup(std::span<const Elem> gens) const {
  Subgroup s;
  s.members = closure(gens);
  s.elements = s.members.members();
  for (Elem g : gens) {
    if (g != 0 && std::find(s.generators.begin(), s.generators.end(), g) == s.generators.end()) {
      s.generators.push_back(g);
    }
  }
  return s;
}

bool FiniteGroup::is_subgroup(const ElementSet& set) const {
  if (set.universe() != order() || !set.contains(0)) return false;
  std::vector<Elem> elems = set.members();
  for (Elem a : elems) {
    if (!set.contains(inv(a))) return false;
    for (Elem b : elems) {
      if (!set.contains(mul(a, b))) return false;
    }
  }
  return true;
}

Subgroup FiniteGroup::subgroup_from_set(const ElementSet& members) const {
  if (!is_subgroup(members)) fail(ErrorCode::kNotSubgroup, "element set is not a subgroup");
  Subgroup s;
  s.members = members;
  s.elements = members.members();
  ElementSet span(order());
  span.insert(0);
  for (Elem x : s.elements) {
    if (span.contains(x)) continue;
    s.generators.push_back(x);
    span = closure(s.generators);
  }
  return s;
}

Subgroup FiniteGroup::whole() const {
  Subgroup s;
  s.members = ElementSet(order());
  for (std::size_t i = 0; i < order(); ++i) s.members.insert(static_cast<Elem>(i));
  s.elements = s.members.members();
  for (Elem g : generators_) {
    if (g != 0 && std::find(s.generators.begin(), s.generators.end(), g) == s.generators.end()) {
      s.generators.push_back(g);
    }
  }
  return s;
}

Subgroup FiniteGroup::trivial() const {
  Subgroup s;
  s.members = ElementSet(order());
  s.members.insert(0);
  s.elements = {0};
  return s;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::p_group_prime() const {
  long long n = static_cast<long long>(order());
  if (n == 1) return prime_hint_ ? prime_hint_ : std::optional<int>{};
  for (int p = 2; static_cast<long long>(p) <= n; ++p) {
    if (n % p == 0) {
      if (p_part(n, p) == n) return p;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool FiniteGroup::is_p_group(int p) const {
  long long n = static_cast<long long>(order());
  return p_part(n, p) == n;
}

FiniteGroup FiniteGroup::induced(const Subgroup& sub) const {
  Raw raw;
  const std::size_t n = sub.order();
  raw.order = n;
  raw.degree = degree_;
  raw.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      raw.table[a * n + b] = sub.position(mul(sub.elements[a], sub.elements[b]));
    }
  }
  if (has_permutations()) {
    for (Elem x : sub.elements) raw.perms.push_back(perms_[x]);
  }
  for (Elem g : sub.generators) raw.generators.push_back(sub.position(g));
  if (raw.generators.empty() && n > 1) {
    for (std::size_t i = 1; i < n; ++i) raw.generators.push_back(static_cast<Elem>(i));
  }
  FiniteGroup group = from_raw(std::move(raw));
  group.prime_hint_ = prime_hint_;
  return group;
}

}  // namespace fusionsys
