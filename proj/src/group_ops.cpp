#include "fusionsys/group_ops.hpp"

#include <algorithm>
#include <numeric>

namespace fusionsys {

namespace {

bool is_p_element(const FiniteGroup& g, Elem x, int p) {
  long long o = g.element_order(x);
  return p_part(o, p) == o;
}

bool coprime_order(std::size_t n, int p) { return n % static_cast<std::size_t>(p) != 0; }

Subgroup subgroup_of_set(const FiniteGroup& g, const ElementSet& set) {
  Subgroup s;
  s.members = set;
  s.elements = set.members();
  ElementSet span(g.order());
  span.insert(0);
  for (Elem x : s.elements) {
    if (span.contains(x)) continue;
    s.generators.push_back(x);
    span = g.closure(s.generators);
  }
  return s;
}

// Closure of `gens` under conjugation by the generators of `g`.
ElementSet normal_closure_of(const FiniteGroup& g, std::vector<Elem> gens) {
  ElementSet n = g.closure(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem s : g.generators()) {
      Elem y = g.conj(s, gens[i]);
      if (!n.contains(y)) {
        gens.push_back(y);
        n = g.closure(gens);
      }
    }
  }
  return n;
}

}  // namespace

Subgroup center(const FiniteGroup& group) {
  ElementSet z(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) {
    bool central = true;
    for (Elem s : group.generators()) {
      if (group.mul(static_cast<Elem>(x), s) != group.mul(s, static_cast<Elem>(x))) {
        central = false;
        break;
      }
    }
    if (central) z.insert(static_cast<Elem>(x));
  }
  return subgroup_of_set(group, z);
}

Subgroup derived_subgroup(const FiniteGroup& group) {
  std::vector<Elem> comms;
  for (Elem a : group.generators())
    for (Elem b : group.generators()) {
      Elem c = group.commutator(a, b);
      if (c != 0) comms.push_back(c);
    }
  return subgroup_of_set(group, normal_closure_of(group, comms));
}

Subgroup normal_closure(const FiniteGroup& group, const Subgroup& sub) {
  if (sub.members.universe() != group.order()) {
    fail(ErrorCode::kNotSubgroup, "subgroup belongs to a different group");
  }
  std::vector<Elem> gens = sub.generators;
  if (gens.empty()) {
    for (Elem x : sub.elements)
      if (x != 0) gens.push_back(x);
  }
  if (group.closure(gens) != sub.members) fail(ErrorCode::kNotSubgroup, "not a subgroup");
  return subgroup_of_set(group, normal_closure_of(group, gens));
}

bool is_normal(const FiniteGroup& group, const Subgroup& sub) {
  std::vector<Elem> gens = sub.generators;
  if (gens.empty()) gens = sub.elements;
  for (Elem s : group.generators())
    for (Elem x : gens)
      if (!sub.contains(group.conj(s, x))) return false;
  return true;
}

Subgroup o_p_prime(const FiniteGroup& group, int p) {
  ElementSet acc(group.order());
  acc.insert(0);
  std::vector<Elem> gens;
  for (std::size_t x = 1; x < group.order(); ++x) {
    Elem e = static_cast<Elem>(x);
    if (acc.contains(e) || group.element_order(e) % p == 0) continue;
    ElementSet n = normal_closure_of(group, {e});
    if (!coprime_order(n.count(), p)) continue;
    gens.push_back(e);
    acc = normal_closure_of(group, gens);
  }
  return subgroup_of_set(group, acc);
}

Subgroup o_upper_p_prime(const FiniteGroup& group, int p) {
  ElementSet acc(group.order());
  acc.insert(0);
  std::vector<Elem> gens;
  for (std::size_t x = 1; x < group.order(); ++x) {
    Elem e = static_cast<Elem>(x);
    if (acc.contains(e) || !is_p_element(group, e, p)) continue;
    gens.push_back(e);
    acc = group.closure(gens);
  }
  return subgroup_of_set(group, acc);
}

Subgroup o_p(const FiniteGroup& group, int p) {
  ElementSet acc(group.order());
  acc.insert(0);
  std::vector<Elem> gens;
  for (std::size_t x = 1; x < group.order(); ++x) {
    Elem e = static_cast<Elem>(x);
    if (acc.contains(e) || !is_p_element(group, e, p)) continue;
    ElementSet n = normal_closure_of(group, {e});
    long long c = static_cast<long long>(n.count());
    if (p_part(c, p) != c) continue;
    gens.push_back(e);
    acc = normal_closure_of(group, gens);
  }
  return subgroup_of_set(group, acc);
}

CharacteristicSubgroups characteristic_subgroups(const FiniteGroup& group, int p) {
  if (!is_prime(p)) fail(ErrorCode::kInvalidInput, "p must be prime");
  return {center(group), derived_subgroup(group), o_p_prime(group, p), o_upper_p_prime(group, p)};
}

Subgroup sylow(const FiniteGroup& group, int p) {
  const long long target = p_part(static_cast<long long>(group.order()), p);
  std::vector<Elem> gens;
  ElementSet cur = group.closure(gens);
  while (static_cast<long long>(cur.count()) < target) {
    bool grown = false;
    for (std::size_t x = 1; x < group.order() && !grown; ++x) {
      Elem e = static_cast<Elem>(x);
      if (cur.contains(e) || !is_p_element(group, e, p)) continue;
      bool normalizes = true;
      for (Elem g : gens) {
        if (!cur.contains(group.conj(e, g))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      std::vector<Elem> next = gens;
      next.push_back(e);
      ElementSet k = group.closure(next);
      long long c = static_cast<long long>(k.count());
      if (p_part(c, p) != c) continue;
      gens = std::move(next);
      cur = std::move(k);
      grown = true;
    }
    ensure(grown, "Sylow growth stalled below the Sylow order");
  }
  std::vector<Elem> best = cur.members();
  for (std::size_t g = 1; g < group.order(); ++g) {
    ElementSet conj(group.order());
    for (Elem x : best) conj.insert(group.conj(static_cast<Elem>(g), x));
    std::vector<Elem> cand = conj.members();
    if (cand < best) best = std::move(cand);
  }
  return subgroup_of_set(group, ElementSet::of(group.order(), best));
}

bool is_sylow(const FiniteGroup& group, const Subgroup& sub, int p) {
  long long o = static_cast<long long>(sub.order());
  return p_part(o, p) == o && o == p_part(static_cast<long long>(group.order()), p);
}

OmegaSeries omega_central_series(const FiniteGroup& S) {
  OmegaSeries series;
  series.terms.push_back(S.trivial());
  if (S.order() == 1) return series;
  auto prime = S.p_group_prime();
  if (!prime) fail(ErrorCode::kNotPGroup, "omega series needs a p-group");
  const int p = *prime;
  while (true) {
    const ElementSet& n = series.terms.back().members;
    ElementSet next(S.order());
    for (std::size_t x = 0; x < S.order(); ++x) {
      Elem e = static_cast<Elem>(x);
      if (!n.contains(S.pow(e, p))) continue;
      bool central = true;
      for (Elem s : S.generators()) {
        if (!n.contains(S.commutator(e, s))) {
          central = false;
          break;
        }
      }
      if (central) next.insert(e);
    }
    if (next == n) break;
    series.terms.push_back(subgroup_of_set(S, next));
  }
  return series;
}

FittingSplit fitting_split(const FiniteGroup& A, const std::vector<Elem>& f) {
  if (!A.is_abelian()) fail(ErrorCode::kNotAbelian, "Fitting split needs an abelian group");
  const std::size_t n = A.order();
  if (f.size() != n) fail(ErrorCode::kInvalidInput, "endomorphism must list every element image");
  for (std::size_t x = 0; x < n; ++x)
    for (Elem g : A.generators())
      if (f[A.mul(static_cast<Elem>(x), g)] != A.mul(f[x], f[g])) {
        fail(ErrorCode::kInvalidInput, "map is not an endomorphism");
      }
  std::vector<Elem> power(n);
  std::iota(power.begin(), power.end(), 0);
  auto image_size = [&](const std::vector<Elem>& m) {
    ElementSet s(n);
    for (Elem v : m) s.insert(v);
    return s.count();
  };
  std::size_t size = n;
  int k = 0;
  while (true) {
    std::vector<Elem> next(n);
    for (std::size_t x = 0; x < n; ++x) next[x] = f[power[x]];
    std::size_t next_size = image_size(next);
    if (next_size == size) break;
    power = std::move(next);
    size = next_size;
    ++k;
  }
  FittingSplit out;
  out.stable_power = k;
  ElementSet img(n), ker(n);
  for (std::size_t x = 0; x < n; ++x) {
    img.insert(power[x]);
    if (power[x] == 0) ker.insert(static_cast<Elem>(x));
  }
  out.image_part = subgroup_of_set(A, img);
  out.kernel_part = subgroup_of_set(A, ker);
  return out;
}

DirectProduct direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                             const Guardrails& limits) {
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  if (n > limits.closure) {
    fail(ErrorCode::kGroupTooLarge, "direct product of order " + std::to_string(n) +
                                        " exceeds the closure guardrail");
  }
  FiniteGroup::Raw raw;
  raw.order = n;
  const bool perms = g1.has_permutations() && g2.has_permutations();
  if (perms) {
    const std::size_t d1 = g1.degree(), d2 = g2.degree();
    raw.degree = d1 + d2;
    raw.perms.reserve(n);
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n2; ++b) {
        Permutation pr(d1 + d2);
        const auto& pa = g1.permutation(static_cast<Elem>(a));
        const auto& pb = g2.permutation(static_cast<Elem>(b));
        for (std::size_t i = 0; i < d1; ++i) pr[i] = pa[i];
        for (std::size_t i = 0; i < d2; ++i) pr[d1 + i] = static_cast<int>(d1) + pb[i];
        raw.perms.push_back(std::move(pr));
      }
  }
  if (!perms || n <= 2048) {
    if (n > 4096) fail(ErrorCode::kGroupTooLarge, "product of Cayley-table groups too large");
    raw.table.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Elem a = g1.mul(static_cast<Elem>(x / n2), static_cast<Elem>(y / n2));
        Elem b = g2.mul(static_cast<Elem>(x % n2), static_cast<Elem>(y % n2));
        raw.table[x * n + y] = static_cast<Elem>(a * n2 + b);
      }
  }
  for (Elem g : g1.generators()) raw.generators.push_back(static_cast<Elem>(g * n2));
  for (Elem g : g2.generators()) raw.generators.push_back(g);
  DirectProduct dp;
  dp.product = FiniteGroup::from_raw(std::move(raw));
  if (g1.prime_hint() && g1.prime_hint() == g2.prime_hint()) dp.product.set_prime_hint(g1.prime_hint());
  Subgroup whole = dp.product.whole();
  Subgroup w1 = g1.whole(), w2 = g2.whole();
  std::vector<Elem> e1, e2;
  for (std::size_t a = 0; a < n1; ++a) e1.push_back(static_cast<Elem>(a * n2));
  for (std::size_t b = 0; b < n2; ++b) e2.push_back(static_cast<Elem>(b));
  Subgroup f1 = subgroup_of_set(dp.product, ElementSet::of(n, e1));
  Subgroup f2 = subgroup_of_set(dp.product, ElementSet::of(n, e2));
  dp.embed1 = GroupHom{w1, f1, e1};
  dp.embed2 = GroupHom{w2, f2, e2};
  std::vector<Elem> p1(n), p2(n);
  for (std::size_t x = 0; x < n; ++x) {
    p1[x] = static_cast<Elem>(x / n2);
    p2[x] = static_cast<Elem>(x % n2);
  }
  dp.proj1 = GroupHom{whole, w1, p1};
  dp.proj2 = GroupHom{whole, w2, p2};
  return dp;
}

Quotient quotient(const FiniteGroup& group, const Subgroup& normal) {
  if (!is_normal(group, normal)) fail(ErrorCode::kNotNormal, "quotient by a non-normal subgroup");
  const std::size_t n = group.order();
  Quotient q;
  q.coset_of.assign(n, -1);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (q.coset_of[x] >= 0) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem m : normal.elements) q.coset_of[group.mul(static_cast<Elem>(x), m)] = id;
  }
  const std::size_t k = reps.size();
  FiniteGroup::Raw raw;
  raw.order = k;
  raw.table.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) raw.table[a * k + b] = q.coset_of[group.mul(reps[a], reps[b])];
  for (Elem g : group.generators()) {
    Elem c = q.coset_of[g];
    if (c != 0 && std::find(raw.generators.begin(), raw.generators.end(), c) == raw.generators.end()) {
      raw.generators.push_back(c);
    }
  }
  q.group = FiniteGroup::from_raw(std::move(raw));
  return q;
}

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& group) {
  Subgroup whole = group.whole();
  return enumerate_homs(group, whole, group, whole, true);
}

}  // namespace fusionsys
