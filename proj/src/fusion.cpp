#include "fusionsys/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "fusionsys/group_ops.hpp"

namespace fusionsys {

namespace {

struct MapHash {
  std::size_t operator()(const ElemMap& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem x : m) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using MapSet = std::unordered_set<ElemMap, MapHash>;

}  // namespace

bool same_lattice(const SubgroupLattice& a, const SubgroupLattice& b) {
  if (&a == &b) return true;
  if (a.group().order() != b.group().order() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[static_cast<SubgroupId>(i)].elements != b[static_cast<SubgroupId>(i)].elements) return false;
  }
  return true;
}

ElemMap identity_map(const SubgroupLattice& lat, SubgroupId p) { return lat[p].elements; }

ElemMap compose_maps(const SubgroupLattice& lat, SubgroupId mid, const ElemMap& psi,
                     const ElemMap& phi) {
  ElemMap out(phi.size());
  for (std::size_t k = 0; k < phi.size(); ++k) {
    int pos = lat.position(mid, phi[k]);
    ensure(pos >= 0, "composition through a subgroup that does not contain the image");
    out[k] = psi[pos];
  }
  return out;
}

ElemMap invert_map(const SubgroupLattice& lat, SubgroupId src, SubgroupId dst, const ElemMap& map) {
  ElemMap out(map.size(), -1);
  const auto& el = lat[src].elements;
  for (std::size_t k = 0; k < map.size(); ++k) {
    int pos = lat.position(dst, map[k]);
    ensure(pos >= 0, "inverse of a map that does not land in its target");
    out[pos] = el[k];
  }
  return out;
}

ElemMap restrict_map(const SubgroupLattice& lat, SubgroupId p, const ElemMap& map, SubgroupId r) {
  const auto& el = lat[r].elements;
  ElemMap out(el.size());
  for (std::size_t k = 0; k < el.size(); ++k) {
    int pos = lat.position(p, el[k]);
    ensure(pos >= 0, "restriction to a subgroup outside the domain");
    out[k] = map[pos];
  }
  return out;
}

std::optional<SubgroupId> image_of(const SubgroupLattice& lat, const ElemMap& map) {
  return lat.find(ElementSet::of(lat.group().order(), map));
}

ElemMap conjugation_map(const SubgroupLattice& lat, SubgroupId p, Elem g) {
  const auto& el = lat[p].elements;
  ElemMap out(el.size());
  for (std::size_t k = 0; k < el.size(); ++k) out[k] = lat.group().conj(g, el[k]);
  return out;
}

FusionSystem::FusionSystem(LatticePtr lattice, SubgroupId base, int p, std::vector<IsoList> isos)
    : lattice_(std::move(lattice)), base_(base), p_(p), isos_(std::move(isos)) {
  isos_.resize(lattice_->size());
  for (std::size_t i = 0; i < isos_.size(); ++i) {
    auto& list = isos_[i];
    if (!list.empty()) {
      ensure(lattice_->contains(base_, static_cast<SubgroupId>(i)), "isomorphism out of a non-object");
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::vector<ElemMap> FusionSystem::isos(SubgroupId p, SubgroupId q) const {
  const auto& list = isos_[p];
  auto lo = std::lower_bound(list.begin(), list.end(), q,
                             [](const auto& e, SubgroupId v) { return e.first < v; });
  std::vector<ElemMap> out;
  for (auto it = lo; it != list.end() && it->first == q; ++it) out.push_back(it->second);
  return out;
}

bool FusionSystem::has_iso(SubgroupId p, SubgroupId q, const ElemMap& map) const {
  const auto& list = isos_[p];
  return std::binary_search(list.begin(), list.end(), std::make_pair(q, map));
}

bool FusionSystem::contains(SubgroupId p, const ElemMap& map) const {
  auto r = image_of(*lattice_, map);
  if (!r || !is_object(*r)) return false;
  return has_iso(p, *r, map);
}

std::vector<ElemMap> FusionSystem::homs(SubgroupId p, SubgroupId q) const {
  std::vector<ElemMap> out;
  for (SubgroupId r : lattice_->below(q)) {
    auto part = isos(p, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t FusionSystem::iso_count() const {
  std::size_t n = 0;
  for (const auto& l : isos_) n += l.size();
  return n;
}

bool FusionSystem::operator==(const FusionSystem& other) const {
  if (!lattice_ || !other.lattice_) return lattice_ == other.lattice_;
  return p_ == other.p_ && same_lattice(*lattice_, *other.lattice_) && base_ == other.base_ &&
         isos_ == other.isos_;
}

FusionSystem inner_fusion(LatticePtr lattice, SubgroupId base, int p) {
  const auto& lat = *lattice;
  std::vector<FusionSystem::IsoList> isos(lat.size());
  for (SubgroupId q : lat.below(base)) {
    MapSet seen;
    for (Elem g : lat[base].elements) {
      ElemMap m = conjugation_map(lat, q, g);
      if (!seen.insert(m).second) continue;
      isos[q].emplace_back(*image_of(lat, m), std::move(m));
    }
  }
  return FusionSystem(std::move(lattice), base, p, std::move(isos));
}

FusionSystem group_fusion(const FiniteGroup& G, std::span<const Elem> conjugators,
                          LatticePtr lattice, SubgroupId base, const std::vector<Elem>& embed,
                          int p) {
  const auto& lat = *lattice;
  std::vector<Elem> back(G.order(), -1);
  for (std::size_t x = 0; x < embed.size(); ++x) back[embed[x]] = static_cast<Elem>(x);
  const Subgroup& t = lat[base];
  std::vector<FusionSystem::IsoList> isos(lat.size());
  for (SubgroupId q : lat.below(base)) {
    const auto& el = lat[q].elements;
    MapSet seen;
    for (Elem h : conjugators) {
      ElemMap m(el.size());
      bool inside = true;
      for (std::size_t k = 0; k < el.size() && inside; ++k) {
        Elem y = back[G.conj(h, embed[el[k]])];
        if (y < 0 || !t.contains(y)) inside = false;
        m[k] = y;
      }
      if (!inside || !seen.insert(m).second) continue;
      auto dst = image_of(lat, m);
      ensure(dst.has_value(), "conjugate of a subgroup is not a subgroup");
      isos[q].emplace_back(*dst, std::move(m));
    }
  }
  return FusionSystem(std::move(lattice), base, p, std::move(isos));
}

FusionSystem fusion_of_group(const FiniteGroup& G, int p, const std::optional<Subgroup>& S) {
  if (!is_prime(p)) fail(ErrorCode::kInvalidInput, "p must be prime");
  Subgroup s;
  if (S) {
    if (S->members.universe() != G.order() || !G.is_subgroup(S->members)) {
      fail(ErrorCode::kNotSubgroup, "supplied Sylow candidate is not a subgroup");
    }
    if (!is_sylow(G, *S, p)) fail(ErrorCode::kNotSylow, "supplied subgroup is not Sylow");
    s = *S;
  } else {
    s = sylow(G, p);
  }
  FiniteGroup sg = G.induced(s);
  sg.set_prime_hint(p);
  LatticePtr lat = SubgroupLattice::make(std::move(sg));
  std::vector<Elem> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return group_fusion(G, all, lat, lat->whole_id(), s.elements, p);
}

std::vector<Arrow> arrows_from_maps(const SubgroupLattice& lat,
                                    const std::vector<std::pair<SubgroupId, ElemMap>>& maps) {
  std::vector<Arrow> out;
  for (const auto& [src, map] : maps) {
    if (map.size() != lat[src].order()) fail(ErrorCode::kInvalidInput, "map size differs from domain order");
    for (Elem x : map) {
      if (x < 0 || static_cast<std::size_t>(x) >= lat.group().order()) {
        fail(ErrorCode::kInvalidInput, "map image outside the group");
      }
    }
    auto dst = image_of(lat, map);
    if (!dst || lat[*dst].order() != map.size()) {
      fail(ErrorCode::kInvalidInput, "generator is not injective onto a subgroup");
    }
    const auto& el = lat[src].elements;
    const FiniteGroup& g = lat.group();
    for (std::size_t a = 0; a < el.size(); ++a)
      for (std::size_t b = 0; b < el.size(); ++b) {
        if (map[lat.position(src, g.mul(el[a], el[b]))] != g.mul(map[a], map[b])) {
          fail(ErrorCode::kInvalidInput, "generator is not a homomorphism");
        }
      }
    out.push_back({src, *dst, map});
  }
  return out;
}

FusionSystem generated_fusion(LatticePtr lattice, SubgroupId base, int p,
                              const std::vector<Arrow>& gens, const Guardrails& limits) {
  const auto& lat = *lattice;
  for (const auto& a : gens) {
    if (!lat.contains(base, a.src) || !lat.contains(base, a.dst)) {
      fail(ErrorCode::kInvalidInput, "generator between subgroups outside the base");
    }
    if (image_of(lat, a.map) != a.dst || a.map.size() != lat[a.src].order()) {
      fail(ErrorCode::kInvalidInput, "generator is not an isomorphism onto its target");
    }
  }
  // Every composite of restrictions restricts to a composite of
  // restrictions, so closing the restricted generators under composition
  // and inverses gives the whole system.
  std::vector<std::set<std::pair<SubgroupId, ElemMap>>> arrows(lat.size());
  auto add_restrictions = [&](SubgroupId src, const ElemMap& map) {
    for (SubgroupId r : lat.below(src)) {
      ElemMap m = src == r ? map : restrict_map(lat, src, map, r);
      SubgroupId d = *image_of(lat, m);
      arrows[r].emplace(d, std::move(m));
    }
  };
  {
    MapSet seen;
    for (Elem g : lat[base].elements) {
      ElemMap m = conjugation_map(lat, base, g);
      if (seen.insert(m).second) add_restrictions(base, m);
    }
  }
  for (const auto& a : gens) add_restrictions(a.src, a.map);

  struct Edge {
    SubgroupId src, dst;
    const ElemMap* map;
  };
  std::vector<std::vector<Edge>> touching(lat.size());
  for (std::size_t s = 0; s < lat.size(); ++s) {
    for (const auto& [d, m] : arrows[s]) {
      Edge e{static_cast<SubgroupId>(s), d, &m};
      touching[s].push_back(e);
      if (d != static_cast<SubgroupId>(s)) touching[d].push_back(e);
    }
  }

  std::vector<FusionSystem::IsoList> isos(lat.size());
  std::vector<char> visited(lat.size(), 0);
  std::vector<ElemMap> transversal(lat.size());
  std::size_t total = 0;
  for (SubgroupId root : lat.below(base)) {
    if (visited[root]) continue;
    std::vector<SubgroupId> comp{root};
    visited[root] = 1;
    transversal[root] = identity_map(lat, root);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      SubgroupId u = comp[head];
      for (const Edge& e : touching[u]) {
        if (e.src == u && !visited[e.dst]) {
          visited[e.dst] = 1;
          transversal[e.dst] = compose_maps(lat, u, *e.map, transversal[u]);
          comp.push_back(e.dst);
        }
        if (e.dst == u && !visited[e.src]) {
          visited[e.src] = 1;
          ElemMap inv = invert_map(lat, e.src, e.dst, *e.map);
          transversal[e.src] = compose_maps(lat, u, inv, transversal[u]);
          comp.push_back(e.src);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::map<SubgroupId, ElemMap> back;  // P -> root
    for (SubgroupId q : comp) back[q] = invert_map(lat, root, q, transversal[q]);

    // Aut(root) from Schreier generators, closed incrementally.
    MapSet group{identity_map(lat, root)};
    std::vector<ElemMap> group_gens;
    for (SubgroupId q : comp) {
      for (const auto& [d, m] : arrows[q]) {
        ElemMap s = compose_maps(lat, d, back[d], compose_maps(lat, q, m, transversal[q]));
        if (group.count(s)) continue;
        group_gens.push_back(std::move(s));
        std::vector<ElemMap> queue{identity_map(lat, root)};
        MapSet closed{queue.front()};
        for (std::size_t h = 0; h < queue.size(); ++h) {
          for (const auto& g : group_gens) {
            ElemMap next = compose_maps(lat, root, queue[h], g);
            if (closed.insert(next).second) {
              queue.push_back(std::move(next));
              if (closed.size() > limits.table) {
                fail(ErrorCode::kGuardrailExceeded, "automorphism group exceeds table guardrail");
              }
            }
          }
        }
        group = std::move(closed);
      }
    }
    total += comp.size() * comp.size() * group.size();
    if (total > limits.table) {
      fail(ErrorCode::kGuardrailExceeded, "generated fusion table exceeds guardrail");
    }
    std::vector<ElemMap> auts(group.begin(), group.end());
    std::sort(auts.begin(), auts.end());
    for (SubgroupId a : comp) {
      for (const auto& alpha : auts) {
        ElemMap through = compose_maps(lat, root, alpha, back[a]);
        for (SubgroupId b : comp) {
          isos[a].emplace_back(b, compose_maps(lat, root, transversal[b], through));
        }
      }
    }
  }
  return FusionSystem(std::move(lattice), base, p, std::move(isos));
}

FusionSystem restrict_full(const FusionSystem& F, SubgroupId t) {
  if (!F.is_object(t)) fail(ErrorCode::kNotSubgroup, "restriction base is not a subgroup of the base");
  const auto& lat = F.lattice();
  std::vector<FusionSystem::IsoList> isos(lat.size());
  for (SubgroupId q : lat.below(t)) {
    for (const auto& e : F.isos_from(q)) {
      if (lat.contains(t, e.first)) isos[q].push_back(e);
    }
  }
  return FusionSystem(F.lattice_ptr(), t, F.prime(), std::move(isos));
}

std::vector<Elem> element_class(const FusionSystem& F, Elem x) {
  const auto& lat = F.lattice();
  SubgroupId c = lat.generated(std::vector<Elem>{x});
  int pos = lat.position(c, x);
  std::vector<Elem> out;
  for (const auto& [d, m] : F.isos_from(c)) out.push_back(m[pos]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Conjugacy conjugacy(const FusionSystem& F) {
  const auto& lat = F.lattice();
  Conjugacy out;
  std::vector<char> seen(lat.size(), 0);
  for (SubgroupId q : F.objects()) {
    if (seen[q]) continue;
    std::vector<SubgroupId> cls;
    for (const auto& e : F.isos_from(q)) cls.push_back(e.first);
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (SubgroupId r : cls) seen[r] = 1;
    out.subgroup_classes.push_back(std::move(cls));
  }
  std::vector<char> eseen(F.group().order(), 0);
  for (Elem x : F.base_subgroup().elements) {
    if (eseen[x]) continue;
    auto cls = element_class(F, x);
    for (Elem y : cls) eseen[y] = 1;
    out.element_classes.push_back(std::move(cls));
  }
  return out;
}

SubgroupId base_centralizer(const FusionSystem& F, SubgroupId p) {
  return F.lattice().meet(F.lattice().centralizer(p), F.base());
}

SubgroupId base_normalizer(const FusionSystem& F, SubgroupId p) {
  return F.lattice().meet(F.lattice().normalizer(p), F.base());
}

std::size_t base_automizer_order(const FusionSystem& F, SubgroupId p) {
  const auto& lat = F.lattice();
  return lat[base_normalizer(F, p)].order() / lat[base_centralizer(F, p)].order();
}

bool is_central(const FusionSystem& F, SubgroupId p) {
  const auto& lat = F.lattice();
  const FiniteGroup& g = lat.group();
  const auto& pel = lat[p].elements;
  for (SubgroupId q : F.objects()) {
    SubgroupId qp = lat.join(q, p);
    const auto& qel = lat[q].elements;
    for (const auto& [r, phi] : F.isos_from(q)) {
      SubgroupId rp = lat.join(r, p);
      ElemMap ext(lat[qp].order(), -1);
      for (std::size_t k = 0; k < qel.size(); ++k) {
        for (Elem z : pel) {
          int pos = lat.position(qp, g.mul(qel[k], z));
          Elem v = g.mul(phi[k], z);
          if (ext[pos] < 0) {
            ext[pos] = v;
          } else if (ext[pos] != v) {
            return false;
          }
        }
      }
      if (!F.has_iso(qp, rp, ext)) return false;
    }
  }
  return true;
}

SubgroupId fixed_center(const FusionSystem& F) {
  const auto& lat = F.lattice();
  SubgroupId z = base_centralizer(F, F.base());
  std::vector<Elem> fixed;
  for (Elem x : lat[z].elements) {
    auto cls = element_class(F, x);
    if (cls.size() == 1) fixed.push_back(x);
  }
  return lat.generated(fixed);
}

SubgroupId center_of(const FusionSystem& F) {
  const auto& lat = F.lattice();
  SubgroupId zs = base_centralizer(F, F.base());
  SubgroupId acc = lat.trivial_id();
  const auto& cands = lat.below(zs);
  for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
    if (lat.contains(acc, *it)) continue;
    if (is_central(F, *it)) acc = lat.join(acc, *it);
  }
  if (acc != fixed_center(F) && is_saturated(F)) {
    fail(ErrorCode::kInternalInconsistency,
         "center of a saturated system differs from the fusion-fixed part of Z(S)");
  }
  return acc;
}

SubgroupId focal_of(const FusionSystem& F) {
  const FiniteGroup& g = F.group();
  std::vector<Elem> gens;
  for (const auto& cls : conjugacy(F).element_classes) {
    for (Elem y : cls) {
      Elem d = g.mul(cls.front(), g.inv(y));
      if (d != 0) gens.push_back(d);
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return F.lattice().generated(gens);
}

bool is_strongly_closed(const FusionSystem& F, SubgroupId p) {
  const Subgroup& sub = F.lattice()[p];
  for (Elem x : sub.elements) {
    for (Elem y : element_class(F, x)) {
      if (!sub.contains(y)) return false;
    }
  }
  return true;
}

bool is_centric(const FusionSystem& F, SubgroupId p) {
  const auto& lat = F.lattice();
  SubgroupId last = -1;
  for (const auto& e : F.isos_from(p)) {
    if (e.first == last) continue;
    last = e.first;
    if (!lat.contains(e.first, base_centralizer(F, e.first))) return false;
  }
  return true;
}

namespace {

Permutation as_position_perm(const SubgroupLattice& lat, SubgroupId p, const ElemMap& m) {
  Permutation perm(std::max<std::size_t>(m.size(), 1), 0);
  for (std::size_t k = 0; k < m.size(); ++k) perm[k] = lat.position(p, m[k]);
  return perm;
}

}  // namespace

FiniteGroup automizer_group(const FusionSystem& F, SubgroupId p) {
  const auto& lat = F.lattice();
  auto auts = F.automorphisms(p);
  std::vector<Permutation> gens;
  std::set<Permutation> closed;
  Permutation id = as_position_perm(lat, p, identity_map(lat, p));
  closed.insert(id);
  for (const auto& a : auts) {
    Permutation perm = as_position_perm(lat, p, a);
    if (closed.count(perm)) continue;
    gens.push_back(perm);
    std::vector<Permutation> queue{id};
    std::set<Permutation> next{id};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (const auto& g : gens) {
        Permutation c(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) c[i] = queue[h][g[i]];
        if (next.insert(c).second) queue.push_back(std::move(c));
      }
    }
    closed = std::move(next);
  }
  if (gens.empty()) gens.push_back(id);
  FiniteGroup a = FiniteGroup::from_permutations(gens);
  ensure(a.order() == auts.size(), "automizer is not closed under composition");
  return a;
}

bool is_radical(const FusionSystem& F, SubgroupId p) {
  const auto& lat = F.lattice();
  FiniteGroup a = automizer_group(F, p);
  // |Inn(P)| = |P : Z(P)|
  std::size_t zp = (lat[lat.centralizer(p)].members & lat[p].members).count();
  std::size_t inner = lat[p].order() / zp;
  return o_p(a, F.prime()).order() == inner;
}

SubgroupClassification classify_subgroup(const FusionSystem& F, SubgroupId p) {
  if (!F.is_object(p)) fail(ErrorCode::kNotSubgroup, "subgroup is not contained in the base");
  return {is_strongly_closed(F, p), is_centric(F, p), is_radical(F, p)};
}

FusionInvariants invariants(const FusionSystem& F) {
  FusionInvariants inv;
  inv.center = center_of(F);
  inv.focal = focal_of(F);
  for (SubgroupId q : F.objects()) {
    if (is_strongly_closed(F, q)) inv.strongly_closed.push_back(q);
    bool centric = is_centric(F, q);
    if (centric) inv.centric.push_back(q);
    if (is_radical(F, q)) inv.radical.push_back(q);
  }
  return inv;
}

bool is_fully_automized(const FusionSystem& F, SubgroupId p) {
  std::size_t aut = F.automorphisms(p).size();
  std::size_t inner = base_automizer_order(F, p);
  ensure(aut % inner == 0, "Aut_S(P) is not contained in Aut_F(P)");
  return (aut / inner) % static_cast<std::size_t>(F.prime()) != 0;
}

std::optional<std::pair<Arrow, SubgroupId>> receptive_failure(const FusionSystem& F, SubgroupId p) {
  const auto& lat = F.lattice();
  const FiniteGroup& g = lat.group();
  MapSet aut_s;
  for (Elem x : lat[base_normalizer(F, p)].elements) aut_s.insert(conjugation_map(lat, p, x));
  std::vector<SubgroupId> cls;
  for (const auto& e : F.isos_from(p)) cls.push_back(e.first);
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  const auto& pel = lat[p].elements;
  for (SubgroupId q : cls) {
    SubgroupId nq = base_normalizer(F, q);
    for (const ElemMap& phi : F.isos(q, p)) {
      ElemMap phi_inv = invert_map(lat, q, p, phi);
      std::vector<Elem> nphi;
      for (Elem x : lat[nq].elements) {
        ElemMap psi(pel.size());
        for (std::size_t k = 0; k < pel.size(); ++k) {
          psi[k] = apply_map(lat, q, phi, g.conj(x, phi_inv[k]));
        }
        if (aut_s.count(psi)) nphi.push_back(x);
      }
      SubgroupId n = lat.id_of(ElementSet::of(g.order(), nphi));
      bool extends = false;
      for (const auto& [r, m] : F.isos_from(n)) {
        if (restrict_map(lat, n, m, q) == phi) {
          extends = true;
          break;
        }
      }
      if (!extends) return std::make_pair(Arrow{q, p, phi}, n);
    }
  }
  return std::nullopt;
}

SaturationReport saturation_report(const FusionSystem& F) {
  SaturationReport rep;
  for (auto& cls : conjugacy(F).subgroup_classes) {
    SaturationClass sc;
    sc.members = cls;
    sc.representative = cls.front();
    SaturationClass first_failure;
    for (SubgroupId q : cls) {
      bool fa = is_fully_automized(F, q);
      std::optional<std::pair<Arrow, SubgroupId>> rf;
      if (fa) rf = receptive_failure(F, q);
      if (fa && !rf) {
        sc.witness = q;
        break;
      }
      if (q == sc.representative) {
        first_failure.failing_axiom = fa ? "receptive" : "fully_automized";
        if (rf) {
          first_failure.failing_map = rf->first;
          first_failure.n_phi = rf->second;
        }
      }
    }
    if (!sc.witness) {
      rep.verdict = false;
      sc.failing_axiom = first_failure.failing_axiom;
      sc.failing_map = first_failure.failing_map;
      sc.n_phi = first_failure.n_phi;
    }
    rep.classes.push_back(std::move(sc));
  }
  return rep;
}

bool is_saturated(const FusionSystem& F) { return saturation_report(F).verdict; }

std::vector<AlperinGenerator> alperin_generators(const FusionSystem& F) {
  if (!is_saturated(F)) fail(ErrorCode::kNotSaturated, "Alperin generators need a saturated system");
  std::vector<AlperinGenerator> out;
  std::vector<Arrow> arrows;
  for (SubgroupId q : F.objects()) {
    if (!is_centric(F, q) || !is_radical(F, q)) continue;
    AlperinGenerator gen{q, F.automorphisms(q)};
    for (const auto& a : gen.automorphisms) arrows.push_back({q, q, a});
    out.push_back(std::move(gen));
  }
  FusionSystem regenerated = generated_fusion(F.lattice_ptr(), F.base(), F.prime(), arrows);
  if (!(regenerated == F)) {
    fail(ErrorCode::kGenerationMismatch, "centric radical automizers do not regenerate the system");
  }
  return out;
}

}  // namespace fusionsys
