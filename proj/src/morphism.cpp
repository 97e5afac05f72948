#include "fusionsys/morphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fusionsys {

namespace {

std::string arrow_text(const SubgroupLattice& lat, SubgroupId p, SubgroupId q) {
  return "arrow " + std::to_string(p) + " -> " + std::to_string(q) + " (orders " +
         std::to_string(lat[p].order()) + ", " + std::to_string(lat[q].order()) + ")";
}

// Join of the bases of every part except `skip`.
SubgroupId join_except(const SubgroupLattice& lat, const std::vector<Subsystem>& parts, std::size_t skip) {
  SubgroupId out = lat.trivial_id();
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j != skip) out = lat.join(out, parts[j].base);
  }
  return out;
}

// phi on P extended by the identity on H, as a map on PH; nullopt when not
// well defined.
std::optional<std::pair<SubgroupId, ElemMap>> pad(const SubgroupLattice& lat, SubgroupId p,
                                                  const ElemMap& phi, SubgroupId h) {
  const FiniteGroup& G = lat.group();
  SubgroupId d = lat.join(p, h);
  ElemMap ext(lat[d].order(), -1);
  const auto& pe = lat[p].elements;
  for (std::size_t k = 0; k < pe.size(); ++k) {
    for (Elem y : lat[h].elements) {
      int pos = lat.position(d, G.mul(pe[k], y));
      if (pos < 0) return std::nullopt;
      Elem img = G.mul(phi[k], y);
      if (ext[pos] == -1) {
        ext[pos] = img;
      } else if (ext[pos] != img) {
        return std::nullopt;
      }
    }
  }
  if (std::find(ext.begin(), ext.end(), -1) != ext.end()) return std::nullopt;
  return std::make_pair(d, std::move(ext));
}

// The product map x_1...x_k -> phi_1(x_1)...phi_k(x_k) on P_1...P_k, if well
// defined.
std::optional<std::pair<SubgroupId, ElemMap>> product_map(const SubgroupLattice& lat,
                                                          const std::vector<Arrow>& tuple) {
  const FiniteGroup& G = lat.group();
  SubgroupId d = lat.trivial_id();
  for (const auto& a : tuple) d = lat.join(d, a.src);
  ElemMap ext(lat[d].order(), -1);
  std::vector<std::size_t> idx(tuple.size(), 0);
  while (true) {
    Elem x = 0, y = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      x = G.mul(x, lat[tuple[i].src].elements[idx[i]]);
      y = G.mul(y, tuple[i].map[idx[i]]);
    }
    int pos = lat.position(d, x);
    if (pos < 0) return std::nullopt;
    if (ext[pos] == -1) {
      ext[pos] = y;
    } else if (ext[pos] != y) {
      return std::nullopt;
    }
    std::size_t i = 0;
    for (; i < tuple.size(); ++i) {
      if (++idx[i] < tuple[i].map.size()) break;
      idx[i] = 0;
    }
    if (i == tuple.size()) break;
  }
  if (std::find(ext.begin(), ext.end(), -1) != ext.end()) return std::nullopt;
  return std::make_pair(d, std::move(ext));
}

bool bases_commute(const SubgroupLattice& lat, SubgroupId a, SubgroupId b) {
  const FiniteGroup& G = lat.group();
  for (Elem x : lat[a].generators) {
    for (Elem y : lat[b].generators) {
      if (G.mul(x, y) != G.mul(y, x)) return false;
    }
  }
  return true;
}

// Padded criterion: every arrow of part i, extended by the identity on the
// other bases, lies in F. Arrows must generate their parts.
std::optional<CommuteWitness> padded_failure(const FusionSystem& F, const std::vector<SubgroupId>& bases,
                                             const std::vector<std::vector<Arrow>>& arrows) {
  const auto& lat = F.lattice();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (!bases_commute(lat, bases[i], bases[j])) {
        return CommuteWitness{{}, "bases of parts " + std::to_string(i) + " and " + std::to_string(j) +
                                      " do not commute"};
      }
    }
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    SubgroupId rest = lat.trivial_id();
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (j != i) rest = lat.join(rest, bases[j]);
    }
    for (const auto& a : arrows[i]) {
      auto ext = pad(lat, a.src, a.map, rest);
      bool ok = false;
      if (ext) {
        auto d = image_of(lat, ext->second);
        ok = d && F.has_iso(ext->first, *d, ext->second);
      }
      if (!ok) {
        std::vector<Arrow> tuple;
        for (SubgroupId b : bases) tuple.push_back(Arrow{b, b, identity_map(lat, b)});
        tuple[i] = a;
        return CommuteWitness{std::move(tuple), "product map is not a morphism of the ambient system"};
      }
    }
  }
  return std::nullopt;
}

// Every generating arrow of E lies in F.
bool is_subsystem_of(const FusionSystem& E, const FusionSystem& F) {
  if (!F.is_object(E.base())) return false;
  for (const auto& a : generating_arrows(E)) {
    if (!F.has_iso(a.src, a.dst, a.map)) return false;
  }
  return true;
}

}  // namespace

Elem FusionMorphism::operator()(Elem x) const {
  int pos = source->lattice().position(source->base(), x);
  if (pos < 0) fail(ErrorCode::kInvalidInput, "element outside the source base");
  return f[pos];
}

SubgroupId FusionMorphism::image_subgroup(SubgroupId p) const {
  ElementSet img(target->group().order());
  for (Elem x : source->lattice()[p].elements) img.insert((*this)(x));
  return target->lattice().id_of(img);
}

Arrow FusionMorphism::functor(SubgroupId p, SubgroupId q, const ElemMap& phi) const {
  const auto& tl = target->lattice();
  SubgroupId fp = image_subgroup(p);
  SubgroupId fq = image_subgroup(q);
  ElemMap psi(tl[fp].order(), -1);
  const auto& pe = source->lattice()[p].elements;
  for (std::size_t k = 0; k < pe.size(); ++k) {
    int pos = tl.position(fp, (*this)(pe[k]));
    Elem img = (*this)(phi[k]);
    if (psi[pos] != -1 && psi[pos] != img) {
      fail(ErrorCode::kNotFusionPreserving,
           "image of " + arrow_text(source->lattice(), p, q) + " is not well defined");
    }
    psi[pos] = img;
  }
  if (!target->has_iso(fp, fq, psi)) {
    fail(ErrorCode::kNotFusionPreserving,
         "image of " + arrow_text(source->lattice(), p, q) + " is not a morphism of the target");
  }
  return Arrow{fp, fq, std::move(psi)};
}

bool FusionMorphism::is_injective() const {
  std::set<Elem> seen(f.begin(), f.end());
  return seen.size() == f.size();
}

bool FusionMorphism::is_surjective() const {
  std::set<Elem> seen(f.begin(), f.end());
  return seen.size() == target->base_subgroup().order();
}

std::vector<Arrow> generating_arrows(const FusionSystem& F) {
  const auto& lat = F.lattice();
  std::vector<char> seen(lat.size(), 0);
  std::vector<Arrow> out;
  for (SubgroupId root : F.objects()) {
    if (seen[root]) continue;
    seen[root] = 1;
    // Aut(root): keep only maps outside the closure of those already kept.
    std::set<ElemMap> closure{identity_map(lat, root)};
    for (const auto& [dst, map] : F.isos_from(root)) {
      if (dst == root) {
        if (closure.contains(map)) continue;
        out.push_back(Arrow{root, root, map});
        std::vector<ElemMap> frontier(closure.begin(), closure.end());
        std::vector<ElemMap> gens;
        for (const auto& a : out) {
          if (a.src == root && a.dst == root) gens.push_back(a.map);
        }
        while (!frontier.empty()) {
          std::vector<ElemMap> next;
          for (const auto& m : frontier) {
            for (const auto& g : gens) {
              ElemMap c = compose_maps(lat, root, g, m);
              if (closure.insert(c).second) next.push_back(std::move(c));
            }
          }
          frontier = std::move(next);
        }
      } else if (!seen[dst]) {
        seen[dst] = 1;
        out.push_back(Arrow{root, dst, map});
      }
    }
  }
  return out;
}

FusionMorphism check_morphism(SystemPtr E, SystemPtr F, ElemMap f) {
  auto arrows = generating_arrows(*E);
  return check_morphism(std::move(E), std::move(F), std::move(f), arrows);
}

FusionMorphism check_morphism(SystemPtr E, SystemPtr F, ElemMap f, const std::vector<Arrow>& arrows) {
  const auto& el = E->lattice();
  const auto& fl = F->lattice();
  const auto& base = E->base_subgroup();
  if (f.size() != base.order()) fail(ErrorCode::kInvalidInput, "map size does not match the source base");
  for (Elem y : f) {
    if (y < 0 || static_cast<std::size_t>(y) >= fl.group().order() || !F->base_subgroup().contains(y)) {
      fail(ErrorCode::kNotFusionPreserving, "map leaves the target base");
    }
  }
  FusionMorphism m{E, F, std::move(f)};
  for (Elem x : base.elements) {
    for (Elem g : base.generators) {
      if (m(el.group().mul(x, g)) != fl.group().mul(m(x), m(g))) {
        fail(ErrorCode::kNotFusionPreserving, "not a homomorphism at element " + std::to_string(x));
      }
    }
  }
  for (const auto& a : arrows) m.functor(a.src, a.dst, a.map);
  return m;
}

bool is_morphism(const FusionSystem& E, const FusionSystem& F, const ElemMap& f) {
  try {
    check_morphism(std::make_shared<const FusionSystem>(E), std::make_shared<const FusionSystem>(F), f);
    return true;
  } catch (const FusionError& e) {
    if (e.code() == ErrorCode::kInternalInconsistency) throw;
    return false;
  }
}

FusionMorphism identity_morphism(SystemPtr F) {
  ElemMap f = F->base_subgroup().elements;
  return FusionMorphism{F, F, std::move(f)};
}

FusionMorphism zero_morphism(SystemPtr E, SystemPtr F) {
  ElemMap f(E->base_subgroup().order(), 0);
  return FusionMorphism{std::move(E), std::move(F), std::move(f)};
}

FusionMorphism compose(const FusionMorphism& g, const FusionMorphism& f) {
  if (!(f.target == g.source) && !(*f.target == *g.source)) {
    fail(ErrorCode::kInvalidInput, "composition of morphisms with mismatched systems");
  }
  ElemMap out(f.f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = g(f.f[k]);
  return check_morphism(f.source, g.target, std::move(out));
}

SubgroupId kernel(const FusionMorphism& m) {
  ElementSet ker(m.source->group().order());
  const auto& base = m.source->base_subgroup();
  for (std::size_t k = 0; k < base.order(); ++k) {
    if (m.f[k] == 0) ker.insert(base.elements[k]);
  }
  SubgroupId id = m.source->lattice().id_of(ker);
  ensure(is_strongly_closed(*m.source, id), "kernel of a morphism is not strongly closed");
  return id;
}

FusionSystem image(const FusionMorphism& m) {
  SubgroupId base = m.image_subgroup(m.source->base());
  std::vector<Arrow> gens;
  for (const auto& a : generating_arrows(*m.source)) gens.push_back(m.functor(a.src, a.dst, a.map));
  return generated_fusion(m.target->lattice_ptr(), base, m.target->prime(), gens);
}

ProductSystem product(const std::vector<SystemPtr>& factors) {
  if (factors.empty()) fail(ErrorCode::kInvalidInput, "product of no factors");
  const int p = factors.front()->prime();
  const std::size_t k = factors.size();
  std::vector<FiniteGroup> bases;
  for (const auto& F : factors) {
    if (F->prime() != p) fail(ErrorCode::kInvalidInput, "factors over different primes");
    bases.push_back(F->group().induced(F->base_subgroup()));
  }
  FiniteGroup G = bases.front();
  for (std::size_t i = 1; i < k; ++i) G = direct_product(G, bases[i]).product;
  G.set_prime_hint(p);
  std::vector<std::size_t> strides(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) strides[i] = strides[i + 1] * bases[i + 1].order();
  auto lattice = SubgroupLattice::make(std::move(G));
  const auto& lat = *lattice;

  auto coord = [&](Elem x, std::size_t i) {
    return static_cast<int>((static_cast<std::size_t>(x) / strides[i]) % bases[i].order());
  };
  // Position in the i-th base -> factor lattice id, and back.
  auto to_factor = [&](std::size_t i, int pos) { return factors[i]->base_subgroup().elements[pos]; };
  auto from_factor = [&](std::size_t i, Elem y) {
    return factors[i]->lattice().position(factors[i]->base(), y);
  };

  const std::size_t limit = Guardrails::current().table;
  std::size_t total = 0;
  std::vector<FusionSystem::IsoList> isos(lat.size());
  for (std::size_t id = 0; id < lat.size(); ++id) {
    const auto& P = lat[static_cast<SubgroupId>(id)];
    // Coordinate projections of P; P is their product exactly when orders
    // multiply out.
    std::vector<SubgroupId> proj(k);
    std::size_t prod_order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      ElementSet s(factors[i]->group().order());
      for (Elem x : P.elements) s.insert(to_factor(i, coord(x, i)));
      proj[i] = factors[i]->lattice().id_of(s);
      prod_order *= factors[i]->lattice()[proj[i]].order();
    }
    if (prod_order != P.order()) {
      // Not a product subgroup: isos come from restricting those of the
      // product of its projections.
      continue;
    }
    std::vector<const FusionSystem::IsoList*> lists(k);
    bool empty = false;
    for (std::size_t i = 0; i < k; ++i) {
      lists[i] = &factors[i]->isos_from(proj[i]);
      empty = empty || lists[i]->empty();
    }
    if (empty) continue;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      ElemMap map(P.order());
      ElementSet img(lat.group().order());
      for (std::size_t e = 0; e < P.order(); ++e) {
        Elem x = P.elements[e];
        std::size_t y = 0;
        for (std::size_t i = 0; i < k; ++i) {
          const auto& [dst, m] = (*lists[i])[idx[i]];
          Elem xi = to_factor(i, coord(x, i));
          Elem yi = m[factors[i]->lattice().position(proj[i], xi)];
          y += static_cast<std::size_t>(from_factor(i, yi)) * strides[i];
        }
        map[e] = static_cast<Elem>(y);
        img.insert(static_cast<Elem>(y));
      }
      isos[id].emplace_back(lat.id_of(img), std::move(map));
      if (++total > limit) fail(ErrorCode::kGuardrailExceeded, "product fusion table too large");
      std::size_t i = 0;
      for (; i < k; ++i) {
        if (++idx[i] < lists[i]->size()) break;
        idx[i] = 0;
      }
      if (i == k) break;
    }
  }
  // Remaining subgroups: restrictions of isos of the product of projections.
  for (std::size_t id = 0; id < lat.size(); ++id) {
    if (!isos[id].empty()) continue;
    const auto& P = lat[static_cast<SubgroupId>(id)];
    ElementSet box(lat.group().order());
    // Smallest product subgroup containing P.
    std::vector<std::vector<Elem>> coords(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::set<int> c;
      for (Elem x : P.elements) c.insert(coord(x, i));
      coords[i].assign(c.begin(), c.end());
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::size_t y = 0;
      for (std::size_t i = 0; i < k; ++i) y += static_cast<std::size_t>(coords[i][idx[i]]) * strides[i];
      box.insert(static_cast<Elem>(y));
      std::size_t i = 0;
      for (; i < k; ++i) {
        if (++idx[i] < coords[i].size()) break;
        idx[i] = 0;
      }
      if (i == k) break;
    }
    SubgroupId big = lat.id_of(box);
    std::set<std::pair<SubgroupId, ElemMap>> seen;
    for (const auto& [dst, m] : isos[big]) {
      ElemMap r = restrict_map(lat, big, m, static_cast<SubgroupId>(id));
      auto d = image_of(lat, r);
      ensure(d.has_value(), "restriction without an image subgroup");
      if (seen.emplace(*d, r).second) {
        if (++total > limit) fail(ErrorCode::kGuardrailExceeded, "product fusion table too large");
      }
    }
    isos[id].assign(seen.begin(), seen.end());
  }

  ProductSystem out;
  out.factors = factors;
  out.strides = strides;
  out.product = share(FusionSystem(lattice, lat.whole_id(), p, std::move(isos)));
  for (std::size_t i = 0; i < k; ++i) {
    ElemMap emb(bases[i].order());
    for (std::size_t pos = 0; pos < emb.size(); ++pos) emb[pos] = static_cast<Elem>(pos * strides[i]);
    out.embeddings.push_back(check_morphism(factors[i], out.product, std::move(emb)));
    ElemMap pr(lat.group().order());
    for (std::size_t x = 0; x < pr.size(); ++x) pr[x] = to_factor(i, coord(static_cast<Elem>(x), i));
    out.projections.push_back(check_morphism(out.product, factors[i], std::move(pr)));
  }
  return out;
}

CommuteResult commute_test(const FusionSystem& F, const std::vector<Subsystem>& parts, CommuteMode mode) {
  const auto& lat = F.lattice();
  for (const auto& part : parts) {
    if (!part.system || !same_lattice(part.system->lattice(), lat) || part.system->base() != part.base) {
      fail(ErrorCode::kInvalidInput, "part is not a system over the given base in the same lattice");
    }
    if (!is_subsystem_of(*part.system, F)) fail(ErrorCode::kInvalidInput, "part is not a subsystem");
  }
  CommuteResult out;
  std::vector<SubgroupId> bases;
  for (const auto& part : parts) bases.push_back(part.base);
  if (mode == CommuteMode::kPadded) {
    std::vector<std::vector<Arrow>> arrows;
    for (const auto& part : parts) arrows.push_back(generating_arrows(*part.system));
    out.witness = padded_failure(F, bases, arrows);
    out.commute = !out.witness.has_value();
    return out;
  }
  // Pairwise commuting bases first; the tuple scan assumes them.
  out.witness = padded_failure(F, bases, std::vector<std::vector<Arrow>>(parts.size()));
  if (out.witness) return out;

  std::vector<std::vector<Arrow>> choices(parts.size());
  std::size_t count = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (SubgroupId p : parts[i].system->objects()) {
      for (const auto& [dst, m] : parts[i].system->isos_from(p)) choices[i].push_back(Arrow{p, dst, m});
    }
    count *= choices[i].size();
    if (count > Guardrails::current().table) fail(ErrorCode::kGuardrailExceeded, "too many tuples to check");
  }
  std::vector<std::size_t> idx(parts.size(), 0);
  while (true) {
    std::vector<Arrow> tuple;
    for (std::size_t i = 0; i < parts.size(); ++i) tuple.push_back(choices[i][idx[i]]);
    auto ext = product_map(lat, tuple);
    bool ok = false;
    if (ext) {
      auto d = image_of(lat, ext->second);
      ok = d && F.has_iso(ext->first, *d, ext->second);
    }
    if (!ok) {
      out.witness = CommuteWitness{std::move(tuple), "product map is not a morphism of the ambient system"};
      return out;
    }
    std::size_t i = 0;
    for (; i < parts.size(); ++i) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
    if (i == parts.size()) break;
  }
  out.commute = true;
  return out;
}

CommuteResult commute_check(const SystemPtr& F, const std::vector<Subsystem>& parts, CommuteMode mode) {
  CommuteResult out = commute_test(*F, parts, mode);
  if (!out.commute) return out;
  std::vector<SystemPtr> systems;
  for (const auto& part : parts) systems.push_back(part.system);
  ProductSystem ext = product(systems);
  const auto& lat = F->lattice();
  const FiniteGroup& G = lat.group();
  ElemMap incl(ext.product->base_subgroup().order());
  for (std::size_t x = 0; x < incl.size(); ++x) {
    Elem y = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int pos = static_cast<int>((x / ext.strides[i]) % lat[parts[i].base].order());
      y = G.mul(y, lat[parts[i].base].elements[pos]);
    }
    incl[x] = y;
  }
  // Commuting parts make I a morphism; failure here contradicts the test.
  FusionMorphism I = [&]() {
    try {
      return check_morphism(ext.product, F, std::move(incl));
    } catch (const FusionError& e) {
      fail(ErrorCode::kInternalInconsistency, std::string("commuting parts but I fails: ") + e.what());
    }
  }();
  out.inner_product = image(I);
  out.inclusion = std::move(I);
  out.external = std::move(ext);
  return out;
}

bool is_product_decomposition(const SystemPtr& F, const std::vector<Subsystem>& parts) {
  CommuteResult r = commute_check(F, parts);
  if (!r.commute) return false;
  const auto& lat = F->lattice();
  if (*r.inner_product == *F) {
    SubgroupId z = center_of(*F);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        ensure(lat.contains(z, lat.meet(parts[i].base, parts[j].base)),
               "bases of commuting factors meet outside the center");
      }
    }
  }
  SubgroupId all = lat.trivial_id();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (lat.meet(parts[i].base, join_except(lat, parts, i)) != lat.trivial_id()) return false;
    all = lat.join(all, parts[i].base);
  }
  return all == F->base() && *r.inner_product == *F;
}

namespace {

struct SumData {
  SystemPtr source, target;
  std::vector<Subsystem> images;
};

SumData sum_data(const std::vector<FusionMorphism>& ms) {
  if (ms.empty()) fail(ErrorCode::kInvalidInput, "sum of no morphisms");
  SumData d{ms.front().source, ms.front().target, {}};
  for (const auto& m : ms) {
    if (!(m.source == d.source || *m.source == *d.source) || !(m.target == d.target || *m.target == *d.target)) {
      fail(ErrorCode::kInvalidInput, "summands have different source or target");
    }
    d.images.push_back(Subsystem{m.image_subgroup(m.source->base()), share(image(m))});
  }
  return d;
}

}  // namespace

bool summable(const std::vector<FusionMorphism>& morphisms) {
  if (morphisms.empty()) fail(ErrorCode::kInvalidInput, "sum of no morphisms");
  return summable(morphisms, generating_arrows(*morphisms.front().source));
}

bool summable(const std::vector<FusionMorphism>& morphisms, const std::vector<Arrow>& source_arrows) {
  std::vector<SubgroupId> bases;
  std::vector<std::vector<Arrow>> arrows;
  for (const auto& m : morphisms) {
    bases.push_back(m.image_subgroup(m.source->base()));
    auto& list = arrows.emplace_back();
    for (const auto& a : source_arrows) list.push_back(m.functor(a.src, a.dst, a.map));
  }
  return !padded_failure(*morphisms.front().target, bases, arrows).has_value();
}

FusionMorphism sum(const std::vector<FusionMorphism>& morphisms) {
  SumData d = sum_data(morphisms);
  CommuteResult r = commute_check(d.target, d.images);
  if (!r.commute) fail(ErrorCode::kNotSummable, "images do not commute: " + r.witness->reason);
  const FiniteGroup& G = d.target->group();
  ElemMap f(d.source->base_subgroup().order(), 0);
  for (const auto& m : morphisms) {
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = G.mul(f[k], m.f[k]);
  }
  FusionMorphism out = [&]() {
    try {
      return check_morphism(d.source, d.target, std::move(f));
    } catch (const FusionError& e) {
      fail(ErrorCode::kInternalInconsistency, std::string("sum of summable morphisms fails: ") + e.what());
    }
  }();
  FusionSystem im = image(out);
  ensure(is_subsystem_of(im, *r.inner_product), "image of a sum escapes the product of images");
  return out;
}

}  // namespace fusionsys
