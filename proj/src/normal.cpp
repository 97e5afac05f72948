#include <algorithm>
#include <set>

#include "fusionsys/factor.hpp"
#include "fusionsys/group_ops.hpp"

namespace fusionsys {

namespace {

bool is_rejection(const FusionError& e) {
  return e.code() == ErrorCode::kNotFusionPreserving || e.code() == ErrorCode::kNotNormal;
}

// Composite g o f of maps on the base of F.
ElemMap compose_base(const FusionSystem& F, const ElemMap& g, const ElemMap& f) {
  return compose_maps(F.lattice(), F.base(), g, f);
}

SubgroupId image_under(const FusionSystem& F, const ElemMap& f, SubgroupId p) {
  const auto& lat = F.lattice();
  ElementSet img(lat.group().order());
  for (Elem x : lat[p].elements) img.insert(apply_map(lat, F.base(), f, x));
  return lat.id_of(img);
}

}  // namespace

NormalTester::NormalTester(SystemPtr F) : F_(std::move(F)), arrows_(generating_arrows(*F_)) {}

SubgroupId NormalTester::center() {
  if (!center_) center_ = center_of(*F_);
  return *center_;
}

NormalEndomorphism NormalTester::check(const ElemMap& f) {
  FusionMorphism fm = check_morphism(F_, F_, f, arrows_);
  const auto& lat = F_->lattice();
  const FiniteGroup& G = lat.group();
  const auto& base = F_->base_subgroup();
  ElemMap chi(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) chi[k] = G.mul(G.inv(f[k]), base.elements[k]);

  std::string failed;
  std::optional<FusionMorphism> cm;
  for (Elem x : base.elements) {
    for (Elem g : base.generators) {
      if (failed.empty() && apply_map(lat, F_->base(), chi, G.mul(x, g)) !=
                                G.mul(apply_map(lat, F_->base(), chi, x), apply_map(lat, F_->base(), chi, g))) {
        failed = "complement is not a homomorphism";
      }
    }
  }
  if (failed.empty()) {
    try {
      cm = check_morphism(F_, F_, chi, arrows_);
    } catch (const FusionError& e) {
      if (e.code() != ErrorCode::kNotFusionPreserving) throw;
      failed = "complement is not a morphism of the system";
    }
  }
  if (failed.empty() && !summable({fm, *cm}, arrows_)) failed = "f and its complement are not summable";

  std::set<Elem> image(f.begin(), f.end());
  bool surjective = image.size() == base.order();
  if (surjective) {
    // Criterion for surjective f: [f, S] <= Z(F) and f is the identity on foc(F).
    if (!focal_) focal_ = focal_of(*F_);
    SubgroupId z = center();
    bool criterion = true;
    for (Elem c : chi) criterion = criterion && lat[z].contains(c);
    for (Elem x : lat[*focal_].elements) criterion = criterion && apply_map(lat, F_->base(), f, x) == x;
    ensure(criterion == failed.empty(), "normality of a surjective endomorphism disagrees with the commutator criterion");
  }
  if (!failed.empty()) fail(ErrorCode::kNotNormal, failed);
  return NormalEndomorphism{std::move(fm), std::move(*cm), surjective, surjective};
}

std::optional<NormalEndomorphism> NormalTester::try_check(const ElemMap& f) {
  try {
    return check(f);
  } catch (const FusionError& e) {
    if (!is_rejection(e)) throw;
    return std::nullopt;
  }
}

NormalEndomorphism NormalTester::sum(const NormalEndomorphism& a, const NormalEndomorphism& b, bool experimental) {
  const auto& lat = F_->lattice();
  const FiniteGroup& G = lat.group();
  SubgroupId img = image_under(*F_, compose_base(*F_, a.f.f, b.f.f), F_->base());
  bool zero = img == lat.trivial_id();
  if (!zero && !(experimental && lat.contains(center(), img))) {
    fail(ErrorCode::kHypothesisFailed, "f o f' is not zero");
  }
  if (!summable({a.f, b.f}, arrows_)) {
    ensure(!zero, "f and f' with f o f' = 0 are not summable");
    fail(ErrorCode::kNotNormal, "experimental weakening: f and f' are not summable");
  }
  ElemMap s(a.f.f.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = G.mul(a.f.f[k], b.f.f[k]);
  auto out = try_check(s);
  if (!out) {
    ensure(!zero, "f + f' with f o f' = 0 is not normal");
    fail(ErrorCode::kNotNormal, "experimental weakening: f + f' is not normal");
  }
  return std::move(*out);
}

NormalEndomorphism normal_sum(const SystemPtr& F, const NormalEndomorphism& a, const NormalEndomorphism& b,
                              bool experimental) {
  return NormalTester(F).sum(a, b, experimental);
}

bool OmegaContext::invariant(SubgroupId t) const {
  for (const auto& g : generators) {
    if (g.image_subgroup(t) != t) return false;
  }
  return true;
}

bool OmegaContext::commutes_with(const ElemMap& f) const {
  for (const auto& g : generators) {
    const FusionSystem& F = *g.source;
    if (compose_base(F, f, g.f) != compose_base(F, g.f, f)) return false;
  }
  return true;
}

std::vector<ElemMap> conjugation_maps(const FiniteGroup& G, const Subgroup& S,
                                      const std::vector<Permutation>& perms) {
  if (!G.has_permutations()) fail(ErrorCode::kInvalidInput, "omega needs a permutation group");
  std::vector<ElemMap> out;
  for (const auto& w : perms) {
    ElemMap m;
    for (Elem s : S.elements) {
      const Permutation& p = G.permutation(s);
      if (w.size() != p.size()) fail(ErrorCode::kInvalidInput, "omega permutation has the wrong degree");
      Permutation q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[w[i]] = w[p[i]];
      auto img = G.find(q);
      if (!img || S.position(*img) < 0) fail(ErrorCode::kInvalidInput, "omega permutation does not normalize S");
      m.push_back(static_cast<Elem>(S.position(*img)));
    }
    out.push_back(std::move(m));
  }
  return out;
}

OmegaContext make_omega(const SystemPtr& F, const std::vector<ElemMap>& generators) {
  OmegaContext out;
  auto arrows = generating_arrows(*F);
  for (const auto& g : generators) {
    FusionMorphism m = check_morphism(F, F, g, arrows);
    if (!m.is_injective()) fail(ErrorCode::kInvalidInput, "omega generator is not invertible");
    out.generators.push_back(std::move(m));
  }
  std::set<ElemMap> seen{F->base_subgroup().elements};
  std::vector<ElemMap> frontier(seen.begin(), seen.end());
  const std::size_t limit = Guardrails::current().omega;
  while (!frontier.empty()) {
    std::vector<ElemMap> next;
    for (const auto& m : frontier) {
      for (const auto& g : out.generators) {
        ElemMap c = compose_base(*F, g.f, m);
        if (seen.insert(c).second) {
          if (seen.size() > limit) fail(ErrorCode::kGuardrailExceeded, "omega closure too large");
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  out.closure.assign(seen.begin(), seen.end());
  return out;
}

NormalEndomorphism normal_complement(const SystemPtr& F, const ElemMap& f) {
  NormalTester checker(F);
  return checker.check(f);
}

std::optional<NormalEndomorphism> try_normal(const SystemPtr& F, const ElemMap& f) {
  try {
    return normal_complement(F, f);
  } catch (const FusionError& e) {
    if (!is_rejection(e)) throw;
    return std::nullopt;
  }
}

std::vector<FusionMorphism> endomorphisms(const SystemPtr& F) {
  const auto& base = F->base_subgroup();
  const FiniteGroup& G = F->group();
  auto arrows = generating_arrows(*F);
  std::vector<FusionMorphism> out;
  for (auto& h : enumerate_homs(G, base, G, base, false)) {
    try {
      out.push_back(check_morphism(F, F, std::move(h), arrows));
    } catch (const FusionError& e) {
      if (e.code() != ErrorCode::kNotFusionPreserving) throw;
    }
  }
  return out;
}

std::vector<NormalEndomorphism> normal_endos(const SystemPtr& F, const OmegaContext& omega) {
  const auto& base = F->base_subgroup();
  const FiniteGroup& G = F->group();
  NormalTester checker(F);
  std::vector<NormalEndomorphism> out;
  for (auto& h : enumerate_homs(G, base, G, base, false)) {
    if (!omega.commutes_with(h)) continue;
    try {
      out.push_back(checker.check(h));
    } catch (const FusionError& e) {
      if (!is_rejection(e)) throw;
    }
  }
  // Closure under composition: all pairs for small monoids, an evenly
  // spaced sample of pairs otherwise.
  std::set<ElemMap> members;
  for (const auto& ne : out) members.insert(ne.f.f);
  std::vector<std::size_t> sample;
  const std::size_t cap = 400;
  std::size_t step = out.size() <= cap ? 1 : out.size() / cap;
  for (std::size_t i = 0; i < out.size(); i += step) sample.push_back(i);
  for (std::size_t i : sample) {
    for (std::size_t j : sample) {
      ensure(members.contains(compose_base(*F, out[i].f.f, out[j].f.f)),
             "composite of normal endomorphisms is not normal");
    }
  }
  return out;
}

NormalEndReport normal_end_properties(const SystemPtr& F, const NormalEndomorphism& ne) {
  const auto& lat = F->lattice();
  const ElemMap& f = ne.f.f;
  const ElemMap& chi = ne.complement.f;
  NormalEndReport r;
  r.image_base = image_under(*F, f, F->base());
  r.complement_base = image_under(*F, chi, F->base());
  r.meet = lat.meet(r.image_base, r.complement_base);
  // (a)
  ensure(compose_base(*F, f, chi) == compose_base(*F, chi, f), "f and its complement do not commute");
  SubgroupId fu = image_under(*F, f, r.complement_base);
  SubgroupId ct = image_under(*F, chi, r.image_base);
  ensure(fu == ct && ct == r.meet, "f(U), chi(T) and T cap U differ");
  ensure(lat.contains(center_of(*F), r.meet), "T cap U is not central");
  // (b)
  ensure(is_strongly_closed(*F, r.image_base), "f(S) is not strongly closed");
  // (c)
  for (const auto& alpha : F->automorphisms(F->base())) {
    ensure(compose_base(*F, f, alpha) == compose_base(*F, alpha, f),
           "f does not commute with an automorphism of the base");
  }
  // (d)
  FusionSystem im = image(ne.f);
  ensure(im == restrict_full(*F, r.image_base), "Im(f) differs from the full restriction to f(S)");
  ensure(is_saturated(im), "Im(f) is not saturated");
  return r;
}

std::vector<ElemMap> projection_maps(const FusionSystem& F, const std::vector<SubgroupId>& parts) {
  const auto& lat = F.lattice();
  const FiniteGroup& G = lat.group();
  const auto& base = F.base_subgroup();
  const std::size_t k = parts.size();
  std::vector<ElemMap> out(k, ElemMap(base.order(), -1));
  std::size_t total = 1;
  for (SubgroupId p : parts) total *= lat[p].order();
  ensure(total == base.order(), "part orders do not multiply to the base order");
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Elem x = 0;
    for (std::size_t i = 0; i < k; ++i) x = G.mul(x, lat[parts[i]].elements[idx[i]]);
    int pos = lat.position(F.base(), x);
    ensure(pos >= 0 && out[0][pos] == -1, "parts do not form an internal direct product");
    for (std::size_t i = 0; i < k; ++i) out[i][pos] = lat[parts[i]].elements[idx[i]];
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++idx[i] < lat[parts[i]].order()) break;
      idx[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

ElemMap projection_map(const FusionSystem& F, const std::vector<SubgroupId>& parts, std::size_t i) {
  return projection_maps(F, parts)[i];
}

std::vector<Elem> split_element(const SubgroupLattice& lat, const std::vector<SubgroupId>& parts, Elem x) {
  const FiniteGroup& G = lat.group();
  std::vector<Elem> out(parts.size(), 0);
  std::vector<std::size_t> idx(parts.size(), 0);
  while (true) {
    Elem y = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) y = G.mul(y, lat[parts[i]].elements[idx[i]]);
    if (y == x) {
      for (std::size_t i = 0; i < parts.size(); ++i) out[i] = lat[parts[i]].elements[idx[i]];
      return out;
    }
    std::size_t i = 0;
    for (; i < parts.size(); ++i) {
      if (++idx[i] < lat[parts[i]].order()) break;
      idx[i] = 0;
    }
    if (i == parts.size()) break;
  }
  fail(ErrorCode::kInvalidInput, "element is not a product of the parts");
}

bool is_splitting_pair(const SystemPtr& F, SubgroupId t, SubgroupId u, SplitCache* cache) {
  if (cache) {
    auto it = cache->decomposes.find({t, u});
    if (it != cache->decomposes.end()) return it->second;
  }
  const auto& lat = F->lattice();
  auto decide = [&]() {
    if (!F->is_object(t) || !F->is_object(u)) return false;
    if (lat.meet(t, u) != lat.trivial_id()) return false;
    if (lat[t].order() * lat[u].order() != F->base_subgroup().order()) return false;
    const FiniteGroup& G = lat.group();
    for (Elem a : lat[t].generators) {
      for (Elem b : lat[u].generators) {
        if (G.mul(a, b) != G.mul(b, a)) return false;
      }
    }
    if (!is_strongly_closed(*F, t) || !is_strongly_closed(*F, u)) return false;
    std::vector<Subsystem> parts = {{t, share(restrict_full(*F, t))}, {u, share(restrict_full(*F, u))}};
    if (!commute_test(*F, parts).commute) return false;
    // Strongly closed commuting full restrictions over a direct splitting
    // factor F.
    ensure(is_product_decomposition(F, parts), "strongly closed commuting split is not a product");
    return true;
  };
  bool r = decide();
  if (cache) cache->decomposes[{t, u}] = r;
  return r;
}

FittingResult fitting_factorize(const SystemPtr& F, const NormalEndomorphism& ne, SplitCache* cache) {
  const auto& lat = F->lattice();
  const ElemMap& f = ne.f.f;
  const std::size_t order = F->base_subgroup().order();
  FittingResult r;
  ElemMap power = F->base_subgroup().elements;  // f^n
  SubgroupId cur = F->base();
  while (true) {
    SubgroupId next = image_under(*F, f, cur);
    if (next == cur) break;
    cur = next;
    power = compose_base(*F, f, power);
    ++r.stable_power;
  }
  r.t = cur;
  ElementSet ker(lat.group().order());
  for (std::size_t k = 0; k < power.size(); ++k) {
    if (power[k] == 0) ker.insert(F->base_subgroup().elements[k]);
  }
  r.u = lat.id_of(ker);
  r.e = share(restrict_full(*F, r.t));
  r.d = share(restrict_full(*F, r.u));
  ensure(is_splitting_pair(F, r.t, r.u, cache), "Fitting split is not a product decomposition");
  // f restricted to T is a normal automorphism of E.
  ElemMap ft;
  for (Elem x : lat[r.t].elements) ft.push_back(apply_map(lat, F->base(), f, x));
  ensure(image_under(*F, f, r.t) == r.t, "f does not map T onto itself");
  ensure(try_normal(r.e, ft).has_value(), "f restricted to T is not normal on E");
  ensure(lat.contains(r.u, image_under(*F, f, r.u)), "f does not preserve U");

  if (order <= 64) {
    std::size_t found = 0;
    const auto& objs = F->objects();
    for (SubgroupId a : objs) {
      if (image_under(*F, f, a) != a) continue;
      for (SubgroupId b : objs) {
        if (lat[a].order() * lat[b].order() != order || lat.meet(a, b) != lat.trivial_id()) continue;
        if (!lat.contains(b, image_under(*F, f, b))) continue;
        SubgroupId img = b;
        while (img != lat.trivial_id()) {
          SubgroupId next = image_under(*F, f, img);
          if (next == img) break;
          img = next;
        }
        if (img != lat.trivial_id() || !is_splitting_pair(F, a, b, cache)) continue;
        ensure(a == r.t && b == r.u, "a second Fitting split exists");
        ++found;
      }
    }
    ensure(found == 1, "the Fitting split was not found by brute force");
  }
  return r;
}


}  // namespace fusionsys
