#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fusionsys/factor.hpp"
#include "fusionsys/group_ops.hpp"

namespace fusionsys {

namespace {

ElemMap compose_base(const FusionSystem& F, const ElemMap& g, const ElemMap& f) {
  return compose_maps(F.lattice(), F.base(), g, f);
}

SubgroupId image_under(const FusionSystem& F, const ElemMap& f, SubgroupId p) {
  const auto& lat = F.lattice();
  ElementSet img(lat.group().order());
  for (Elem x : lat[p].elements) img.insert(apply_map(lat, F.base(), f, x));
  return lat.id_of(img);
}

std::vector<SubgroupId> bases_of(const Factorization& fact) {
  std::vector<SubgroupId> out;
  for (const auto& part : fact.parts) out.push_back(part.base);
  return out;
}

Factorization make_factorization(const SystemPtr& F, std::vector<SubgroupId> bases) {
  std::sort(bases.begin(), bases.end());
  Factorization out;
  for (SubgroupId t : bases) {
    out.parts.push_back(Subsystem{t, t == F->base() ? F : share(restrict_full(*F, t))});
  }
  CommuteResult r = commute_check(F, out.parts);
  ensure(r.commute && *r.inner_product == *F, "factorization parts do not multiply to the system");
  out.witness = std::move(r.inclusion);
  return out;
}

void check_parts(const Factorization& fact, const OmegaContext& omega) {
  for (const auto& part : fact.parts) {
    if (!omega.invariant(part.base)) fail(ErrorCode::kHypothesisFailed, "factor is not omega-invariant");
    if (!is_indecomposable(part.system, omega)) {
      fail(ErrorCode::kHypothesisFailed, "factor is not omega-indecomposable");
    }
  }
}

bool is_aut_normal(const SystemPtr& F, const ElemMap& m, const OmegaContext& omega) {
  auto ne = try_normal(F, m);
  return ne && ne->invertible && omega.commutes_with(m);
}

KrsCertificate constructive(const SystemPtr& F, const Factorization& fact1, const Factorization& fact2,
                            const OmegaContext& omega) {
  const auto& lat = F->lattice();
  const FiniteGroup& G = lat.group();
  const auto& base = F->base_subgroup();
  std::vector<SubgroupId> b1 = bases_of(fact1);
  std::vector<SubgroupId> cur = bases_of(fact2);
  std::vector<ElemMap> f = projection_maps(*F, b1);
  const std::size_t k = b1.size();
  const std::size_t m = cur.size();

  KrsCertificate cert;
  ElemMap total = base.elements;
  for (std::size_t s = 0; s < m; ++s) {
    ElemMap g = projection_maps(*F, cur)[s];
    SubgroupId tstar = cur[s];
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < k && !pick; ++j) {
      if (std::find(cert.chosen.begin(), cert.chosen.end(), static_cast<int>(j)) != cert.chosen.end()) continue;
      ElemMap gf = compose_base(*F, g, f[j]);
      std::set<Elem> img;
      for (Elem x : lat[tstar].elements) img.insert(apply_map(lat, F->base(), gf, x));
      if (img.size() == lat[tstar].order() && image_under(*F, gf, tstar) == tstar) pick = j;
    }
    ensure(pick.has_value(), "no projection restricts to an automorphism of the current factor");
    std::size_t j = *pick;
    // h = f_j g + g', with g' the projection onto the remaining factors.
    ElemMap h(base.order());
    for (std::size_t x = 0; x < h.size(); ++x) {
      Elem gx = g[x];
      Elem rest = G.mul(G.inv(gx), base.elements[x]);
      h[x] = G.mul(apply_map(lat, F->base(), f[j], gx), rest);
    }
    ensure(is_aut_normal(F, h, omega), "step map is not an omega-normal automorphism");
    ensure(image_under(*F, h, tstar) == b1[j], "step map does not carry the factor onto the chosen part");
    for (std::size_t r = 0; r < m; ++r) {
      if (r == s) continue;
      for (Elem x : lat[cur[r]].elements) {
        ensure(apply_map(lat, F->base(), h, x) == x, "step map moves the complement");
      }
    }
    cur[s] = b1[j];
    cert.log.push_back(h);
    cert.chosen.push_back(static_cast<int>(j));
    total = compose_base(*F, h, total);
  }
  ensure(k == m, "factorizations have different lengths");
  ElemMap alpha = invert_map(lat, F->base(), F->base(), total);
  cert.sigma.assign(k, -1);
  for (std::size_t s = 0; s < m; ++s) cert.sigma[cert.chosen[s]] = static_cast<int>(s);
  auto ne = try_normal(F, alpha);
  ensure(ne && ne->invertible && omega.commutes_with(alpha), "alpha is not an omega-normal automorphism");
  ensure(maps_parts(F, alpha, fact1, fact2, cert.sigma), "alpha does not match the parts");
  cert.alpha = std::move(*ne);
  return cert;
}

}  // namespace

std::vector<std::pair<SubgroupId, SubgroupId>> splitting_pairs(const SystemPtr& F, const OmegaContext& omega) {
  const auto& lat = F->lattice();
  std::vector<SubgroupId> cands;
  for (SubgroupId t : F->objects()) {
    if (t == lat.trivial_id() || t == F->base()) continue;
    if (F->base_subgroup().order() % lat[t].order() != 0) continue;
    if (!is_strongly_closed(*F, t) || !omega.invariant(t)) continue;
    cands.push_back(t);
  }
  std::vector<std::pair<SubgroupId, SubgroupId>> out;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    for (std::size_t b = a + 1; b < cands.size(); ++b) {
      if (lat[cands[a]].order() * lat[cands[b]].order() != F->base_subgroup().order()) continue;
      if (is_splitting_pair(F, cands[a], cands[b])) out.emplace_back(cands[a], cands[b]);
    }
  }
  return out;
}

bool is_indecomposable(const SystemPtr& E, const OmegaContext& omega) {
  return splitting_pairs(E, omega).empty();
}

Factorization factorize(const SystemPtr& F, const OmegaContext& omega, SearchOrder order) {
  if (!is_saturated(*F)) fail(ErrorCode::kNotSaturated, "factorization needs a saturated system");
  std::vector<SubgroupId> bases;
  std::function<void(const SystemPtr&)> rec = [&](const SystemPtr& E) {
    auto pairs = splitting_pairs(E, omega);
    if (pairs.empty()) {
      bases.push_back(E->base());
      return;
    }
    auto [t, u] = order == SearchOrder::kAscending ? pairs.front() : pairs.back();
    rec(share(restrict_full(*E, t)));
    rec(share(restrict_full(*E, u)));
  };
  rec(F);
  return make_factorization(F, std::move(bases));
}

std::vector<Factorization> all_factorizations(const SystemPtr& F, const OmegaContext& omega) {
  if (!is_saturated(*F)) fail(ErrorCode::kNotSaturated, "factorization needs a saturated system");
  using PartList = std::vector<SubgroupId>;
  std::map<SubgroupId, std::set<PartList>> memo;
  std::function<const std::set<PartList>&(const SystemPtr&)> rec =
      [&](const SystemPtr& E) -> const std::set<PartList>& {
    auto it = memo.find(E->base());
    if (it != memo.end()) return it->second;
    std::set<PartList> out;
    auto pairs = splitting_pairs(E, omega);
    if (pairs.empty()) out.insert(PartList{E->base()});
    for (auto [t, u] : pairs) {
      const auto left = rec(share(restrict_full(*E, t)));
      const auto& right = rec(share(restrict_full(*E, u)));
      for (const auto& a : left) {
        for (const auto& b : right) {
          PartList merged = a;
          merged.insert(merged.end(), b.begin(), b.end());
          std::sort(merged.begin(), merged.end());
          out.insert(std::move(merged));
        }
      }
    }
    return memo.emplace(E->base(), std::move(out)).first->second;
  };
  std::vector<Factorization> result;
  for (const auto& parts : rec(F)) result.push_back(make_factorization(F, parts));
  return result;
}

Factorization factorization_from_bases(const SystemPtr& F, std::vector<SubgroupId> bases) {
  const auto& lat = F->lattice();
  std::sort(bases.begin(), bases.end());
  if (std::adjacent_find(bases.begin(), bases.end()) != bases.end()) {
    fail(ErrorCode::kInvalidInput, "repeated factor base");
  }
  std::vector<Subsystem> parts;
  for (SubgroupId t : bases) {
    if (!F->is_object(t)) fail(ErrorCode::kNotSubgroup, "factor base is not a subgroup of the base");
    parts.push_back(Subsystem{t, t == F->base() ? F : share(restrict_full(*F, t))});
  }
  std::size_t prod = 1;
  for (SubgroupId t : bases) prod *= lat[t].order();
  if (prod != F->base_subgroup().order() || !is_product_decomposition(F, parts)) {
    fail(ErrorCode::kNotCommuting, "parts do not form a direct product decomposition");
  }
  return make_factorization(F, std::move(bases));
}

bool maps_parts(const SystemPtr& F, const ElemMap& alpha, const Factorization& fact1, const Factorization& fact2,
                const std::vector<int>& sigma) {
  if (fact1.parts.size() != fact2.parts.size() || sigma.size() != fact1.parts.size()) return false;
  FusionMorphism a{F, F, alpha};
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 0 || static_cast<std::size_t>(sigma[i]) >= fact2.parts.size()) return false;
    const Subsystem& src = fact1.parts[i];
    const Subsystem& dst = fact2.parts[sigma[i]];
    if (a.image_subgroup(src.base) != dst.base) return false;
    if (src.system->iso_count() != dst.system->iso_count()) return false;
    for (SubgroupId p : src.system->objects()) {
      for (const auto& [q, map] : src.system->isos_from(p)) {
        try {
          Arrow img = a.functor(p, q, map);
          if (!dst.system->has_iso(img.src, img.dst, img.map)) return false;
        } catch (const FusionError& e) {
          if (e.code() != ErrorCode::kNotFusionPreserving) throw;
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<KrsCertificate> krs_exhaustive(const SystemPtr& F, const Factorization& fact1,
                                             const Factorization& fact2,
                                             const std::vector<NormalEndomorphism>& automorphisms) {
  if (fact1.parts.size() != fact2.parts.size()) return std::nullopt;
  auto b2 = bases_of(fact2);
  for (const auto& ne : automorphisms) {
    if (!ne.invertible) continue;
    std::vector<int> sigma;
    for (const auto& part : fact1.parts) {
      auto it = std::find(b2.begin(), b2.end(), ne.f.image_subgroup(part.base));
      if (it == b2.end()) break;
      sigma.push_back(static_cast<int>(it - b2.begin()));
    }
    if (sigma.size() != b2.size()) continue;
    if (!maps_parts(F, ne.f.f, fact1, fact2, sigma)) continue;
    KrsCertificate cert;
    cert.alpha = ne;
    cert.sigma = std::move(sigma);
    cert.fallback = true;
    return cert;
  }
  return std::nullopt;
}

std::optional<KrsCertificate> krs_exhaustive(const SystemPtr& F, const Factorization& fact1,
                                             const Factorization& fact2, const OmegaContext& omega) {
  if (fact1.parts.size() != fact2.parts.size()) return std::nullopt;
  return krs_exhaustive(F, fact1, fact2, normal_endos(F, omega));
}

KrsCertificate krs_certificate(const SystemPtr& F, const Factorization& fact1, const Factorization& fact2,
                               const OmegaContext& omega) {
  if (!is_saturated(*F)) fail(ErrorCode::kNotSaturated, "certificate needs a saturated system");
  check_parts(fact1, omega);
  check_parts(fact2, omega);
  try {
    return constructive(F, fact1, fact2, omega);
  } catch (const FusionError& e) {
    if (e.code() != ErrorCode::kInternalInconsistency) throw;
    auto cert = krs_exhaustive(F, fact1, fact2, omega);
    ensure(cert.has_value(), std::string("no certificate exists after constructive failure: ") + e.what());
    cert->discrepancy = e.what();
    return std::move(*cert);
  }
}

std::vector<ElemMap> isomorphisms_between(const SystemPtr& E1, const SystemPtr& E2) {
  const auto& lat1 = E1->lattice();
  if (E1->base_subgroup().order() != E2->base_subgroup().order()) return {};
  auto a1 = generating_arrows(*E1);
  auto a2 = generating_arrows(*E2);
  std::vector<ElemMap> out;
  for (auto& h : enumerate_homs(lat1.group(), E1->base_subgroup(), E2->group(), E2->base_subgroup(), true)) {
    try {
      check_morphism(E1, E2, h, a1);
      // Inverse as a map on the base of E2.
      ElemMap inv(h.size());
      for (std::size_t k = 0; k < h.size(); ++k) {
        inv[E2->lattice().position(E2->base(), h[k])] = E1->base_subgroup().elements[k];
      }
      check_morphism(E2, E1, inv, a2);
      out.push_back(std::move(h));
    } catch (const FusionError& e) {
      if (e.code() != ErrorCode::kNotFusionPreserving) throw;
    }
  }
  return out;
}

std::vector<FusionMorphism> fusion_automorphisms(const SystemPtr& F) {
  std::vector<FusionMorphism> out;
  for (auto& m : isomorphisms_between(F, F)) out.push_back(FusionMorphism{F, F, std::move(m)});
  return out;
}

AutStructure aut_structure(const SystemPtr& F, const Factorization& fact) {
  const auto& lat = F->lattice();
  const FiniteGroup& G = lat.group();
  if (center_of(*F) != lat.trivial_id() && focal_of(*F) != F->base()) {
    fail(ErrorCode::kHypothesisFailed, "needs Z(F) = 1 or foc(F) = S");
  }
  auto b = bases_of(fact);
  const std::size_t k = b.size();
  AutStructure out;
  auto auts = fusion_automorphisms(F);
  out.aut_order = auts.size();

  auto induced = [&](const ElemMap& a) {
    std::vector<int> sigma;
    for (SubgroupId t : b) {
      SubgroupId img = image_under(*F, a, t);
      auto it = std::find(b.begin(), b.end(), img);
      ensure(it != b.end(), "an automorphism does not permute the factors");
      sigma.push_back(static_cast<int>(it - b.begin()));
    }
    return sigma;
  };
  std::set<std::vector<int>> gamma;
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  std::map<ElemMap, std::vector<int>> rho;
  for (const auto& a : auts) {
    auto sigma = induced(a.f);
    if (sigma == id) ++out.aut0_order;
    gamma.insert(sigma);
    rho[a.f] = sigma;
  }
  std::size_t prod = 1;
  for (const auto& part : fact.parts) {
    out.part_aut_orders.push_back(isomorphisms_between(part.system, part.system).size());
    prod *= out.part_aut_orders.back();
  }
  ensure(out.aut0_order == prod, "Aut^0 is not the product of the factor automorphism groups");

  // beta[r][j]: a fixed isomorphism from the class representative r to j.
  std::vector<int> rep(k);
  std::map<std::pair<int, int>, ElemMap> beta_rep;
  for (std::size_t j = 0; j < k; ++j) {
    rep[j] = static_cast<int>(j);
    for (std::size_t r = 0; r < j; ++r) {
      if (rep[r] != static_cast<int>(r)) continue;
      auto isos = isomorphisms_between(fact.parts[r].system, fact.parts[j].system);
      if (!isos.empty()) {
        rep[j] = static_cast<int>(r);
        beta_rep[{static_cast<int>(r), static_cast<int>(j)}] = isos.front();
        break;
      }
    }
    if (rep[j] == static_cast<int>(j)) beta_rep[{static_cast<int>(j), static_cast<int>(j)}] = lat[b[j]].elements;
  }
  std::set<std::vector<int>> expected;
  std::vector<int> perm = id;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) ok = ok && rep[perm[i]] == rep[i];
    if (ok) expected.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  ensure(gamma == expected, "induced permutations differ from the isomorphism-type permutations");
  out.gamma.assign(gamma.begin(), gamma.end());
  ensure(out.aut_order == out.aut0_order * gamma.size(), "|Aut(F)| != |Aut^0(F)| |Gamma|");

  // beta_{i,j} = beta_{r,j} o beta_{r,i}^-1 as a map from T_i to T_j.
  auto beta = [&](std::size_t i, std::size_t j) {
    int r = rep[i];
    const ElemMap& ri = beta_rep.at({r, static_cast<int>(i)});
    const ElemMap& rj = beta_rep.at({r, static_cast<int>(j)});
    ElemMap out_map(lat[b[i]].order());
    for (std::size_t pos = 0; pos < ri.size(); ++pos) {
      out_map[lat.position(b[i], ri[pos])] = rj[pos];
    }
    return out_map;
  };
  auto proj = projection_maps(*F, b);
  std::set<ElemMap> section;
  for (const auto& sigma : out.gamma) {
    ElemMap a(F->base_subgroup().order(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      ElemMap bij = beta(i, sigma[i]);
      for (std::size_t x = 0; x < a.size(); ++x) {
        a[x] = G.mul(a[x], bij[lat.position(b[i], proj[i][x])]);
      }
    }
    ensure(rho.contains(a) && rho.at(a) == sigma, "section element is not an automorphism over sigma");
    section.insert(a);
  }
  for (const auto& x : section) {
    for (const auto& y : section) {
      ensure(section.contains(compose_base(*F, x, y)), "section is not closed under composition");
    }
  }
  if (auts.size() * auts.size() <= 1000000) {
    for (const auto& x : auts) {
      for (const auto& y : auts) {
        auto s = rho.at(compose_base(*F, x.f, y.f));
        const auto& sx = rho.at(x.f);
        const auto& sy = rho.at(y.f);
        for (std::size_t i = 0; i < k; ++i) ensure(s[i] == sx[sy[i]], "rho is not a homomorphism");
      }
    }
  }
  for (const auto& a : section) out.section.push_back(a);
  return out;
}

GoldschmidtResult goldschmidt_factor(const FiniteGroup& G, const SystemPtr& F, const Factorization& fact,
                                     const std::optional<Subgroup>& sylow_subgroup) {
  if (F->prime() != 2) fail(ErrorCode::kHypothesisFailed, "needs p = 2");
  if (o_p_prime(G, 2).order() != 1) fail(ErrorCode::kHypothesisFailed, "O_2'(G) is not trivial");
  if (o_upper_p_prime(G, 2).order() != G.order()) fail(ErrorCode::kHypothesisFailed, "O^2'(G) is not G");
  Subgroup S = sylow_subgroup ? *sylow_subgroup : sylow(G, 2);
  if (S.order() != F->group().order()) fail(ErrorCode::kInvalidInput, "system is not over the Sylow subgroup");
  const auto& embed = S.elements;
  const auto& lat = F->lattice();
  GoldschmidtResult out;
  for (const auto& part : fact.parts) {
    std::vector<Elem> gens;
    for (Elem x : lat[part.base].generators) gens.push_back(embed[x]);
    out.factors.push_back(normal_closure(G, G.subgroup(gens)));
  }
  const std::size_t k = out.factors.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (Elem a : out.factors[i].generators) {
        for (Elem c : out.factors[j].generators) ensure(G.mul(a, c) == G.mul(c, a), "factors do not commute");
      }
    }
  }
  std::size_t prod = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> others;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) others.insert(others.end(), out.factors[j].generators.begin(), out.factors[j].generators.end());
    }
    Subgroup rest = G.subgroup(others);
    for (Elem x : out.factors[i].elements) ensure(x == 0 || !rest.contains(x), "factors intersect");
    prod *= out.factors[i].order();
  }
  ensure(prod == G.order(), "factors do not generate G");
  for (std::size_t i = 0; i < k; ++i) {
    const auto& part = fact.parts[i];
    ensure(static_cast<long long>(lat[part.base].order()) ==
               p_part(static_cast<long long>(out.factors[i].order()), 2),
           "T_i is not Sylow in H_i");
    FusionSystem Ei = group_fusion(G, out.factors[i].elements, F->lattice_ptr(), part.base, embed, 2);
    ensure(Ei == *part.system, "E_i is not the fusion system of H_i");
  }
  return out;
}

}  // namespace fusionsys
