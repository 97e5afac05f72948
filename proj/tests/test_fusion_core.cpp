#include <gtest/gtest.h>

#include <algorithm>

#include "fusionsys/catalog.hpp"
#include "fusionsys/fusion.hpp"
#include "fusionsys/group_ops.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fusionsys;
using support::catalog_fusion;
using support::catalog_group;

namespace {

LatticePtr lattice_of(const FiniteGroup& g) { return SubgroupLattice::make(g); }

// Automorphism of a lattice subgroup from generator images.
ElemMap aut_from(const SubgroupLattice& lat, SubgroupId p, std::vector<Elem> gens,
                 std::vector<Elem> imgs) {
  auto m = extend_to_hom(lat.group(), lat[p], gens, imgs, lat.group());
  EXPECT_TRUE(m.has_value());
  return *m;
}

FusionSystem c3_with_inversion() {
  FiniteGroup c3 = oracle::perm_group(3, {{{1, 2, 3}}});
  auto lat = lattice_of(c3);
  SubgroupId s = lat->whole_id();
  ElemMap inv;
  for (Elem x : (*lat)[s].elements) inv.push_back(c3.inv(x));
  return generated_fusion(lat, s, 3, {{s, s, inv}});
}

}  // namespace

TEST(FusionOfGroup, MatchesConjugationOracleOnCatalog) {
  for (const auto& name : support::small_entries()) {
    const FusionSystem& F = catalog_fusion(name);
    const FiniteGroup& G = catalog_group(name);
    Subgroup s = sylow(G, F.prime());
    auto expected = oracle::conjugation_triples(G, F.lattice(), F.base(), s.elements);
    EXPECT_EQ(oracle::iso_triples(F), expected) << name;
  }
}

TEST(FusionOfGroup, PGroupGivesInnerSystem) {
  for (const char* name : {"inner-d8", "inner-c2xc4", "inner-c2xc2"}) {
    const FusionSystem& F = catalog_fusion(name);
    EXPECT_EQ(F, inner_fusion(F.lattice_ptr(), F.base(), F.prime())) << name;
  }
}

TEST(FusionOfGroup, Sym3AtThreeHasAutomizerOfOrderTwo) {
  const FusionSystem& F = catalog_fusion("sym3-p3");
  EXPECT_EQ(F.automorphisms(F.base()).size(), 2u);
}

TEST(FusionOfGroup, RejectsNonSylow) {
  const FiniteGroup& g = catalog_group("sym4-p2");
  Subgroup v = g.subgroup(std::vector<Elem>{g.generators()[0]});
  try {
    fusion_of_group(g, 2, v);
    FAIL();
  } catch (const FusionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSylow);
  }
}

TEST(FusionOfGroup, ContainsInnerAndOnlyInjectiveMaps) {
  for (const auto& name : support::small_entries()) {
    const FusionSystem& F = catalog_fusion(name);
    FusionSystem inner = inner_fusion(F.lattice_ptr(), F.base(), F.prime());
    auto all = oracle::iso_triples(F);
    for (const auto& t : oracle::iso_triples(inner)) EXPECT_TRUE(all.count(t)) << name;
    for (const auto& [p, q, m] : all) {
      EXPECT_EQ(oracle::sorted_set(m).size(), m.size());
      EXPECT_EQ(F.lattice()[q].elements, oracle::sorted_set(m));
    }
  }
}

TEST(FusionTable, ClosedUnderCompositionAndRestriction) {
  for (const auto& name : support::small_entries()) {
    const FusionSystem& F = catalog_fusion(name);
    const auto& lat = F.lattice();
    for (SubgroupId p : F.objects()) {
      for (const auto& [q, phi] : F.isos_from(p)) {
        for (const auto& [r, psi] : F.isos_from(q)) {
          EXPECT_TRUE(F.has_iso(p, r, compose_maps(lat, q, psi, phi)));
        }
        for (SubgroupId sub : lat.below(p)) {
          EXPECT_TRUE(F.contains(sub, restrict_map(lat, p, phi, sub)));
        }
      }
    }
  }
}

TEST(GeneratedFusion, EmptyGeneratorsGiveInnerSystem) {
  const FusionSystem& F = catalog_fusion("inner-d8");
  EXPECT_EQ(generated_fusion(F.lattice_ptr(), F.base(), 2, {}), F);
}

TEST(GeneratedFusion, InversionOnC3MatchesSym3) {
  FusionSystem gen = c3_with_inversion();
  const FusionSystem& sym = catalog_fusion("sym3-p3");
  EXPECT_EQ(gen.automorphisms(gen.base()).size(), 2u);
  EXPECT_EQ(oracle::iso_triples(gen), oracle::iso_triples(sym));
}

TEST(GeneratedFusion, OrderThreeKleinAutomorphismGivesSym4Fusion) {
  const FusionSystem& F = catalog_fusion("sym4-p2");
  const auto& lat = F.lattice();
  std::vector<Arrow> gens;
  for (SubgroupId v : F.objects()) {
    if (lat[v].order() != 4 || F.automorphisms(v).size() != 6) continue;
    for (const auto& a : F.automorphisms(v)) {
      // pick an automorphism of order 3
      ElemMap sq = compose_maps(lat, v, a, a);
      if (sq != identity_map(lat, v) && compose_maps(lat, v, a, sq) == identity_map(lat, v)) {
        gens.push_back({v, v, a});
        break;
      }
    }
  }
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(generated_fusion(F.lattice_ptr(), F.base(), 2, gens), F);
}

TEST(GeneratedFusion, MatchesNaiveClosure) {
  FiniteGroup v = oracle::perm_group(4, {{{1, 2}}, {{3, 4}}});
  auto vl = lattice_of(v);
  SubgroupId vs = vl->whole_id();
  const auto& ve = (*vl)[vs];
  ElemMap swap = aut_from(*vl, vs, {ve.generators[0], ve.generators[1]},
                          {ve.generators[1], ve.generators[0]});

  FiniteGroup c33 = oracle::perm_group(6, {{{1, 2, 3}}, {{4, 5, 6}}});
  auto cl = lattice_of(c33);
  SubgroupId cs = cl->whole_id();
  const auto& ce = (*cl)[cs];
  Elem a = ce.generators[0], b = ce.generators[1];
  ElemMap unipotent = aut_from(*cl, cs, {a, b}, {a, c33.mul(a, b)});

  const FusionSystem& d8 = catalog_fusion("inner-d8");
  const auto& dl = d8.lattice();
  std::vector<Arrow> dgens;
  for (SubgroupId q : d8.objects()) {
    if (dl[q].order() == 4) {
      // swap two generators of a Klein subgroup when possible
      const auto& g = dl[q].generators;
      if (g.size() == 2 && dl.group().element_order(g[0]) == 2 && dl.group().element_order(g[1]) == 2) {
        dgens.push_back({q, q, aut_from(dl, q, {g[0], g[1]}, {g[1], g[0]})});
        break;
      }
    }
  }
  ASSERT_EQ(dgens.size(), 1u);

  struct Case {
    LatticePtr lat;
    SubgroupId base;
    int p;
    std::vector<Arrow> gens;
  };
  std::vector<Case> cases{{vl, vs, 2, {{vs, vs, swap}}},
                          {cl, cs, 3, {{cs, cs, unipotent}}},
                          {d8.lattice_ptr(), d8.base(), 2, dgens}};
  for (const auto& c : cases) {
    std::vector<oracle::IsoTriple> g;
    for (const auto& a : c.gens) g.emplace_back(a.src, a.dst, a.map);
    FusionSystem F = generated_fusion(c.lat, c.base, c.p, c.gens);
    EXPECT_EQ(oracle::iso_triples(F), oracle::naive_closure(*c.lat, c.base, g));
  }
}

TEST(Saturation, InnerAndGroupSystemsAreSaturated) {
  for (const auto& e : catalog()) {
    const FusionSystem& F = catalog_fusion(e.name);
    auto rep = saturation_report(F);
    EXPECT_TRUE(rep.verdict) << e.name;
    EXPECT_TRUE(rep.continuity_vacuous);
    for (const auto& c : rep.classes) EXPECT_TRUE(c.witness.has_value()) << e.name;
  }
}

TEST(Saturation, CounterexamplesAreRejected) {
  FiniteGroup v = oracle::perm_group(4, {{{1, 2}}, {{3, 4}}});
  auto vl = lattice_of(v);
  SubgroupId vs = vl->whole_id();
  const auto& ve = (*vl)[vs];
  ElemMap swap = aut_from(*vl, vs, {ve.generators[0], ve.generators[1]},
                          {ve.generators[1], ve.generators[0]});
  FusionSystem F = generated_fusion(vl, vs, 2, {{vs, vs, swap}});
  auto rep = saturation_report(F);
  EXPECT_FALSE(rep.verdict);
  bool found = false;
  for (const auto& c : rep.classes) {
    if (c.representative == vs) {
      EXPECT_FALSE(c.witness.has_value());
      EXPECT_EQ(c.failing_axiom, "fully_automized");
      found = true;
    }
  }
  EXPECT_TRUE(found);

  FiniteGroup c33 = oracle::perm_group(6, {{{1, 2, 3}}, {{4, 5, 6}}});
  auto cl = lattice_of(c33);
  SubgroupId cs = cl->whole_id();
  Elem a = (*cl)[cs].generators[0], b = (*cl)[cs].generators[1];
  FusionSystem U = generated_fusion(cl, cs, 3, {{cs, cs, aut_from(*cl, cs, {a, b}, {a, c33.mul(a, b)})}});
  EXPECT_FALSE(is_saturated(U));
}

TEST(Saturation, ReceptivityFailureIsReported) {
  // D8 with the central involution fused to a non-central one: every member
  // of that class is fully automized but none is receptive.
  const FusionSystem& d8 = catalog_fusion("inner-d8");
  const auto& lat = d8.lattice();
  SubgroupId z = center_of(d8);
  SubgroupId x = -1;
  for (SubgroupId q : d8.objects()) {
    if (lat[q].order() == 2 && q != z) {
      x = q;
      break;
    }
  }
  ASSERT_GE(x, 0);
  FusionSystem F = generated_fusion(d8.lattice_ptr(), d8.base(), 2, {{x, z, lat[z].elements}});
  auto rep = saturation_report(F);
  EXPECT_FALSE(rep.verdict);
  bool found = false;
  for (const auto& c : rep.classes) {
    if (std::find(c.members.begin(), c.members.end(), z) == c.members.end()) continue;
    found = true;
    EXPECT_FALSE(c.witness.has_value());
    EXPECT_EQ(c.failing_axiom, "receptive");
    ASSERT_TRUE(c.failing_map.has_value());
    ASSERT_TRUE(c.n_phi.has_value());
    EXPECT_EQ(c.failing_map->dst, c.representative);
  }
  EXPECT_TRUE(found);
}

TEST(Conjugacy, InnerAbelianHasSingletonClasses) {
  for (const char* name : {"inner-c2xc4", "inner-c3-cubed", "inner-c2xc2"}) {
    for (const auto& cls : conjugacy(catalog_fusion(name)).element_classes) EXPECT_EQ(cls.size(), 1u);
  }
}

TEST(Conjugacy, PairedSystemFusesInverseInFirstFactor) {
  const FusionSystem& F = catalog_fusion("paper-sigma3-cubed");
  const FiniteGroup& S = F.group();
  // the first generator of S is the image of (1 2 3)
  const FiniteGroup& G = catalog_group("paper-sigma3-cubed");
  Subgroup syl = sylow(G, 3);
  Elem t1 = syl.position(G.generators()[0]);
  auto cls = element_class(F, t1);
  EXPECT_EQ(cls, (std::vector<Elem>{std::min(t1, S.inv(t1)), std::max(t1, S.inv(t1))}));
}

TEST(Conjugacy, Sym4InvolutionsOfBothKleinSubgroupsFuse) {
  const FusionSystem& F = catalog_fusion("sym4-p2");
  auto conj = conjugacy(F);
  // Element classes of D8 in Sym(4): 1, the five... fused down to identity,
  // transpositions (2 in D8), double transpositions (3), 4-cycles (2).
  std::vector<std::size_t> sizes;
  for (const auto& c : conj.element_classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 2, 3}));
}

TEST(Center, InnerSystemGivesCenterOfBase) {
  for (const char* name : {"inner-d8", "inner-c2xc4", "inner-d8xc2"}) {
    const FusionSystem& F = catalog_fusion(name);
    EXPECT_EQ(center_of(F), base_centralizer(F, F.base())) << name;
  }
}

TEST(Center, MatchesFixedPointsOnCatalog) {
  for (const auto& e : catalog()) {
    const FusionSystem& F = catalog_fusion(e.name);
    SubgroupId z = center_of(F);
    EXPECT_EQ(z, fixed_center(F)) << e.name;
    EXPECT_EQ(F.lattice()[z].order(), *e.expected.center_order) << e.name;
    EXPECT_TRUE(F.lattice().contains(base_centralizer(F, F.base()), z));
  }
}

TEST(Focal, SmallCasesAndCatalog) {
  const FusionSystem& d8 = catalog_fusion("inner-d8");
  EXPECT_EQ(d8.lattice()[focal_of(d8)].order(), 2u);
  FusionSystem inv = c3_with_inversion();
  EXPECT_EQ(focal_of(inv), inv.base());
  for (const auto& e : catalog()) {
    const FusionSystem& F = catalog_fusion(e.name);
    SubgroupId foc = focal_of(F);
    EXPECT_EQ(F.lattice()[foc].order(), *e.expected.focal_order) << e.name;
    Subgroup der = derived_subgroup(F.lattice().group().induced(F.base_subgroup()));
    EXPECT_GE(F.lattice()[foc].order(), der.order());
  }
}

TEST(Classify, WholeBaseAndLemmaConsequences) {
  for (const auto& name : support::small_entries()) {
    const FusionSystem& F = catalog_fusion(name);
    const auto& lat = F.lattice();
    auto whole = classify_subgroup(F, F.base());
    EXPECT_TRUE(whole.strongly_closed);
    EXPECT_TRUE(whole.centric);
    EXPECT_TRUE(whole.radical);
    SubgroupId z = center_of(F), foc = focal_of(F);
    for (SubgroupId q : F.objects()) {
      if (lat.contains(z, q) || lat.contains(q, foc)) EXPECT_TRUE(is_strongly_closed(F, q)) << name;
    }
  }
}

TEST(Classify, RadicalMatchesOutOverInnerDefinition) {
  // O_p(Out_F(P)) = 1 checked on the explicit quotient Aut_F(P)/Inn(P).
  for (const auto& name : support::small_entries()) {
    const FusionSystem& F = catalog_fusion(name);
    const auto& lat = F.lattice();
    for (SubgroupId q : F.objects()) {
      FiniteGroup aut = automizer_group(F, q);
      std::vector<Elem> inn_ids;
      for (Elem g : lat[q].elements) {
        ElemMap c = conjugation_map(lat, q, g);
        Permutation perm(std::max<std::size_t>(c.size(), 1), 0);
        for (std::size_t k = 0; k < c.size(); ++k) perm[k] = lat.position(q, c[k]);
        for (Elem a = 0; a < static_cast<Elem>(aut.order()); ++a)
          if (aut.permutation(a) == perm) inn_ids.push_back(a);
      }
      Subgroup inn = aut.subgroup(inn_ids);
      Quotient out = quotient(aut, inn);
      bool radical = o_p(out.group, F.prime()).order() == 1;
      EXPECT_EQ(is_radical(F, q), radical) << name << " subgroup " << q;
    }
  }
}

TEST(RestrictFull, WholeBaseAndSaturationOfCentralizerSplit) {
  for (const auto& name : support::small_entries()) {
    const FusionSystem& F = catalog_fusion(name);
    const auto& lat = F.lattice();
    EXPECT_EQ(restrict_full(F, F.base()), F);
    for (SubgroupId t : F.objects()) {
      if (!is_strongly_closed(F, t)) continue;
      SubgroupId c = base_centralizer(F, t);
      if (lat.join(t, c) != F.base()) continue;
      EXPECT_TRUE(is_saturated(restrict_full(F, t))) << name << " T=" << t;
    }
  }
}

TEST(RestrictFull, PairedFactorsAreSym3Fusions) {
  // In Sym(3)^3 the restriction to the i-th C3 is the fusion system of the
  // i-th Sym(3) factor.
  const FusionSystem& F = catalog_fusion("sigma3-cubed");
  const FiniteGroup& G = catalog_group("sigma3-cubed");
  Subgroup syl = sylow(G, 3);
  const auto& gens = G.generators();
  for (int i = 0; i < 3; ++i) {
    Elem t = syl.position(gens[2 * i]);
    SubgroupId ti = F.lattice().generated(std::vector<Elem>{t});
    Subgroup hi = G.subgroup(std::vector<Elem>{gens[2 * i], gens[2 * i + 1]});
    FusionSystem E = group_fusion(G, hi.elements, F.lattice_ptr(), ti, syl.elements, 3);
    EXPECT_EQ(restrict_full(F, ti), E);
    EXPECT_EQ(E.automorphisms(ti).size(), 2u);
  }
}

TEST(Alperin, RegeneratesCatalogSystems) {
  for (const auto& e : catalog()) {
    const FusionSystem& F = catalog_fusion(e.name);
    auto gens = alperin_generators(F);
    ASSERT_FALSE(gens.empty());
    EXPECT_EQ(gens.back().subgroup, F.base());
  }
  const FusionSystem& d8 = catalog_fusion("inner-d8");
  auto g = alperin_generators(d8);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].automorphisms.size(), 4u);
}
