#include <gtest/gtest.h>

#include "fusionsys/catalog.hpp"
#include "fusionsys/fusion.hpp"
#include "fusionsys/group_ops.hpp"
#include "fusionsys/morphism.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fusionsys;
using support::catalog_fusion;
using support::catalog_group;

namespace {

FiniteGroup cyclic(int n) {
  std::vector<int> cycle;
  for (int i = 1; i <= n; ++i) cycle.push_back(i);
  return oracle::perm_group(static_cast<std::size_t>(n), {{cycle}});
}

// F_{S1 x S2}(G1 x G2) computed directly on the product group.
FusionSystem fusion_of_product(const FiniteGroup& g1, const FiniteGroup& g2, int p) {
  DirectProduct d = direct_product(g1, g2);
  Subgroup s1 = sylow(g1, p), s2 = sylow(g2, p);
  std::vector<Elem> gens;
  for (Elem a : s1.generators) gens.push_back(static_cast<Elem>(a * g2.order()));
  for (Elem b : s2.generators) gens.push_back(b);
  return fusion_of_group(d.product, p, d.product.subgroup(gens));
}

struct PairedCase {
  SystemPtr F;     // the catalog group with the paired transpositions
  SystemPtr Fbar;  // Sym(3)^3 on the same lattice
  std::vector<SubgroupId> t;
  std::vector<SystemPtr> e;  // restrictions of Fbar to the three C3 factors
};

const PairedCase& paired_case() {
  static const PairedCase ex = [] {
    PairedCase x;
    const FiniteGroup& G = catalog_group("paper-sigma3-cubed");
    const FiniteGroup& H = catalog_group("sigma3-cubed");
    x.F = share(catalog_fusion("paper-sigma3-cubed"));
    Subgroup syl = sylow(G, 3);
    std::vector<Elem> embed;
    for (Elem s : syl.elements) embed.push_back(*H.find(G.permutation(s)));
    std::vector<Elem> all(H.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
    x.Fbar = share(group_fusion(H, all, x.F->lattice_ptr(), x.F->base(), embed, 3));
    for (int i = 0; i < 3; ++i) {
      Elem gen = syl.position(G.generators()[i]);
      x.t.push_back(x.F->lattice().generated(std::vector<Elem>{gen}));
      x.e.push_back(share(restrict_full(*x.Fbar, x.t.back())));
    }
    return x;
  }();
  return ex;
}

}  // namespace

TEST(Morphism, IdentityAndZero) {
  for (const auto& name : support::small_entries()) {
    SystemPtr F = share(catalog_fusion(name));
    auto id = identity_morphism(F);
    EXPECT_NO_THROW(check_morphism(F, F, id.f)) << name;
    EXPECT_TRUE(id.is_injective() && id.is_surjective());
    auto z = zero_morphism(F, F);
    EXPECT_NO_THROW(check_morphism(F, F, z.f)) << name;
    EXPECT_EQ(kernel(z), F->base());
    EXPECT_EQ(kernel(id), F->lattice().trivial_id());
    EXPECT_EQ(image(id), *F) << name;
  }
}

TEST(Morphism, RejectsNonHomomorphism) {
  SystemPtr F = share(catalog_fusion("inner-c2xc4"));
  ElemMap f = identity_morphism(F).f;
  std::swap(f[1], f[2]);
  bool hom = true;
  try {
    check_morphism(F, F, f);
  } catch (const FusionError& e) {
    hom = false;
    EXPECT_EQ(e.code(), ErrorCode::kNotFusionPreserving);
  }
  // Swapping two arbitrary ids can accidentally be an automorphism; make sure
  // the oracle agrees with the verdict.
  const auto& lat = F->lattice();
  bool oracle_hom = true;
  for (Elem a : lat[F->base()].elements) {
    for (Elem b : lat[F->base()].elements) {
      if (f[lat.position(F->base(), lat.group().mul(a, b))] != lat.group().mul(f[a], f[b])) oracle_hom = false;
    }
  }
  EXPECT_EQ(hom, oracle_hom);
}

TEST(Morphism, IdentityOfBaseDoesNotCarrySym3IntoInnerSystem) {
  SystemPtr E = share(catalog_fusion("sym3-p3"));
  SystemPtr I = share(inner_fusion(E->lattice_ptr(), E->base(), 3));
  EXPECT_FALSE(is_morphism(*E, *I, E->base_subgroup().elements));
  EXPECT_TRUE(is_morphism(*I, *E, E->base_subgroup().elements));
  try {
    check_morphism(E, I, E->base_subgroup().elements);
    FAIL();
  } catch (const FusionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFusionPreserving);
  }
}

TEST(Morphism, GeneratingArrowsRegenerateSystem) {
  for (const auto& name : support::small_entries()) {
    const FusionSystem& F = catalog_fusion(name);
    EXPECT_EQ(generated_fusion(F.lattice_ptr(), F.base(), F.prime(), generating_arrows(F)), F) << name;
  }
}

TEST(Morphism, BaseConjugationIsAnIsomorphism) {
  for (const char* name : {"sym4-p2", "inner-d8xc2", "sym3xc3-p3"}) {
    SystemPtr F = share(catalog_fusion(name));
    const auto& lat = F->lattice();
    for (Elem g : F->base_subgroup().generators) {
      auto m = check_morphism(F, F, conjugation_map(lat, F->base(), g));
      ASSERT_TRUE(m.is_injective() && m.is_surjective());
      auto inv = check_morphism(F, F, conjugation_map(lat, F->base(), lat.group().inv(g)));
      EXPECT_EQ(compose(inv, m), identity_morphism(F));
      EXPECT_EQ(image(m), *F);
    }
  }
}

TEST(Product, MatchesFusionOfProductGroup) {
  struct Case {
    FiniteGroup g1, g2;
    int p;
  };
  std::vector<Case> cases = {
      {catalog_group("sym3-p3"), catalog_group("sym3-p3"), 3},
      {catalog_group("sym3-p3"), cyclic(3), 3},
      {catalog_group("sym4-p2"), cyclic(2), 2},
      {catalog_group("alt4-p2"), catalog_group("alt4-p2"), 2},
      {catalog_group("inner-d8"), cyclic(2), 2},
  };
  for (const auto& c : cases) {
    SystemPtr f1 = share(fusion_of_group(c.g1, c.p));
    SystemPtr f2 = share(fusion_of_group(c.g2, c.p));
    ProductSystem P = product({f1, f2});
    EXPECT_EQ(*P.product, fusion_of_product(c.g1, c.g2, c.p)) << c.g1.order() << " x " << c.g2.order();
    EXPECT_TRUE(is_saturated(*P.product));
  }
}

TEST(Product, EmbeddingsAndProjections) {
  SystemPtr a = share(catalog_fusion("alt4-p2"));
  SystemPtr b = share(catalog_fusion("inner-d8"));
  ProductSystem P = product({a, b});
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      auto c = compose(P.projections[j], P.embeddings[i]);
      if (i == j) {
        EXPECT_EQ(c, identity_morphism(P.factors[i]));
      } else {
        EXPECT_EQ(c.f, zero_morphism(P.factors[i], P.factors[j]).f);
      }
    }
    // The kernel of a projection is the other embedded factor.
    SubgroupId ker = kernel(P.projections[i]);
    EXPECT_EQ(ker, P.embeddings[1 - i].image_subgroup(P.factors[1 - i]->base()));
    EXPECT_TRUE(is_strongly_closed(*P.product, ker));
  }
  // id = e1 p1 + e2 p2
  auto s = sum({compose(P.embeddings[0], P.projections[0]), compose(P.embeddings[1], P.projections[1])});
  EXPECT_EQ(s, identity_morphism(P.product));
}

TEST(Product, CentricRadicalSubgroupsSplit) {
  SystemPtr a = share(catalog_fusion("alt4-p2"));
  SystemPtr b = share(catalog_fusion("sym3-p2"));
  ProductSystem P = product({a, b});
  const auto& lat = P.product->lattice();
  SubgroupId t1 = P.embeddings[0].image_subgroup(a->base());
  SubgroupId t2 = P.embeddings[1].image_subgroup(b->base());
  auto inv = invariants(*P.product);
  ASSERT_FALSE(inv.centric.empty());
  for (SubgroupId q : inv.centric) {
    if (!is_radical(*P.product, q)) continue;
    EXPECT_EQ(lat.join(lat.meet(q, t1), lat.meet(q, t2)), q);
  }
}

TEST(Product, SwapIsAnAutomorphism) {
  SystemPtr a = share(catalog_fusion("sym3-p3"));
  ProductSystem P = product({a, a});
  std::size_t n = a->base_subgroup().order();
  ElemMap swap(n * n);
  for (std::size_t x = 0; x < swap.size(); ++x) swap[x] = static_cast<Elem>((x % n) * n + x / n);
  auto m = check_morphism(P.product, P.product, swap);
  EXPECT_TRUE(m.is_injective() && m.is_surjective());
  EXPECT_EQ(compose(m, m), identity_morphism(P.product));
}

TEST(Commute, PairedInvolutionsPairsCommuteButTripleDoesNot) {
  const auto& x = paired_case();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      auto r = commute_test(*x.F, {{x.t[i], x.e[i]}, {x.t[j], x.e[j]}});
      EXPECT_TRUE(r.commute) << i << j;
    }
  }
  auto triple = commute_test(*x.F, {{x.t[0], x.e[0]}, {x.t[1], x.e[1]}, {x.t[2], x.e[2]}});
  EXPECT_FALSE(triple.commute);
  ASSERT_TRUE(triple.witness.has_value());
  EXPECT_EQ(triple.witness->tuple.size(), 3u);
  EXPECT_TRUE(commute_test(*x.Fbar, {{x.t[0], x.e[0]}, {x.t[1], x.e[1]}, {x.t[2], x.e[2]}}).commute);
}

TEST(Commute, PairedInvolutionsProductOfTwoFailsWithThird) {
  const auto& x = paired_case();
  auto r = commute_check(x.F, {{x.t[0], x.e[0]}, {x.t[1], x.e[1]}});
  ASSERT_TRUE(r.commute);
  SystemPtr e12 = share(*r.inner_product);
  SubgroupId t12 = x.F->lattice().join(x.t[0], x.t[1]);
  EXPECT_EQ(e12->base(), t12);
  // E1E2 is Sym(3) x Sym(3) on T1 T2.
  EXPECT_EQ(e12->automorphisms(t12).size(), 4u);
  auto bar = commute_check(x.Fbar, {{t12, e12}, {x.t[2], x.e[2]}});
  EXPECT_TRUE(bar.commute);
  EXPECT_EQ(*bar.inner_product, *x.Fbar);
  EXPECT_FALSE(commute_test(*x.F, {{t12, e12}, {x.t[2], x.e[2]}}).commute);
}

TEST(Commute, PairedInvolutionsDecompositions) {
  const auto& x = paired_case();
  std::vector<Subsystem> parts = {{x.t[0], x.e[0]}, {x.t[1], x.e[1]}, {x.t[2], x.e[2]}};
  EXPECT_TRUE(is_product_decomposition(x.Fbar, parts));
  EXPECT_FALSE(is_product_decomposition(x.F, parts));
}

TEST(Commute, PaddedAgreesWithExhaustive) {
  std::size_t yes = 0, no = 0;
  for (const char* name : {"inner-c2xc2", "inner-d8", "sym3xc3-p3", "sym3xsym3-p3", "inner-d8xc2"}) {
    SystemPtr F = share(catalog_fusion(name));
    const auto& lat = F->lattice();
    std::size_t checked = 0;
    for (SubgroupId a : F->objects()) {
      for (SubgroupId b : F->objects()) {
        if (b < a) continue;
        bool commute = true;
        for (Elem u : lat[a].generators) {
          for (Elem v : lat[b].generators) commute = commute && lat.group().mul(u, v) == lat.group().mul(v, u);
        }
        if (!commute) continue;
        std::vector<Subsystem> parts = {{a, share(restrict_full(*F, a))}, {b, share(restrict_full(*F, b))}};
        bool padded = commute_test(*F, parts, CommuteMode::kPadded).commute;
        bool full = commute_test(*F, parts, CommuteMode::kExhaustive).commute;
        EXPECT_EQ(padded, full) << name << " " << a << " " << b;
        ++(full ? yes : no);
        ++checked;
      }
    }
    EXPECT_GT(checked, 0u);
  }
  EXPECT_GT(yes, 0u);
  EXPECT_GT(no, 0u);
  const auto& x = paired_case();
  std::vector<Subsystem> parts = {{x.t[0], x.e[0]}, {x.t[1], x.e[1]}, {x.t[2], x.e[2]}};
  EXPECT_EQ(commute_test(*x.F, parts, CommuteMode::kExhaustive).commute, false);
  EXPECT_EQ(commute_test(*x.Fbar, parts, CommuteMode::kExhaustive).commute, true);
}

TEST(Commute, RejectsNonSubsystem) {
  SystemPtr F = share(catalog_fusion("sym3-p3"));
  SystemPtr I = share(inner_fusion(F->lattice_ptr(), F->base(), 3));
  try {
    commute_test(*I, {{F->base(), F}});
    FAIL();
  } catch (const FusionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
}

TEST(Sum, DistributesOverComposition) {
  SystemPtr a = share(catalog_fusion("sym3-p3"));
  SystemPtr c = share(catalog_fusion("sym3xc3-p3"));
  ProductSystem P = product({a, c});
  ProductSystem Q = product({P.product, a});
  // f, g: P -> P with commuting images; h: P -> Q; k: a x c -> P.
  auto f = compose(P.embeddings[0], P.projections[0]);
  auto g = compose(P.embeddings[1], P.projections[1]);
  auto h = Q.embeddings[0];
  auto k = identity_morphism(P.product);
  auto fg = sum({f, g});
  EXPECT_EQ(compose(h, fg), sum({compose(h, f), compose(h, g)}));
  EXPECT_EQ(compose(fg, k), sum({compose(f, k), compose(g, k)}));
  EXPECT_TRUE(summable({f, g}));
  EXPECT_EQ(sum({f, zero_morphism(P.product, P.product)}), f);
}

TEST(Sum, IdentityIsNotSummableWithItselfOverSym3) {
  SystemPtr a = share(catalog_fusion("sym3-p3"));
  auto id = identity_morphism(a);
  EXPECT_FALSE(summable({id, id}));
  try {
    sum({id, id});
    FAIL();
  } catch (const FusionError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSummable);
  }
  // On an inner abelian system doubling is a morphism.
  SystemPtr c = share(catalog_fusion("inner-c2xc4"));
  auto cid = identity_morphism(c);
  auto twice = sum({cid, cid});
  for (std::size_t k = 0; k < twice.f.size(); ++k) {
    Elem x = c->base_subgroup().elements[k];
    EXPECT_EQ(twice.f[k], c->group().mul(x, x));
  }
}
