#include <gtest/gtest.h>

#include <random>

#include "ydhopf/constructions.hpp"
#include "ydhopf/error.hpp"
#include "ydhopf/qta.hpp"

using namespace ydhopf;

namespace {

// Bosonic line pipeline. Bases: H = {1, x}, Hd = {e, x*} with e the counit,
// E = End(H) with E_{j,i}: v_i -> v_j at index 2j + i.
struct Line {
  DualityInput in;
  Duality d;

  Line() : in(regular_duality_setup(quantum_tensor_algebra(preset("bline")))),
           d(build_duality(in.r, in.h, in.hd, in.pairing)) {}
};

// Value of an End element on basis vector k of H.
SparseVec apply_end(const Duality& d, const SparseVec& e, std::uint64_t k) {
  const std::uint64_t n = d.h.carrier->dim();
  SparseVec ek;
  for (const Term& t : e) ek.push_back({t.index * n + k, t.value});
  return d.end.act.apply(ek);
}

// Rank-two exterior-type algebra over Z4 x Z4, F_5: x1^2 = x2^2 = 0,
// x2 x1 = q x1 x2 with q = chi_1(g_2) = 2, chi_2(g_1) = 3 = q^{-1}, chi_i(g_i) = -1,
// so the braiding is symmetric. Basis {1, x1, x2, x1x2}.
HopfData exterior_pair() {
  auto ctx = make_context(5, {4, 4});
  const GroupElement g1 = 4, g2 = 1;  // (1,0), (0,1)
  DenseMatrix a1(4, 4), a2(4, 4);
  const Scalar on_g1[4] = {1, 4, 3, 2}, on_g2[4] = {1, 2, 4, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    a1.at(i, i) = on_g1[i];
    a2.at(i, i) = on_g2[i];
  }
  auto h = YDObject::build("H", ctx, {0, g1, g2, ctx->group.add(g1, g2)}, {a1, a2});
  const ObjectWord w(h), unit(ctx, {});
  HopfData d{h, LinearMorphism{w + w, w}, LinearMorphism{unit, w}, LinearMorphism{w, w + w},
             LinearMorphism{w, unit}, std::nullopt};
  for (std::uint64_t i = 0; i < 4; ++i) {
    d.m.set_column(i, {{i, 1}});      // 1 . b
    d.m.set_column(i * 4, {{i, 1}});  // b . 1
  }
  d.m.set_column(1 * 4 + 2, {{3, 1}});  // x1 x2
  d.m.set_column(2 * 4 + 1, {{3, 2}});  // x2 x1 = 2 x1x2
  d.eta.set_column(0, {{0, 1}});
  d.eps.set_column(0, {{0, 1}});
  d.delta.set_column(0, {{0, 1}});
  d.delta.set_column(1, {{1, 1}, {4, 1}});
  d.delta.set_column(2, {{2, 1}, {8, 1}});
  // x1x2 (x) 1 + x1 (x) x2 + chi_2(g_1) x2 (x) x1 + 1 (x) x1x2
  d.delta.set_column(3, {{3, 1}, {6, 1}, {9, 3}, {12, 1}});
  return d;
}

}  // namespace

TEST(Constructions, LambdaDisplayValuesOnLine) {
  Line l;
  const Duality& d = l.d;
  // lambda(1#e) = id_H
  EXPECT_EQ(d.lambda.column(0), (SparseVec{{0, 1}, {3, 1}}));
  // lambda(1#x*)(x) = 1 and lambda(1#x*)(1) = 0
  EXPECT_EQ(apply_end(d, d.lambda.column(1), 1), (SparseVec{{0, 1}}));
  EXPECT_TRUE(apply_end(d, d.lambda.column(1), 0).empty());
  // lambda(h#e)(k) = h k
  for (std::uint64_t h = 0; h < 2; ++h)
    for (std::uint64_t k = 0; k < 2; ++k)
      EXPECT_EQ(apply_end(d, d.lambda.column(h * 2 + 0), k), d.h.m.column(h * 2 + k));
}

TEST(Constructions, RhoDisplayValuesOnLine) {
  Line l;
  const Duality& d = l.d;
  // rho(e#1) = id_H, rho(x*#1)(x) = 1, rho(e#h)(k) = k h
  EXPECT_EQ(d.rho.column(0), (SparseVec{{0, 1}, {3, 1}}));
  EXPECT_EQ(apply_end(d, d.rho.column(2), 1), (SparseVec{{0, 1}}));
  for (std::uint64_t h = 0; h < 2; ++h)
    for (std::uint64_t k = 0; k < 2; ++k) EXPECT_EQ(apply_end(d, d.rho.column(h), k), d.h.m.column(k * 2 + h));
  EXPECT_TRUE(lambda_rho_report(d).verdict());
}

TEST(Constructions, LambdaBarAndW) {
  Line l;
  const Duality& d = l.d;
  // lambda_bar(id) = 1#e, w(e) = 1#e
  EXPECT_EQ(d.lambda_bar.apply({{0, 1}, {3, 1}}), (SparseVec{{0, 1}}));
  EXPECT_EQ(d.w.column(0), (SparseVec{{0, 1}}));
  EXPECT_TRUE(morphism_equal(compose(d.lambda, d.lambda_bar), LinearMorphism::identity(d.lambda.dom())));
  Report r = lambda_bar_report(d);
  EXPECT_TRUE(r.verdict()) << r.to_text();
  EXPECT_TRUE(check_elimination(d.end.act));
}

TEST(Constructions, SmashProductOnLine) {
  Line l;
  const Duality& d = l.d;
  // (1#1) is the unit; (1#x*)(1#x*) = (e -> 1) # x* x* + (x* -> 1) # x* = 0.
  EXPECT_EQ(d.h_hd.eta.column(0), (SparseVec{{0, 1}}));
  const SparseVec sq = d.h_hd.m.column(1 * 4 + 1);
  for (const Term& t : sq) EXPECT_NE(t.index, 1u) << "x* (x) x* style component must vanish";
  EXPECT_TRUE(sq.empty());
  EXPECT_TRUE(algebra_axiom_report("hhd.", d.h_hd).verdict());
  EXPECT_TRUE(algebra_axiom_report("hdh.", d.hd_h).verdict());
}

TEST(Constructions, PsiPhiOnLine) {
  Line l;
  const Duality& d = l.d;
  ASSERT_EQ(d.Phi.cols(), 8u);
  EXPECT_TRUE(morphism_equal(compose(d.Phi, d.Psi), LinearMorphism::identity(d.Phi.dom())));
  EXPECT_TRUE(morphism_equal(compose(d.Psi, d.Phi), LinearMorphism::identity(d.Psi.dom())));
  // Phi(1#1#e) = 1 (x) (1#e)
  EXPECT_EQ(d.Phi.column(0), (SparseVec{{0, 1}}));
}

TEST(Constructions, ExchangeAndProofMachineryOnLine) {
  Line l;
  Report ex = exchange_report(l.d);
  EXPECT_TRUE(ex.verdict()) << ex.to_text();
  EXPECT_EQ(ex.items().size(), 6u);
  Report pm = proof_machinery_report(l.d);
  EXPECT_TRUE(pm.verdict()) << pm.to_text();
}

TEST(Constructions, RlConditionOnLine) {
  Line l;
  // U = span(e)
  EXPECT_TRUE(check_rl_condition(l.d, {{{0, 1}}}));
  EXPECT_TRUE(check_rl_condition(l.d, {{{0, 1}}, {{1, 1}}}));
  EXPECT_TRUE(rho_equals_lambda_on_units(l.d));
}

TEST(Constructions, FullLadderOnLine) {
  Line l;
  Report r = verify_duality(l.in.r, l.in.h, l.in.hd, l.in.pairing);
  EXPECT_TRUE(r.verdict()) << r.to_text();
  ASSERT_NE(r.find("duality.phi-mult"), nullptr);
}

TEST(Constructions, SabotagedPairingStopsBeforeDuality) {
  Line l;
  LinearMorphism bad = l.in.pairing;
  bad.set_column(1, {{0, 1}});  // <e, x> = 1
  Report r = verify_duality(l.in.r, l.in.h, l.in.hd, bad);
  EXPECT_FALSE(r.verdict());
  ASSERT_NE(r.find("pairing"), nullptr);
  EXPECT_FALSE(r.find("pairing")->pass);
  EXPECT_EQ(r.find("duality.build"), nullptr);
  EXPECT_EQ(r.find("duality.psi-phi"), nullptr);
}

TEST(Constructions, ComoduleAlgebraReportDetectsBadCoaction) {
  Line l;
  ComoduleAlgebra r = l.in.r;
  EXPECT_TRUE(comodule_algebra_report(r, l.in.hd).verdict());
  r.psi = scaled(r.psi, 2);
  EXPECT_FALSE(comodule_algebra_report(r, l.in.hd).verdict());
}

TEST(Constructions, BraidedTensorAlgebraOfLines) {
  Line l;
  Algebra a = l.in.h.algebra();
  Algebra t = braided_tensor_algebra(a, a);
  EXPECT_EQ(t.m.cols(), 16u);
  EXPECT_TRUE(algebra_axiom_report("t.", t).verdict());
  // (1 (x) x)(x (x) 1) = (g.x) (x) x = -x (x) x
  EXPECT_EQ(t.m.column(1 * 4 + 2), (SparseVec{{3, 4}}));
  EXPECT_EQ(t.m.column(2 * 4 + 1), (SparseVec{{3, 1}}));
}

TEST(Constructions, ExteriorRankTwoPassesTheWholeLadder) {
  BraidedHopfAlgebra h = hopf_build(exterior_pair());
  // S(x1 x2) = chi_2(g_1) S(x2) S(x1) = 3 x2 x1 = 6 x1x2 = x1x2
  EXPECT_EQ(h.S.column(3), (SparseVec{{3, 1}}));
  QuasiDual q = quasi_dual_build(h);
  ComoduleAlgebra r = regular_comodule_algebra(q.hd);
  Report rep = verify_duality(r, h, q.hd, q.pairing);
  EXPECT_TRUE(rep.verdict()) << rep.to_text();
  Duality d = build_duality(r, h, q.hd, q.pairing);
  EXPECT_TRUE(exchange_report(d).verdict());
  EXPECT_TRUE(proof_machinery_report(d).verdict());
  EXPECT_TRUE(rho_equals_lambda_on_units(d));
  EXPECT_EQ(d.Phi.cols(), 4u * 16u);
}

TEST(Constructions, EqualityThroughEliminationOnRandomElements) {
  // lambda(u) = lambda(v) exactly when their actions on H agree.
  Line l;
  const Duality& d = l.d;
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    SparseVec u, v;
    for (std::uint64_t i = 0; i < 4; ++i) {
      const Scalar a = static_cast<Scalar>(rng() % 5), b = rep % 2 ? a : static_cast<Scalar>(rng() % 5);
      if (a) u.push_back({i, a});
      if (b) v.push_back({i, b});
    }
    const SparseVec lu = d.lambda.apply(u), lv = d.lambda.apply(v);
    bool same_action = true;
    for (std::uint64_t k = 0; k < 2; ++k) same_action &= apply_end(d, lu, k) == apply_end(d, lv, k);
    EXPECT_EQ(same_action, u == v);
  }
}
