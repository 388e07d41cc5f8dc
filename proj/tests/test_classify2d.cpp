#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "generators.hpp"
#include "lipclass/classify2d.hpp"
#include "lipclass/errors.hpp"

using namespace lipclass;

namespace {

QuasiHomogPoly worked_F() { return from_monomials({{1, 1, 4}, {8, 4, 2}, {16, 7, 0}}, Beta(3, 2)); }
QuasiHomogPoly worked_G() { return from_monomials({{1, 1, 4}, {18, 4, 2}, {81, 7, 0}}, Beta(3, 2)); }
QuasiHomogPoly mono(long a, long d, Beta b = Beta(3, 2)) { return QuasiHomogPoly(b, d, {Rational(a)}); }

// Pairs that often share a proto-transition, mixed with unrelated ones.
std::pair<QuasiHomogPoly, QuasiHomogPoly> random_pair(std::mt19937_64& rng) {
  const Beta b = gen::beta(rng);
  const QuasiHomogPoly F = gen::quasihomog(rng, b, 2);
  switch (rng() % 4) {
    case 0: return {F, gen::quasihomog(rng, b, 2)};
    case 1: return {F, F};
    default:
      return {F, gen::rescaled(F, abs(gen::nonzero_rational(rng, 4, 2)), gen::nonzero_rational(rng, 3, 2),
                               gen::nonzero_rational(rng, 3, 2))};
  }
}

}  // namespace

TEST(Classify2D, WorkedExample) {
  const auto start = std::chrono::steady_clock::now();
  const Verdict2D v = classify(worked_F(), worked_G());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 1.0);
  EXPECT_EQ(v.status, Status::Equivalent);
  EXPECT_EQ(v.reason, Reason::CondB);
  EXPECT_FALSE(v.conditions.a);
  EXPECT_TRUE(v.conditions.b);
  EXPECT_FALSE(v.conditions.c);
  ASSERT_TRUE(v.choice.has_value());
  EXPECT_EQ(v.choice->c1, AlgebraicNumber(make_rational(81, 16)));
  EXPECT_EQ(v.choice->c2, AlgebraicNumber(make_rational(81, 16)));
  EXPECT_EQ(v.certificate->pairing, Pairing::Direct);

  const std::string report = explain(v);
  EXPECT_NE(report.find("c = 81/16"), std::string::npos) << report;
  EXPECT_NE(report.find("condition (b)"), std::string::npos) << report;
  EXPECT_NE(report.find("symbol ((0,-16,0),(2,2,2))"), std::string::npos) << report;
  EXPECT_NE(report.find("symbol ((0,-81,0),(2,2,2))"), std::string::npos) << report;
}

TEST(Classify2D, Monomials) {
  const Verdict2D even = classify(mono(2, 4), mono(-3, 4));
  EXPECT_EQ(even.status, Status::NotEquivalent);
  EXPECT_EQ(even.reason, Reason::MonomialCase);
  EXPECT_NE(explain(even).find("sign mismatch"), std::string::npos);

  const Verdict2D odd = classify(mono(2, 3), mono(-5, 3));
  EXPECT_EQ(odd.status, Status::Equivalent);
  EXPECT_EQ(odd.reason, Reason::MonomialCase);

  EXPECT_EQ(classify(mono(2, 4), mono(7, 4)).status, Status::Equivalent);
  EXPECT_EQ(classify(mono(2, 4), mono(7, 5)).status, Status::Undetermined);
}

TEST(Classify2D, Identity) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const QuasiHomogPoly F = gen::quasihomog(rng, gen::beta(rng), 2);
    const Verdict2D v = classify(F, F);
    EXPECT_EQ(v.status, Status::Equivalent) << F.to_string();
    if (v.choice) {
      EXPECT_TRUE(v.certificate->side1.constants(v.choice->o1).contains(AlgebraicNumber(1)) ||
                  v.choice->c1 == v.choice->c2);
    }
  }
}

TEST(Classify2D, BetaMismatch) { EXPECT_THROW(classify(mono(1, 4, Beta(3, 2)), mono(1, 4, Beta(2, 1))), DomainError); }

TEST(Classify2D, NecessaryConditionFails) {
  // F = X Y^2 - X^5 (β = 2) meets both half-planes; G = X Y^2 + X^5 meets neither
  const QuasiHomogPoly F = from_monomials({{1, 1, 2}, {-1, 5, 0}}, Beta(2, 1));
  const QuasiHomogPoly G = from_monomials({{1, 1, 2}, {1, 5, 0}}, Beta(2, 1));
  const Verdict2D v = classify(F, G);
  EXPECT_EQ(v.status, Status::NotEquivalent);
  EXPECT_EQ(v.reason, Reason::NecessaryFails);
  EXPECT_EQ(classify(G, F).status, Status::NotEquivalent);
}

TEST(Classify2D, NecessaryConditionNotApplicable) {
  // heights t^2 + 1 vs t^2 + 1 on the right, -(t^2 + 1) vs -(t^2 - 1)... keep both zero sets one-sided
  const QuasiHomogPoly F = from_monomials({{1, 0, 4}, {8, 3, 2}, {16, 6, 0}}, Beta(3, 2));  // e = 0
  const QuasiHomogPoly G = from_monomials({{1, 0, 4}, {-8, 3, 2}, {15, 6, 0}}, Beta(3, 2));
  const Verdict2D v = classify(F, G);
  EXPECT_FALSE(v.pairings.direct.has_value());
  EXPECT_FALSE(v.pairings.reverse.has_value());
  EXPECT_FALSE(v.f_zeros.right && v.f_zeros.left);
  EXPECT_FALSE(v.g_zeros.right && v.g_zeros.left);
  EXPECT_EQ(v.status, Status::Undetermined);
  EXPECT_EQ(v.reason, Reason::NecessaryNotApplicable);
  EXPECT_NE(explain(v).find("not applicable"), std::string::npos);
}

TEST(Classify2D, NoCriterion) {
  // s even: f+ and f- sample P(u) = u^3 - 3u on u >= 0 and u <= 0 (u = ±t^2), G uses
  // Q(u) = u^3 + 3u^2 - 9u. Both sides pair, with constants 5/2 and 27/2.
  const QuasiHomogPoly F = from_monomials({{-3, 7, 2}, {1, 1, 6}}, Beta(3, 2));
  const QuasiHomogPoly G = from_monomials({{-9, 7, 2}, {3, 4, 4}, {1, 1, 6}}, Beta(3, 2));
  const Verdict2D v = classify(F, G);
  ASSERT_TRUE(v.pairings.direct.has_value());
  EXPECT_TRUE(v.pairings.direct->c1.contains(AlgebraicNumber(make_rational(5, 2))));
  EXPECT_TRUE(v.pairings.direct->c2.contains(AlgebraicNumber(make_rational(27, 2))));
  EXPECT_FALSE(v.conditions.a);
  EXPECT_FALSE(v.conditions.b);
  EXPECT_FALSE(v.conditions.c);
  EXPECT_EQ(v.status, Status::Undetermined);
  EXPECT_EQ(v.reason, Reason::NoCriterionApplies);
  const std::string report = explain(v);
  EXPECT_NE(report.find("condition (a) r even or s odd: fails"), std::string::npos) << report;
  EXPECT_NE(report.find("none of (a), (b), (c) holds"), std::string::npos) << report;
}

TEST(Classify2D, DegreeMismatchWithPairing) {
  // X^3 Y (d = 5) and X^2 Y (d = 4) with β = 2: heights t, -t and t, t
  const QuasiHomogPoly F = from_monomials({{1, 3, 1}}, Beta(2, 1));
  const QuasiHomogPoly G = from_monomials({{1, 2, 1}}, Beta(2, 1));
  const Verdict2D v = classify(F, G);
  EXPECT_TRUE(v.pairings.direct.has_value() || v.pairings.reverse.has_value());
  EXPECT_EQ(v.status, Status::Undetermined);
  EXPECT_EQ(v.reason, Reason::NoCriterionApplies);
}

TEST(Classify2D, Symmetry) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto [F, G] = random_pair(rng);
    EXPECT_EQ(classify(F, G).status, classify(G, F).status) << F.to_string() << " | " << G.to_string();
  }
}

TEST(Classify2D, ScalingInvariance) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto [F, G] = random_pair(rng);
    const Rational tau = pow(Rational(2), static_cast<unsigned long>(G.beta().s));
    const Rational tau_beta = pow(Rational(2), static_cast<unsigned long>(G.beta().r));
    const QuasiHomogPoly G2 = gen::rescaled(G, Rational(1), tau, tau_beta);
    const Verdict2D v = classify(F, G), w = classify(F, G2);
    EXPECT_EQ(v.status, w.status);
    if (v.reason == Reason::CondB && w.reason == Reason::CondB) {
      const AlgebraicNumber scale(pow(tau, static_cast<unsigned long>(G.degree())));
      EXPECT_TRUE(w.certificate->c1.contains(v.choice->c1 * scale));
    }
  }
}

TEST(Classify2D, ConditionOrderIrrelevant) {
  std::mt19937_64 rng(34);
  int equivalent = 0;
  for (int i = 0; i < 150; ++i) {
    const auto [F, G] = random_pair(rng);
    const Verdict2D v = classify(F, G);
    if (!v.pairings.direct && !v.pairings.reverse) continue;
    if (F.is_monomial() && G.is_monomial()) continue;
    const bool any = v.conditions.a || v.conditions.b || v.conditions.c;
    EXPECT_EQ(v.status == Status::Equivalent, any);
    if (v.status == Status::Equivalent) {
      ++equivalent;
      ASSERT_TRUE(v.choice.has_value());
      const BetaCheck bc = is_beta_transition(*v.certificate, *v.choice, x_multiplicity(F), F.beta(), F.degree());
      EXPECT_TRUE(bc.characterization);
      EXPECT_TRUE(bc.limit_check);
    }
  }
  EXPECT_GT(equivalent, 30);
}
