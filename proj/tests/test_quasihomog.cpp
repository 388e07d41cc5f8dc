#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "lipclass/errors.hpp"
#include "lipclass/quasihomog.hpp"

using namespace lipclass;

namespace {

RationalPoly P(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return RationalPoly(v);
}

QuasiHomogPoly worked_F() { return from_monomials({{1, 1, 4}, {8, 4, 2}, {16, 7, 0}}, Beta(3, 2)); }
QuasiHomogPoly worked_G() { return from_monomials({{1, 1, 4}, {18, 4, 2}, {81, 7, 0}}, Beta(3, 2)); }

}  // namespace

TEST(Beta, Validation) {
  EXPECT_NO_THROW(Beta(3, 2));
  EXPECT_THROW(Beta(2, 2), DomainError);
  EXPECT_THROW(Beta(1, 2), DomainError);
  EXPECT_THROW(Beta(4, 2), DomainError);
  EXPECT_THROW(Beta(3, 0), DomainError);
}

TEST(FromMonomials, WorkedExample) {
  const QuasiHomogPoly F = worked_F();
  EXPECT_EQ(F.degree(), 7);
  ASSERT_EQ(F.m(), 2);
  EXPECT_EQ(F.coeffs()[0], 16);
  EXPECT_EQ(F.coeffs()[1], 8);
  EXPECT_EQ(F.coeffs()[2], 1);
  EXPECT_EQ(F.to_string(), "X*Y^4 + 8*X^4*Y^2 + 16*X^7");
}

TEST(FromMonomials, Monomial) {
  const QuasiHomogPoly F = from_monomials({{5, 3, 0}}, Beta(2, 1));
  EXPECT_EQ(F.degree(), 3);
  ASSERT_EQ(F.m(), 0);
  EXPECT_EQ(F.coeffs()[0], 5);
  EXPECT_TRUE(F.is_monomial());
}

TEST(FromMonomials, Rejections) {
  EXPECT_THROW(from_monomials({{1, 1, 4}, {8, 4, 1}, {16, 7, 0}}, Beta(3, 2)), DomainError);
  EXPECT_THROW(from_monomials({{1, 1, 4}, {8, 5, 2}}, Beta(3, 2)), DomainError);
  EXPECT_THROW(from_monomials({}, Beta(3, 2)), DomainError);
  EXPECT_THROW(from_monomials({{0, 1, 0}}, Beta(3, 2)), DomainError);
  EXPECT_THROW(from_monomials({{1, 0, 0}}, Beta(3, 2)), DomainError);
}

TEST(FromMonomials, AggregatesDuplicates) {
  const QuasiHomogPoly F = from_monomials({{1, 3, 0}, {2, 3, 0}, {1, 0, 2}}, Beta(3, 2));
  EXPECT_EQ(F.coeffs()[0], 3);
  EXPECT_EQ(F.coeffs()[1], 1);
  // cancelling duplicates drop the top coefficient
  const QuasiHomogPoly G = from_monomials({{1, 3, 0}, {2, 0, 2}, {-2, 0, 2}}, Beta(3, 2));
  EXPECT_EQ(G.m(), 0);
}

TEST(HeightFunctions, WorkedExample) {
  const HeightFunctions f = height_functions(worked_F());
  EXPECT_EQ(f.plus, P({16, 0, 8, 0, 1}));
  EXPECT_EQ(f.minus, P({-16, 0, 8, 0, -1}));
  const HeightFunctions g = height_functions(worked_G());
  EXPECT_EQ(g.plus, P({81, 0, 18, 0, 1}));
  EXPECT_EQ(g.minus, P({-81, 0, 18, 0, -1}));
}

TEST(HeightFunctions, MonomialHeightsAreConstants) {
  const HeightFunctions h = height_functions(QuasiHomogPoly(Beta(2, 1), 3, {Rational(5)}));
  EXPECT_EQ(h.plus, P({5}));
  EXPECT_EQ(h.minus, P({-5}));
}

TEST(XMultiplicity, Examples) {
  EXPECT_EQ(x_multiplicity(worked_F()), 1);
  EXPECT_EQ(x_multiplicity(QuasiHomogPoly(Beta(3, 2), 5, {Rational(2)})), 5);
  // Y^2 - X^3, beta = 3/2, d = 3
  EXPECT_EQ(x_multiplicity(from_monomials({{1, 0, 2}, {-1, 3, 0}}, Beta(3, 2))), 0);
}

TEST(HalfPlaneZeros, Examples) {
  const HalfPlaneZeros z = halfplane_zeros(worked_F());
  EXPECT_FALSE(z.right);
  EXPECT_TRUE(z.left);
  const HalfPlaneZeros mono = halfplane_zeros(QuasiHomogPoly(Beta(2, 1), 4, {Rational(-3)}));
  EXPECT_FALSE(mono.right);
  EXPECT_FALSE(mono.left);
  // X Y^2 - X^5 with beta = 2: f+ = t^2 - 1, f- = 1 - t^2
  const HalfPlaneZeros both = halfplane_zeros(from_monomials({{1, 1, 2}, {-1, 5, 0}}, Beta(2, 1)));
  EXPECT_TRUE(both.right);
  EXPECT_TRUE(both.left);
}

TEST(QuasiHomogProperty, ScalingIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Beta b = gen::beta(rng);
    const QuasiHomogPoly F = gen::quasihomog(rng, b, 3);
    const Rational tau = pow(Rational(2), static_cast<unsigned long>(b.s));
    const Rational tau_beta = pow(Rational(2), static_cast<unsigned long>(b.r));
    const Rational x = gen::small_rational(rng), y = gen::small_rational(rng);
    EXPECT_EQ(F(tau * x, tau_beta * y), pow(tau, static_cast<unsigned long>(F.degree())) * F(x, y));
  }
}

TEST(QuasiHomogProperty, HeightDegreesAndMultiplicity) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Beta b = gen::beta(rng);
    const QuasiHomogPoly F = gen::quasihomog(rng, b, 3);
    const HeightFunctions h = height_functions(F);
    EXPECT_EQ(h.plus.degree(), b.s * F.m());
    EXPECT_EQ(h.minus.degree(), b.s * F.m());
    bool pure_y = false;
    for (const auto& t : F.terms()) pure_y = pure_y || t.x_exp == 0;
    EXPECT_EQ(x_multiplicity(F) == 0, pure_y);
    // heights agree with direct evaluation
    const Rational t = gen::small_rational(rng);
    EXPECT_EQ(h.plus(t), F(Rational(1), t));
    EXPECT_EQ(h.minus(t), F(Rational(-1), t));
  }
}

TEST(QuasiHomogProperty, HalfPlaneMatchesSturm) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const QuasiHomogPoly F = gen::quasihomog(rng, gen::beta(rng), 3);
    const HeightFunctions h = height_functions(F);
    if (h.plus.is_constant()) continue;
    const RationalPoly sq = squarefree_part(h.plus);
    const Rational B = cauchy_bound(sq);
    EXPECT_EQ(halfplane_zeros(F).right, sturm_count(sq, RationalInterval(-B, B)) > 0);
  }
}
