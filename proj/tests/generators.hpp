// Hand-rolled generators shared by the property and acceptance suites.
#pragma once

#include <random>
#include <vector>

#include "lipclass/poly.hpp"
#include "lipclass/quasihomog.hpp"

namespace gen {

using lipclass::Rational;
using lipclass::RationalPoly;

inline Rational small_rational(std::mt19937_64& rng, int span = 9, int max_den = 4) {
  std::uniform_int_distribution<int> n(-span, span);
  std::uniform_int_distribution<int> d(1, max_den);
  return lipclass::make_rational(n(rng), d(rng));
}

inline Rational nonzero_rational(std::mt19937_64& rng, int span = 9, int max_den = 4) {
  Rational q;
  do q = small_rational(rng, span, max_den);
  while (q == 0);
  return q;
}

// Dense random polynomial of exact degree `degree`.
inline RationalPoly dense(std::mt19937_64& rng, int degree, int span = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(small_rational(rng, span, 1));
  c.push_back(nonzero_rational(rng, span, 1));
  return RationalPoly(c);
}

// Product of low-degree factors, some repeated, so critical points of higher
// multiplicity and rational critical values show up often.
inline RationalPoly structured(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> root(-3, 3);
  RationalPoly p = RationalPoly::constant(nonzero_rational(rng, 3, 1));
  while (p.degree() < 1 || (p.degree() < max_degree && rng() % 3 != 0)) {
    const int room = max_degree - p.degree();
    if (room <= 0) break;
    const unsigned mult = 1 + static_cast<unsigned>(rng() % std::min(3, room));
    RationalPoly factor({Rational(-root(rng)), Rational(1)});
    p *= lipclass::pow(factor, mult);
  }
  if (rng() % 2 == 0) p += RationalPoly::constant(small_rational(rng, 4, 1));
  return p;
}

inline RationalPoly any_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  return rng() % 2 == 0 ? dense(rng, deg(rng)) : structured(rng, max_degree);
}

// c * f((t - b) / a)
inline RationalPoly affine_conjugate(const RationalPoly& f, const Rational& a, const Rational& b, const Rational& c) {
  const RationalPoly inner({Rational(-b / a), Rational(1 / a)});
  return c * f.compose(inner);
}

inline lipclass::Beta beta(std::mt19937_64& rng) {
  static const long table[][2] = {{2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 2}, {5, 3}, {4, 1}, {5, 4}};
  const auto& b = table[rng() % std::size(table)];
  return lipclass::Beta(b[0], b[1]);
}

// Random F with m in [0, max_m]; the X-multiplicity e is in [0, 2].
inline lipclass::QuasiHomogPoly quasihomog(std::mt19937_64& rng, const lipclass::Beta& b, int max_m = 2) {
  const long m = static_cast<long>(rng() % static_cast<unsigned>(max_m + 1));
  const long e = static_cast<long>(rng() % 3);
  const long d = std::max(1L, b.r * m + e);
  std::vector<Rational> c;
  for (long k = 0; k < m; ++k) c.push_back(small_rational(rng, 6, 1));
  c.push_back(nonzero_rational(rng, 6, 1));
  return lipclass::QuasiHomogPoly(b, d, c);
}

// κ F(aX, bY); quasihomogeneous of the same degree.
inline lipclass::QuasiHomogPoly rescaled(const lipclass::QuasiHomogPoly& F, const Rational& kappa, const Rational& a,
                                         const Rational& b) {
  std::vector<Rational> c = F.coeffs();
  for (long k = 0; k <= F.m(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    c[i] *= kappa * lipclass::pow(a, static_cast<unsigned long>(F.degree() - F.beta().r * k)) *
            lipclass::pow(b, static_cast<unsigned long>(F.beta().s * k));
  }
  return lipclass::QuasiHomogPoly(F.beta(), F.degree(), c);
}

}  // namespace gen
