#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lipclass/rational.hpp"

namespace lipclass {

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs()[i]` is the coefficient of t^i. The stored list never ends in a
/// zero, so the zero polynomial is the empty list and has degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t power);
  static RationalPoly variable() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  RationalPoly derivative() const;
  RationalPoly compose(const RationalPoly& inner) const;
  // p(-t)
  RationalPoly reflected() const;
  // t^deg * p(1/t)
  RationalPoly reversed() const;
  // p(t) / t^k for the largest k with t^k | p
  RationalPoly without_zero_root() const;
  RationalPoly monic() const;
  // Positive rational multiple with coprime integer coefficients. Preserves
  // the sign of every value, so it is safe inside Sturm sequences.
  RationalPoly positive_primitive() const;
  // Coprime integer coefficients with positive leading coefficient.
  RationalPoly primitive() const;
  std::vector<Integer> integer_coeffs() const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& scalar);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

RationalPoly pow(const RationalPoly& p, unsigned exponent);

struct DivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

/// Euclidean division; throws DomainError when the divisor is zero.
DivMod divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

struct SquarefreeFactor {
  RationalPoly factor;  // monic, square-free
  int multiplicity;
};

struct SquarefreeDecomposition {
  Rational leading;
  std::vector<SquarefreeFactor> factors;  // strictly increasing multiplicity
};

/// Yun's algorithm: p = leading * prod factor_i^{multiplicity_i}.
SquarefreeDecomposition squarefree_decomposition(const RationalPoly& p);

/// p / gcd(p, p'), made monic.
RationalPoly squarefree_part(const RationalPoly& p);

struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational lo_, Rational hi_);
  static RationalInterval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RationalInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval hull(const RationalInterval& a, const RationalInterval& b);

/// Sturm sequence of the square-free part of a polynomial, content-normalised
/// at every step. Counting follows the (lo, hi] convention and tolerates
/// endpoints that are roots.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPoly& p);

  const std::vector<RationalPoly>& chain() const { return chain_; }
  int variations_at(const Rational& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;
  // Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  int count_all() const;

 private:
  std::vector<RationalPoly> chain_;
};

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);

/// Number of distinct real roots of p in (I.lo, I.hi].
int sturm_count(const RationalPoly& p, const RationalInterval& I);

/// 1 + max |c_i / c_lead|; strict upper bound on the magnitude of every root.
Rational cauchy_bound(const RationalPoly& p);

struct IsolatedRoot {
  RationalInterval interval;  // degenerate exactly when the root is that rational
  int multiplicity;
};

/// Disjoint ascending isolating intervals for the distinct real roots of p.
/// A non-degenerate interval [lo, hi] holds its root strictly inside and the
/// square-free part changes sign between lo and hi.
std::vector<IsolatedRoot> isolate_real_roots(const RationalPoly& p);

/// Horner-form interval enclosure of p over I.
RationalInterval interval_eval(const RationalPoly& p, const RationalInterval& I);

/// Double-precision mirror of a polynomial for numerical work.
class FloatPoly {
 public:
  FloatPoly() = default;
  explicit FloatPoly(const RationalPoly& p);

  long double operator()(long double x) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<long double>& coeffs() const { return coeffs_; }

 private:
  std::vector<long double> coeffs_;
};

std::string to_string(const RationalPoly& p, char variable = 't');

}  // namespace lipclass
