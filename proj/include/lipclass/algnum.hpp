#pragma once

#include <compare>
#include <optional>
#include <string>

#include "lipclass/poly.hpp"
#include "lipclass/rational.hpp"

namespace lipclass {

/// Exact real algebraic number.
///
/// Stored as a square-free primitive integer polynomial together with an
/// isolating interval. Rationals always use the normal form (t - q, [q, q]);
/// every other value has a non-degenerate interval (lo, hi) with exactly one
/// root of the defining polynomial inside and opposite signs at lo and hi.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  AlgebraicNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(long q) : AlgebraicNumber(Rational(q)) {}  // NOLINT

  const RationalPoly& defining() const { return defining_; }
  const RationalInterval& interval() const { return interval_; }
  bool is_rational() const { return interval_.is_point(); }
  // Precondition: is_rational().
  const Rational& rational_value() const;

  int sign() const;
  // Same number with an isolating interval no wider than `width`.
  AlgebraicNumber refined(const Rational& width) const;
  // One bisection step.
  AlgebraicNumber bisected() const;
  // Enclosure with relative width below 2^-bits (or absolute, near zero).
  RationalInterval enclosure(unsigned bits) const;

  double approx() const;
  long double approx_ld() const;
  // |x|^(num/den) to ~long double precision via MPFR.
  long double approx_pow(long num, long den) const;

  // "81/16" for rationals, otherwise "root of <poly> in [lo, hi]".
  std::string to_string() const;

 private:
  friend struct AlgebraicAccess;
  AlgebraicNumber(RationalPoly defining, RationalInterval interval)
      : defining_(std::move(defining)), interval_(std::move(interval)) {}

  RationalPoly defining_;
  RationalInterval interval_;
};

/// Normalises (p, I) into an AlgebraicNumber. The square-free part of p must
/// have exactly one root in the closed interval I; otherwise ConstructionError.
AlgebraicNumber make_algebraic(const RationalPoly& p, const RationalInterval& I);

/// Sign of q(alpha), decided exactly.
int sign_at(const RationalPoly& q, const AlgebraicNumber& alpha);

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return compare(a, b);
}

enum class ArithOp { Add, Mul, Neg, Inv };

/// Field arithmetic through resultants. Neg and Inv ignore `rhs`; Add and Mul
/// require it. Inv of zero throws DomainError.
AlgebraicNumber arith(ArithOp op, const AlgebraicNumber& lhs,
                      const std::optional<AlgebraicNumber>& rhs = std::nullopt);

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber inverse(const AlgebraicNumber& a);

/// f(alpha) from the single resultant Res_x(A(x), z - f(x)).
AlgebraicNumber eval_at(const RationalPoly& f, const AlgebraicNumber& alpha);

AlgebraicNumber pow(const AlgebraicNumber& a, unsigned exponent);

/// Resultant of two univariate polynomials, computed by the subresultant PRS
/// over the integers after clearing denominators.
Rational resultant(const RationalPoly& a, const RationalPoly& b);

/// Subresultant PRS resultant on integer coefficient lists (low degree first).
Integer integer_resultant(std::vector<Integer> a, std::vector<Integer> b);

}  // namespace lipclass
