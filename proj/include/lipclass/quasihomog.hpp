#pragma once

#include <string>
#include <vector>

#include "lipclass/poly.hpp"
#include "lipclass/rational.hpp"

namespace lipclass {

/// Weight β = r/s with r > s > 0 coprime.
struct Beta {
  long r;
  long s;

  Beta(long r_, long s_);
  Rational value() const { return make_rational(r, s); }
  std::string to_string() const { return std::to_string(r) + "/" + std::to_string(s); }
  friend bool operator==(const Beta&, const Beta&) = default;
};

struct Monomial {
  Rational coefficient;
  long x_exp;
  long y_exp;
};

/// F(X, Y) = sum_k a_k X^(d - r k) Y^(s k), a_m != 0.
class QuasiHomogPoly {
 public:
  QuasiHomogPoly(Beta beta, long d, std::vector<Rational> coeffs);

  const Beta& beta() const { return beta_; }
  long degree() const { return d_; }
  long m() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_monomial() const { return m() == 0; }  // a X^d

  Rational operator()(const Rational& x, const Rational& y) const;
  long double eval(long double x, long double y) const;

  std::vector<Monomial> terms() const;
  std::string to_string() const;

 private:
  Beta beta_;
  long d_;
  std::vector<Rational> coeffs_;
};

QuasiHomogPoly from_monomials(const std::vector<Monomial>& terms, const Beta& beta);

struct HeightFunctions {
  RationalPoly plus;   // F(1, t)
  RationalPoly minus;  // F(-1, t)
};

HeightFunctions height_functions(const QuasiHomogPoly& F);

/// Multiplicity of X as a factor of F: e = d - r m.
long x_multiplicity(const QuasiHomogPoly& F);

struct HalfPlaneZeros {
  bool right;
  bool left;
};

HalfPlaneZeros halfplane_zeros(const QuasiHomogPoly& F);

}  // namespace lipclass
