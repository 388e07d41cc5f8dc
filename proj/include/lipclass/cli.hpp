#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lipclass/poly.hpp"
#include "lipclass/quasihomog.hpp"

namespace lipclass {

struct Term {
  Rational coefficient;
  long x_exp = 0;
  long y_exp = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Parsed polynomial; like terms are collected and zero terms dropped.
struct PolynomialExpr {
  std::string source;
  int vars = 2;
  std::vector<Term> terms;  // descending x exponent, then ascending y exponent

  RationalPoly univariate() const;
  std::vector<Monomial> monomials() const;
};

/// terms joined by + or -; term = [rational][*]X[^n][*]Y[^n]. Variables are
/// case-insensitive; a univariate input (vars = 1) uses t or x. Throws ParseError.
PolynomialExpr parse_polynomial(const std::string& text, int vars);

std::string to_string(const PolynomialExpr& e);

/// Command-line entry point; `args` excludes the program name.
/// Exit codes: 0 equivalent, 1 not equivalent, 2 undetermined, 3 usage or
/// input error, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lipclass
