#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "lipclass/cli.hpp"
#include "lipclass/errors.hpp"

namespace lipclass {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int vars) : s_(text), vars_(vars) {}

  std::vector<Term> parse() {
    std::vector<Term> out;
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++i_;
    }
    for (;;) {
      Term t = term();
      if (sign < 0) t.coefficient = -t.coefficient;
      out.push_back(std::move(t));
      skip();
      if (i_ == s_.size()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      sign = peek() == '-' ? -1 : 1;
      ++i_;
    }
    return out;
  }

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  std::string digits() {
    const std::size_t start = i_;
    while (digit(peek())) ++i_;
    return s_.substr(start, i_ - start);
  }

  Rational number() {
    const std::size_t start = i_;
    std::string text = digits();
    if (peek() == '.') {
      ++i_;
      const std::string frac = digits();
      if (text.empty() && frac.empty()) fail("malformed number");
      text += "." + frac;
    } else if (peek() == '/') {
      ++i_;
      if (!digit(peek())) fail("expected a denominator");
      const std::string den = digits();
      if (Integer(den) == 0) throw ParseError("zero denominator", start);
      text += "/" + den;
    }
    return parse_rational(text);
  }

  long exponent() {
    skip();
    if (peek() == '-') fail("negative exponent");
    if (!digit(peek())) fail("expected an exponent");
    const std::size_t start = i_;
    const std::string d = digits();
    if (peek() == '.' || peek() == '/') fail("fractional exponent");
    if (d.size() > 6) throw ParseError("exponent too large", start);
    return std::stol(d);
  }

  void variable(Term& t) {
    const char v = static_cast<char>(std::tolower(static_cast<unsigned char>(peek())));
    const std::size_t at = i_;
    ++i_;
    if (vars_ == 1) {
      if (v != 't' && v != 'x') throw ParseError(std::string("variable '") + s_[at] + "' in a univariate polynomial", at);
      if (uni_name_ && *uni_name_ != v) throw ParseError("mixed variable names", at);
      uni_name_ = v;
    } else if (v != 'x' && v != 'y') {
      throw ParseError(std::string("unknown variable '") + s_[at] + "' (expected X or Y)", at);
    }
    skip();
    long e = 1;
    if (peek() == '^') {
      ++i_;
      e = exponent();
    }
    (v == 'y' ? t.y_exp : t.x_exp) += e;
  }

  Term term() {
    Term t{Rational(1)};
    bool any = false;
    for (;;) {
      skip();
      const char c = peek();
      if (digit(c) || c == '.') {
        t.coefficient *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        variable(t);
      } else {
        if (!any) fail(c == '\0' ? "unexpected end of input" : std::string("expected a term near '") + c + "'");
        if (c == '*') fail("dangling '*'");
        break;
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++i_;
        skip();
        if (!digit(peek()) && peek() != '.' && !std::isalpha(static_cast<unsigned char>(peek())))
          fail("expected a factor after '*'");
      } else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        break;
      }
    }
    return t;
  }

  const std::string& s_;
  int vars_;
  std::size_t i_ = 0;
  std::optional<char> uni_name_;
};

}  // namespace

PolynomialExpr parse_polynomial(const std::string& text, int vars) {
  if (vars != 1 && vars != 2) throw DomainError("parse_polynomial: vars must be 1 or 2");
  std::map<std::pair<long, long>, Rational> collected;
  for (const Term& t : Parser(text, vars).parse()) collected[{t.x_exp, t.y_exp}] += t.coefficient;
  PolynomialExpr e;
  e.source = text;
  e.vars = vars;
  for (const auto& [key, c] : collected)
    if (c != 0) e.terms.push_back({c, key.first, key.second});
  std::sort(e.terms.begin(), e.terms.end(), [](const Term& a, const Term& b) {
    return a.x_exp != b.x_exp ? a.x_exp > b.x_exp : a.y_exp < b.y_exp;
  });
  return e;
}

RationalPoly PolynomialExpr::univariate() const {
  std::vector<Rational> c;
  for (const Term& t : terms) {
    if (t.y_exp != 0) throw DomainError("polynomial is not univariate");
    const auto k = static_cast<std::size_t>(t.x_exp);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += t.coefficient;
  }
  return RationalPoly(std::move(c));
}

std::vector<Monomial> PolynomialExpr::monomials() const {
  std::vector<Monomial> out;
  for (const Term& t : terms) out.push_back({t.coefficient, t.x_exp, t.y_exp});
  return out;
}

std::string to_string(const PolynomialExpr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (const Term& t : e.terms) {
    const bool neg = t.coefficient < 0;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const Rational c = abs(t.coefficient);
    std::string body;
    auto factor = [&](const char* name, long k) {
      if (k == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (k > 1) body += "^" + std::to_string(k);
    };
    factor(e.vars == 1 ? "t" : "X", t.x_exp);
    factor("Y", t.y_exp);
    if (body.empty())
      out += c.get_str();
    else
      out += c == 1 ? body : c.get_str() + "*" + body;
  }
  return out;
}

}  // namespace lipclass
