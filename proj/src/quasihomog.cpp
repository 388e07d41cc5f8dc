#include "lipclass/quasihomog.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "lipclass/errors.hpp"

namespace lipclass {

Beta::Beta(long r_, long s_) : r(r_), s(s_) {
  if (!(r > s && s > 0)) throw DomainError("beta = r/s needs r > s > 0");
  if (std::gcd(r, s) != 1) throw DomainError("beta = r/s needs gcd(r, s) = 1");
}

QuasiHomogPoly::QuasiHomogPoly(Beta beta, long d, std::vector<Rational> coeffs)
    : beta_(beta), d_(d), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("zero polynomial is not admissible");
  if (d_ < 1) throw DomainError("quasihomogeneous degree must be at least 1");
  if (d_ - beta_.r * m() < 0) throw DomainError("coefficient index exceeds floor(d / r)");
}

Rational QuasiHomogPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (long k = 0; k <= m(); ++k) {
    const Rational& a = coeffs_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    acc += a * pow(x, static_cast<unsigned long>(d_ - beta_.r * k)) * pow(y, static_cast<unsigned long>(beta_.s * k));
  }
  return acc;
}

long double QuasiHomogPoly::eval(long double x, long double y) const {
  long double acc = 0;
  for (long k = 0; k <= m(); ++k) {
    const Rational& a = coeffs_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    acc += to_long_double(a) * std::pow(x, static_cast<long double>(d_ - beta_.r * k)) *
           std::pow(y, static_cast<long double>(beta_.s * k));
  }
  return acc;
}

std::vector<Monomial> QuasiHomogPoly::terms() const {
  std::vector<Monomial> out;
  for (long k = m(); k >= 0; --k) {
    const Rational& a = coeffs_[static_cast<std::size_t>(k)];
    if (a != 0) out.push_back({a, d_ - beta_.r * k, beta_.s * k});
  }
  return out;
}

std::string QuasiHomogPoly::to_string() const {
  std::string out;
  for (const auto& t : terms()) {
    Rational c = t.coefficient;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string body;
    if (t.x_exp > 0) body += t.x_exp == 1 ? "X" : "X^" + std::to_string(t.x_exp);
    if (t.y_exp > 0) {
      if (!body.empty()) body += "*";
      body += t.y_exp == 1 ? "Y" : "Y^" + std::to_string(t.y_exp);
    }
    if (body.empty())
      out += c.get_str();
    else if (c == 1)
      out += body;
    else
      out += c.get_str() + "*" + body;
  }
  return out;
}

QuasiHomogPoly from_monomials(const std::vector<Monomial>& terms, const Beta& beta) {
  std::map<long, Rational> by_k;
  long d = -1;
  for (const auto& t : terms) {
    if (t.x_exp < 0 || t.y_exp < 0) throw DomainError("negative exponent");
    if (t.coefficient == 0) continue;
    if (t.y_exp % beta.s != 0) {
      throw DomainError("not quasihomogeneous for beta = " + beta.to_string() + ": Y exponent " +
                        std::to_string(t.y_exp) + " is not a multiple of " + std::to_string(beta.s));
    }
    const long k = t.y_exp / beta.s;
    const long td = t.x_exp + beta.r * k;  // s*i + r*j = s*d
    if (d >= 0 && td != d) {
      throw DomainError("not quasihomogeneous for beta = " + beta.to_string() + ": mixed degrees " +
                        std::to_string(d) + " and " + std::to_string(td));
    }
    d = td;
    by_k[k] += t.coefficient;
  }
  if (d < 0) throw DomainError("zero polynomial is not admissible");
  std::vector<Rational> coeffs(static_cast<std::size_t>(by_k.rbegin()->first + 1));
  for (const auto& [k, a] : by_k) coeffs[static_cast<std::size_t>(k)] = a;
  return QuasiHomogPoly(beta, d, std::move(coeffs));
}

HeightFunctions height_functions(const QuasiHomogPoly& F) {
  const long s = F.beta().s;
  const long r = F.beta().r;
  std::vector<Rational> plus(static_cast<std::size_t>(s * F.m() + 1));
  std::vector<Rational> minus(plus.size());
  for (long k = 0; k <= F.m(); ++k) {
    const Rational& a = F.coeffs()[static_cast<std::size_t>(k)];
    const auto idx = static_cast<std::size_t>(s * k);
    plus[idx] = a;
    minus[idx] = (F.degree() - r * k) % 2 == 0 ? a : Rational(-a);
  }
  return {RationalPoly(std::move(plus)), RationalPoly(std::move(minus))};
}

long x_multiplicity(const QuasiHomogPoly& F) { return F.degree() - F.beta().r * F.m(); }

namespace {

bool has_real_root(const RationalPoly& p) {
  if (p.is_constant()) return p.is_zero();
  const Rational b = cauchy_bound(p);
  return sturm_count(p, RationalInterval(-b, b)) > 0;
}

}  // namespace

HalfPlaneZeros halfplane_zeros(const QuasiHomogPoly& F) {
  const HeightFunctions h = height_functions(F);
  return {has_real_root(h.plus), has_real_root(h.minus)};
}

}  // namespace lipclass
