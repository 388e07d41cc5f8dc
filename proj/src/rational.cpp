#include "lipclass/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace lipclass {

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

namespace {

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Simplest rational in [lo, hi] for 0 < lo <= hi, by continued fractions.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  const Integer fl = floor_of(lo);
  if (fl == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational lo_frac = lo - fl;
  const Rational hi_frac = hi - fl;
  const Rational inner = simplest_positive(1 / hi_frac, 1 / lo_frac);
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_between: lo > hi");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t int_end = digits(i);
  Rational value;
  if (int_end < text.size() && text[int_end] == '/') {
    if (int_end == i) throw std::invalid_argument("bad rational: " + text);
    const std::size_t den_end = digits(int_end + 1);
    if (den_end != text.size() || den_end == int_end + 1)
      throw std::invalid_argument("bad rational: " + text);
    Integer num(text.substr(i, int_end - i));
    Integer den(text.substr(int_end + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(num, den);
  } else if (int_end < text.size() && text[int_end] == '.') {
    const std::size_t frac_end = digits(int_end + 1);
    if (frac_end != text.size() || (int_end == i && frac_end == int_end + 1))
      throw std::invalid_argument("bad decimal: " + text);
    const std::string int_part = text.substr(i, int_end - i);
    const std::string frac_part = text.substr(int_end + 1);
    Integer num(int_part.empty() ? "0" : int_part);
    Integer scale = 1;
    for (char ch : frac_part) {
      num = num * 10 + (ch - '0');
      scale *= 10;
    }
    value = Rational(num, scale);
  } else {
    if (int_end != text.size() || int_end == i) throw std::invalid_argument("bad rational: " + text);
    value = Rational(Integer(text.substr(i)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long double to_long_double(const Rational& q) {
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  const long double out = mpfr_get_ld(x, MPFR_RNDN);
  mpfr_clear(x);
  return out;
}

}  // namespace lipclass
