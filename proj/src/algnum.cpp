#include "lipclass/algnum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <utility>

#include "lipclass/errors.hpp"

namespace lipclass {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void divide_exact(IntPoly& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Integer ipow(const Integer& base, long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// lc(b)^(deg a - deg b + 1) * a = q * b + r
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = deg(b);
  const int delta = deg(a) - db;
  const Integer& lb = b.back();
  int steps = 0;
  while (!a.empty() && deg(a) >= db) {
    const Integer la = a.back();
    const int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
    ++steps;
  }
  const Integer scale = ipow(lb, delta + 1 - steps);
  for (auto& c : a) c *= scale;
  return a;
}

}  // namespace

Integer integer_resultant(std::vector<Integer> a, std::vector<Integer> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  int s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -1;
  }
  if (deg(b) == 0) return s * ipow(b[0], deg(a));

  const Integer ca = content(a);
  const Integer cb = content(b);
  divide_exact(a, ca);
  divide_exact(b, cb);
  const Integer t = ipow(ca, deg(b)) * ipow(cb, deg(a));
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    divide_exact(r, g * ipow(h, delta));
    b = std::move(r);
    g = a.back();
    // h <- h^(1 - delta) * g^delta
    if (delta > 0) h = exact_div(ipow(g, delta), ipow(h, delta - 1));
    if (deg(b) == 0) break;
  }
  const int da = deg(a);
  const Integer last = exact_div(ipow(b[0], da), ipow(h, da - 1));
  return s * t * last;
}

Rational resultant(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const RationalPoly pa = a.positive_primitive();
  const RationalPoly pb = b.positive_primitive();
  // a = ka * pa, b = kb * pb
  const Rational ka = a.leading() / pa.leading();
  const Rational kb = b.leading() / pb.leading();
  const Integer r = integer_resultant(pa.integer_coeffs(), pb.integer_coeffs());
  return pow(ka, static_cast<unsigned long>(b.degree())) * pow(kb, static_cast<unsigned long>(a.degree())) *
         Rational(r);
}

namespace {

// Interpolates z -> Res_x(a(x), second(z)(x)) from degree_bound + 1 samples.
RationalPoly resultant_in_z(const RationalPoly& a, const std::function<RationalPoly(const Rational&)>& second,
                            int degree_bound) {
  const int n = degree_bound + 1;
  std::vector<Rational> zs;
  std::vector<Rational> table;
  zs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; static_cast<int>(zs.size()) < n; ++i) {
    zs.emplace_back(i % 2 == 0 ? i / 2 : -(i + 1) / 2);
  }
  for (const auto& z : zs) table.push_back(resultant(a, second(z)));
  // Newton divided differences, in place.
  for (int level = 1; level < n; ++level) {
    for (int i = n - 1; i >= level; --i) {
      const auto iu = static_cast<std::size_t>(i);
      table[iu] = (table[iu] - table[iu - 1]) / (zs[iu] - zs[iu - static_cast<std::size_t>(level)]);
    }
  }
  RationalPoly out = RationalPoly::constant(table.back());
  for (int i = n - 2; i >= 0; --i) {
    const auto iu = static_cast<std::size_t>(i);
    out = out * RationalPoly({-zs[iu], Rational(1)}) + RationalPoly::constant(table[iu]);
  }
  return out;
}

struct Normalised {
  RationalPoly poly;  // square-free, primitive
  SturmSequence sturm;
};

Normalised normalise(const RationalPoly& p) {
  SturmSequence s(p);
  RationalPoly q = s.chain().front().primitive();
  return {std::move(q), std::move(s)};
}

// True when q provably has no rational root: a root p/r of q reduces to a root
// modulo any prime that does not divide lc(q), since r | lc(q).
bool no_rational_roots(const RationalPoly& q) {
  static constexpr unsigned long primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                                             151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
  const std::vector<Integer> c = q.integer_coeffs();
  for (unsigned long ell : primes) {
    if (mpz_fdiv_ui(c.back().get_mpz_t(), ell) == 0) continue;
    std::vector<unsigned long> m;
    for (const auto& x : c) m.push_back(mpz_fdiv_ui(x.get_mpz_t(), ell));
    bool has_root = false;
    for (unsigned long x = 0; x < ell && !has_root; ++x) {
      unsigned long acc = 0;
      for (auto it = m.rbegin(); it != m.rend(); ++it) acc = (acc * x + *it) % ell;
      has_root = acc == 0;
    }
    if (!has_root) return true;
  }
  return false;
}

int closed_count(const Normalised& n, const RationalInterval& I) {
  return n.sturm.count(I.lo, I.hi) + (n.poly.sign_at(I.lo) == 0 ? 1 : 0);
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& q)
    : defining_(RationalPoly({-q, Rational(1)}).primitive()), interval_(RationalInterval::point(q)) {}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw PreconditionError("rational_value on an irrational algebraic number");
  return interval_.lo;
}

struct AlgebraicAccess {
  static AlgebraicNumber make(RationalPoly defining, RationalInterval interval) {
    return AlgebraicNumber(std::move(defining), std::move(interval));
  }
};

namespace {

AlgebraicNumber finish_normalised(const Normalised& n, Rational lo, Rational hi);

}  // namespace

AlgebraicNumber make_algebraic(const RationalPoly& p, const RationalInterval& I) {
  if (p.is_zero()) throw ConstructionError("make_algebraic: zero polynomial");
  if (p.is_constant()) throw ConstructionError("make_algebraic: constant polynomial has no roots");
  const Normalised n = normalise(p);
  const int count = closed_count(n, I);
  if (count != 1) {
    throw ConstructionError("make_algebraic: interval [" + I.lo.get_str() + ", " + I.hi.get_str() + "] holds " +
                            std::to_string(count) + " roots of " + lipclass::to_string(n.poly));
  }
  if (n.poly.sign_at(I.lo) == 0) return AlgebraicNumber(I.lo);
  return finish_normalised(n, I.lo, I.hi);
}

namespace {

// Root of n.poly is the only one in (lo, hi] and lo is not a root.
AlgebraicNumber finish_normalised(const Normalised& n, Rational lo, Rational hi) {
  const RationalPoly& q = n.poly;
  if (q.sign_at(hi) == 0) return AlgebraicNumber(hi);
  if (q.degree() == 1) return AlgebraicNumber(Rational(-q.coeffs()[0] / q.coeffs()[1]));
  const Rational quick = simplest_rational_between(lo, hi);
  if (q.sign_at(quick) == 0) return AlgebraicNumber(quick);
  if (no_rational_roots(q)) return AlgebraicAccess::make(q, RationalInterval(lo, hi));
  int lo_sign = q.sign_at(lo);
  // A rational root p/r has r | lc(q); two such rationals differ by at least
  // 1/lc^2, so at most one of them fits in an interval narrower than that.
  const Integer lead = abs(q.leading().get_num());
  const Rational limit(Integer(1), lead * lead);
  while (hi - lo >= limit) {
    const Rational mid = (lo + hi) / 2;
    const int s = q.sign_at(mid);
    if (s == 0) return AlgebraicNumber(mid);
    if (s == lo_sign)
      lo = mid;
    else
      hi = mid;
  }
  const Rational candidate = simplest_rational_between(lo, hi);
  if (q.sign_at(candidate) == 0) return AlgebraicNumber(candidate);
  return AlgebraicAccess::make(q, RationalInterval(lo, hi));
}

}  // namespace

int AlgebraicNumber::sign() const {
  if (is_rational()) return lipclass::sign(interval_.lo);
  AlgebraicNumber a = *this;
  while (true) {
    if (a.interval_.lo >= 0) return 1;
    if (a.interval_.hi <= 0) return -1;
    a = a.bisected();
    if (a.is_rational()) return lipclass::sign(a.interval_.lo);
  }
}

AlgebraicNumber AlgebraicNumber::bisected() const {
  if (is_rational()) return *this;
  const Rational mid = interval_.midpoint();
  const int s = defining_.sign_at(mid);
  if (s == 0) return AlgebraicNumber(mid);
  if (s == defining_.sign_at(interval_.lo)) return AlgebraicNumber(defining_, RationalInterval(mid, interval_.hi));
  return AlgebraicNumber(defining_, RationalInterval(interval_.lo, mid));
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& width) const {
  if (width <= 0) throw DomainError("refinement width must be positive");
  AlgebraicNumber a = *this;
  while (a.interval_.width() > width) a = a.bisected();
  return a;
}

RationalInterval AlgebraicNumber::enclosure(unsigned bits) const {
  if (is_rational()) return interval_;
  AlgebraicNumber a = *this;
  Rational scale = 1;
  mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), bits);
  while (true) {
    const auto& iv = a.interval_;
    const bool separated = iv.lo > 0 || iv.hi < 0;
    if (separated && iv.width() * scale <= std::min(abs(iv.lo), abs(iv.hi))) return iv;
    a = a.bisected();
    if (a.is_rational()) return a.interval_;
  }
}

double AlgebraicNumber::approx() const { return enclosure(64).midpoint().get_d(); }

long double AlgebraicNumber::approx_ld() const { return to_long_double(enclosure(80).midpoint()); }

long double AlgebraicNumber::approx_pow(long num, long den) const {
  const Rational mid = enclosure(160).midpoint();
  mpfr_t x;
  mpfr_t e;
  mpfr_inits2(256, x, e, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(x, mid.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(x, x, MPFR_RNDN);
  mpfr_set_si(e, num, MPFR_RNDN);
  mpfr_div_si(e, e, den, MPFR_RNDN);
  mpfr_pow(x, x, e, MPFR_RNDN);
  const long double out = mpfr_get_ld(x, MPFR_RNDN);
  mpfr_clears(x, e, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return interval_.lo.get_str();
  return "root of " + lipclass::to_string(defining_) + " in [" + interval_.lo.get_str() + ", " +
         interval_.hi.get_str() + "]";
}

int sign_at(const RationalPoly& q, const AlgebraicNumber& alpha) {
  if (q.is_zero()) return 0;
  if (alpha.is_rational()) return q.sign_at(alpha.rational_value());
  const RationalPoly g = gcd(alpha.defining(), q);
  if (!g.is_constant() && SturmSequence(g).count(alpha.interval().lo, alpha.interval().hi) == 1) return 0;
  AlgebraicNumber a = alpha;
  while (true) {
    if (a.is_rational()) return q.sign_at(a.rational_value());
    const RationalInterval enc = interval_eval(q, a.interval());
    if (enc.lo > 0) return 1;
    if (enc.hi < 0) return -1;
    a = a.bisected();
  }
}

namespace {

std::strong_ordering order_of(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_rational(const AlgebraicNumber& a, const Rational& r) {
  AlgebraicNumber x = a;
  while (true) {
    if (x.is_rational()) return order_of(x.rational_value(), r);
    if (r <= x.interval().lo) return std::strong_ordering::greater;
    if (r >= x.interval().hi) return std::strong_ordering::less;
    if (x.defining().sign_at(r) == 0) return std::strong_ordering::equal;
    x = x.bisected();
  }
}

}  // namespace

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return order_of(a.rational_value(), b.rational_value());
  if (b.is_rational()) return compare_rational(a, b.rational_value());
  if (a.is_rational()) return 0 <=> compare_rational(b, a.rational_value());
  AlgebraicNumber x = a;
  AlgebraicNumber y = b;
  bool equality_checked = false;
  while (true) {
    if (x.is_rational() || y.is_rational()) return compare(x, y);
    const auto& ix = x.interval();
    const auto& iy = y.interval();
    if (ix.hi <= iy.lo) return std::strong_ordering::less;
    if (iy.hi <= ix.lo) return std::strong_ordering::greater;
    if (!equality_checked) {
      equality_checked = true;
      const RationalPoly g = gcd(x.defining(), y.defining());
      if (!g.is_constant()) {
        const Rational lo = std::max(ix.lo, iy.lo);
        const Rational hi = std::min(ix.hi, iy.hi);
        if (SturmSequence(g).count(lo, hi) >= 1) return std::strong_ordering::equal;
      }
    }
    x = x.bisected();
    y = y.bisected();
  }
}

namespace {

// Selects the root of `result` that lies in the enclosure produced from
// progressively refined operands.
AlgebraicNumber locate(const RationalPoly& result, AlgebraicNumber a, AlgebraicNumber b,
                       const std::function<RationalInterval(const RationalInterval&, const RationalInterval&)>& enclose) {
  if (result.is_zero()) throw InternalError("resultant degenerated to the zero polynomial");
  const Normalised n = normalise(result);
  for (int iteration = 0; iteration < 100000; ++iteration) {
    const RationalInterval I = enclose(a.interval(), b.interval());
    const int count = closed_count(n, I);
    if (count == 1) {
      if (n.poly.sign_at(I.lo) == 0) return AlgebraicNumber(I.lo);
      return finish_normalised(n, I.lo, I.hi);
    }
    if (count == 0) throw InternalError("enclosure lost the root of a resultant");
    a = a.bisected();
    b = b.bisected();
  }
  throw InternalError("root selection did not converge");
}

AlgebraicNumber separated_from_zero(const AlgebraicNumber& a) {
  AlgebraicNumber x = a;
  while (!x.is_rational() && x.interval().lo <= 0 && x.interval().hi >= 0) x = x.bisected();
  return x;
}

AlgebraicNumber negate(const AlgebraicNumber& a) {
  if (a.is_rational()) return AlgebraicNumber(Rational(-a.rational_value()));
  return AlgebraicAccess::make(a.defining().reflected().primitive(),
                               RationalInterval(-a.interval().hi, -a.interval().lo));
}

AlgebraicNumber invert(const AlgebraicNumber& a) {
  if (a.sign() == 0) throw DomainError("inverse of zero");
  const AlgebraicNumber x = separated_from_zero(a);
  if (x.is_rational()) return AlgebraicNumber(Rational(1 / x.rational_value()));
  return AlgebraicAccess::make(x.defining().without_zero_root().reversed().primitive(),
                               RationalInterval(1 / x.interval().hi, 1 / x.interval().lo));
}

AlgebraicNumber shift(const AlgebraicNumber& a, const Rational& r) {
  if (r == 0) return a;
  const RationalPoly moved = a.defining().compose(RationalPoly({-r, Rational(1)}));
  return AlgebraicAccess::make(moved.primitive(), RationalInterval(a.interval().lo + r, a.interval().hi + r));
}

AlgebraicNumber scale(const AlgebraicNumber& a, const Rational& r) {
  if (r == 0) return AlgebraicNumber(0);
  if (r == 1) return a;
  const RationalPoly scaled = a.defining().compose(RationalPoly({Rational(0), Rational(1 / r)}));
  const Rational lo = a.interval().lo * r;
  const Rational hi = a.interval().hi * r;
  return AlgebraicAccess::make(scaled.primitive(), r > 0 ? RationalInterval(lo, hi) : RationalInterval(hi, lo));
}

AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(Rational(a.rational_value() + b.rational_value()));
  if (b.is_rational()) return shift(a, b.rational_value());
  if (a.is_rational()) return shift(b, a.rational_value());
  const RationalPoly& A = a.defining();
  const RationalPoly& B = b.defining();
  // roots z = x + y with A(x) = 0 and B(y) = 0: Res_x(A(x), B(z - x))
  const RationalPoly R = resultant_in_z(
      A, [&B](const Rational& z) { return B.compose(RationalPoly({z, Rational(-1)})); }, A.degree() * B.degree());
  return locate(R, a, b, [](const RationalInterval& x, const RationalInterval& y) { return x + y; });
}

AlgebraicNumber multiply(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicNumber(Rational(a.rational_value() * b.rational_value()));
  if (b.is_rational()) return scale(a, b.rational_value());
  if (a.is_rational()) return scale(b, a.rational_value());
  // Both irrational, hence nonzero: drop any root at 0 from the defining data.
  const RationalPoly A = a.defining().without_zero_root();
  const RationalPoly B = b.defining().without_zero_root();
  const int n = B.degree();
  // roots z = x * y: Res_x(A(x), x^n B(z / x))
  const RationalPoly R = resultant_in_z(
      A,
      [&B, n](const Rational& z) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
        Rational zpow = 1;
        for (int j = 0; j <= n; ++j) {
          coeffs[static_cast<std::size_t>(n - j)] = B.coeffs()[static_cast<std::size_t>(j)] * zpow;
          zpow *= z;
        }
        return RationalPoly(std::move(coeffs));
      },
      A.degree() * B.degree());
  return locate(R, a, b, [](const RationalInterval& x, const RationalInterval& y) { return x * y; });
}

}  // namespace

AlgebraicNumber arith(ArithOp op, const AlgebraicNumber& lhs, const std::optional<AlgebraicNumber>& rhs) {
  switch (op) {
    case ArithOp::Neg:
      return negate(lhs);
    case ArithOp::Inv:
      return invert(lhs);
    case ArithOp::Add:
      if (!rhs) throw PreconditionError("ADD needs two operands");
      return add(lhs, *rhs);
    case ArithOp::Mul:
      if (!rhs) throw PreconditionError("MUL needs two operands");
      return multiply(lhs, *rhs);
  }
  throw InternalError("unknown arithmetic operation");
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) { return add(a, b); }
AlgebraicNumber operator-(const AlgebraicNumber& a) { return negate(a); }
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return add(a, negate(b)); }
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) { return multiply(a, b); }
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return multiply(a, invert(b)); }
AlgebraicNumber inverse(const AlgebraicNumber& a) { return invert(a); }

AlgebraicNumber eval_at(const RationalPoly& f, const AlgebraicNumber& alpha) {
  if (alpha.is_rational()) return AlgebraicNumber(f(alpha.rational_value()));
  const RationalPoly reduced = divmod(f, alpha.defining()).remainder;
  if (reduced.is_constant()) return AlgebraicNumber(reduced.coeff(0));
  if (reduced.degree() == 1) return shift(scale(alpha, reduced.coeff(1)), reduced.coeff(0));
  const RationalPoly& A = alpha.defining();
  // roots z = f(x) with A(x) = 0: Res_x(A(x), z - f(x))
  const RationalPoly R = resultant_in_z(
      A, [&reduced](const Rational& z) { return RationalPoly::constant(z) - reduced; }, A.degree());
  return locate(R, alpha, AlgebraicNumber(0),
                [&reduced](const RationalInterval& x, const RationalInterval&) { return interval_eval(reduced, x); });
}

AlgebraicNumber pow(const AlgebraicNumber& a, unsigned exponent) {
  if (exponent == 0) return AlgebraicNumber(1);
  if (a.is_rational()) return AlgebraicNumber(lipclass::pow(a.rational_value(), static_cast<unsigned long>(exponent)));
  return eval_at(RationalPoly::monomial(1, exponent), a);
}

}  // namespace lipclass
