#include "lipclass/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "lipclass/errors.hpp"

namespace lipclass {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs)
    : RationalPoly(std::vector<Rational>(coeffs)) {}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return RationalPoly(std::move(coeffs));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

int RationalPoly::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return sign((*this)(x));
  // Integer Horner on d^n p(n/d), which has the sign of p(n/d).
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back().get_num();
  Integer dpow = 1;
  Integer term;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    term = coeffs_[i].get_num() * dpow;
    acc += term;
  }
  return sgn(acc);
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += RationalPoly::constant(*it);
  }
  return acc;
}

RationalPoly RationalPoly::reflected() const {
  std::vector<Rational> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::reversed() const {
  std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::without_zero_root() const {
  if (coeffs_.empty()) return {};
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return RationalPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

RationalPoly RationalPoly::monic() const {
  if (coeffs_.empty()) return {};
  return *this * Rational(1 / coeffs_.back());
}

RationalPoly RationalPoly::positive_primitive() const {
  if (coeffs_.empty()) return {};
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return *this * Rational(den_lcm, num_gcd);
}

RationalPoly RationalPoly::primitive() const {
  RationalPoly p = positive_primitive();
  if (!p.is_zero() && p.leading() < 0) p *= Rational(-1);
  return p;
}

std::vector<Integer> RationalPoly::integer_coeffs() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) throw InternalError("integer_coeffs on non-integral polynomial");
    out.push_back(c.get_num());
  }
  return out;
}

RationalPoly RationalPoly::operator-() const { return *this * Rational(-1); }

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& other) { return *this = *this * other; }

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RationalPoly pow(const RationalPoly& p, unsigned exponent) {
  RationalPoly result = RationalPoly::constant(1);
  RationalPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

DivMod divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lead = 1 / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly exact_quotient(const RationalPoly& a, const RationalPoly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw InternalError("exact_quotient: non-zero remainder");
  return std::move(qr.quotient);
}

namespace {

using IntCoeffs = std::vector<Integer>;

IntCoeffs to_integer(const RationalPoly& p) { return p.positive_primitive().integer_coeffs(); }

RationalPoly from_integer(const IntCoeffs& c) {
  std::vector<Rational> out(c.begin(), c.end());
  return RationalPoly(std::move(out));
}

void make_primitive(IntCoeffs& c) {
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Remainder of a by b up to a positive factor |lc(b)|^k, so signs survive.
IntCoeffs positive_prem(IntCoeffs a, const IntCoeffs& b) {
  const std::size_t db = b.size() - 1;
  const Integer lb = abs(b.back());
  const int sb = sgn(b.back());
  Integer la;
  while (a.size() > db && !a.empty()) {
    la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    if (sb < 0) la = -la;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Primitive remainder sequences: gcd via positive pseudo-remainders.
IntCoeffs integer_gcd(IntCoeffs x, IntCoeffs y) {
  while (!y.empty()) {
    IntCoeffs r = positive_prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return from_integer(integer_gcd(to_integer(a), to_integer(b))).monic();
}

SquarefreeDecomposition squarefree_decomposition(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.is_constant()) return out;
  const RationalPoly monic = p.monic();
  const RationalPoly dp = monic.derivative();
  const RationalPoly a0 = gcd(monic, dp);
  RationalPoly b = exact_quotient(monic, a0);
  RationalPoly c = exact_quotient(dp, a0);
  RationalPoly d = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    RationalPoly a = gcd(b, d);
    RationalPoly next_b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - next_b.derivative();
    if (!a.is_constant()) out.factors.push_back({a.monic(), i});
    b = std::move(next_b);
    ++i;
  }
  return out;
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.is_constant()) return RationalPoly::constant(1);
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

RationalInterval::RationalInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw DomainError("interval with lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  if (a.is_point() && b.is_point()) return RationalInterval::point(a.lo * b.lo);
  const Rational p1 = a.lo * b.lo;
  const Rational p2 = a.lo * b.hi;
  const Rational p3 = a.hi * b.lo;
  const Rational p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace {

std::vector<IntCoeffs> integer_sturm_chain(const IntCoeffs& p) {
  std::vector<IntCoeffs> chain{p};
  if (p.size() <= 1) return chain;
  IntCoeffs dp(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<unsigned long>(i);
  make_primitive(dp);
  chain.push_back(std::move(dp));
  while (true) {
    IntCoeffs r = positive_prem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

}  // namespace

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  std::vector<IntCoeffs> chain = integer_sturm_chain(to_integer(p));
  if (chain.back().size() > 1) {
    // The last element is gcd(p, p'); restart on the square-free part.
    const RationalPoly sf = exact_quotient(from_integer(chain.front()), from_integer(chain.back()));
    chain = integer_sturm_chain(to_integer(sf));
  }
  std::vector<RationalPoly> out;
  out.reserve(chain.size());
  for (const auto& c : chain) out.push_back(from_integer(c));
  return out;
}

SturmSequence::SturmSequence(const RationalPoly& p) : chain_(sturm_sequence(p)) {}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    const int s = sign(q.leading());
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign(q.leading()));
  return count_variations(signs);
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

int sturm_count(const RationalPoly& p, const RationalInterval& I) {
  return SturmSequence(p).count(I.lo, I.hi);
}

Rational cauchy_bound(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("Cauchy bound of the zero polynomial");
  Rational best = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)]) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

namespace {

Rational dyadic_ceiling(const Rational& x) {
  Rational b = 1;
  while (b < x) b *= 2;
  return b;
}

void bisect_isolate(const SturmSequence& sturm, const Rational& lo, const Rational& hi, int n,
                    std::vector<RationalInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int left = sturm.count(lo, mid);
  bisect_isolate(sturm, lo, mid, left, out);
  bisect_isolate(sturm, mid, hi, n - left, out);
}

// Root in (lo, hi]; returns either a point interval or one with a sign change.
RationalInterval tighten(const RationalPoly& q, const SturmSequence& sturm, Rational lo, Rational hi) {
  while (true) {
    if (q.sign_at(hi) == 0) return RationalInterval::point(hi);
    if (q.sign_at(lo) != 0) return {lo, hi};
    const Rational mid = (lo + hi) / 2;
    if (q.sign_at(mid) == 0) return RationalInterval::point(mid);
    if (sturm.count(lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RationalPoly& p) {
  if (p.is_constant()) throw DomainError("root isolation requires a non-constant polynomial");
  const SquarefreeDecomposition dec = squarefree_decomposition(p);
  RationalPoly q = RationalPoly::constant(1);
  for (const auto& f : dec.factors) q *= f.factor;
  const SturmSequence sturm(q);
  const Rational bound = dyadic_ceiling(cauchy_bound(p));

  std::vector<RationalInterval> raw;
  bisect_isolate(sturm, -bound, bound, sturm.count(-bound, bound), raw);

  std::vector<RationalInterval> isolated;
  for (const auto& iv : raw) {
    RationalInterval t = tighten(q, sturm, iv.lo, iv.hi);
    if (!isolated.empty() && !t.is_point() && t.lo <= isolated.back().hi) {
      // Touching neighbours: move lo up without losing the root.
      Rational cand = t.midpoint();
      while (sturm.count(t.lo, cand) == 1) {
        if (q.sign_at(cand) == 0) break;
        cand = (t.lo + cand) / 2;
      }
      t = q.sign_at(cand) == 0 ? RationalInterval::point(cand) : RationalInterval(cand, t.hi);
    }
    isolated.push_back(t);
  }

  std::vector<SturmSequence> factor_sturm;
  factor_sturm.reserve(dec.factors.size());
  for (const auto& f : dec.factors) factor_sturm.emplace_back(f.factor);

  std::vector<IsolatedRoot> out;
  out.reserve(isolated.size());
  for (const auto& iv : isolated) {
    int mult = 0;
    for (std::size_t k = 0; k < dec.factors.size(); ++k) {
      const bool hit = iv.is_point() ? dec.factors[k].factor.sign_at(iv.lo) == 0
                                     : factor_sturm[k].count(iv.lo, iv.hi) == 1;
      if (hit) {
        mult = dec.factors[k].multiplicity;
        break;
      }
    }
    if (mult == 0) throw InternalError("isolated root matches no square-free factor");
    out.push_back({iv, mult});
  }
  return out;
}

RationalInterval interval_eval(const RationalPoly& p, const RationalInterval& I) {
  if (p.is_zero()) return RationalInterval::point(0);
  RationalInterval acc = RationalInterval::point(p.leading());
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc = acc * I + RationalInterval::point(p.coeffs()[static_cast<std::size_t>(i)]);
  }
  return acc;
}

FloatPoly::FloatPoly(const RationalPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.push_back(to_long_double(c));
}

long double FloatPoly::operator()(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const RationalPoly& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << variable;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace lipclass
