#include "lipclass/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lipclass/errors.hpp"
#include "lipclass/lipeq1d.hpp"

namespace lipclass {

namespace {

std::vector<AlgebraicNumber> locations(const RationalPoly& p) {
  std::vector<AlgebraicNumber> out;
  for (auto& cp : critical_points(p).points) out.push_back(std::move(cp.location));
  return out;
}

std::vector<long double> approximations(const std::vector<AlgebraicNumber>& xs) {
  std::vector<long double> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.approx_ld());
  return out;
}

int sign_ld(long double v) { return (v > 0) - (v < 0); }

// Solves geff(s) = target for s in a segment on which geff is monotone. A
// missing end is found by doubling steps away from the known end.
long double solve_segment(const FloatPoly& geff, std::optional<long double> lo_end, std::optional<long double> hi_end,
                          long double target, long double tol) {
  const int n = geff.degree();
  const long double lead = geff.coeffs().back();
  int dir;
  if (lo_end && hi_end)
    dir = sign_ld(geff(*hi_end) - geff(*lo_end));
  else if (lo_end)
    dir = sign_ld(lead);
  else
    dir = sign_ld(lead) * (n % 2 == 0 ? -1 : 1);
  if (dir == 0) throw InternalError("build_phi: flat segment");
  auto h = [&](long double s) { return dir * (geff(s) - target); };

  long double lo, hi;
  if (lo_end && hi_end) {
    lo = *lo_end;
    hi = *hi_end;
  } else {
    const long double anchor = lo_end ? *lo_end : hi_end ? *hi_end : 0.0L;
    lo = lo_end ? *lo_end : anchor - 1;
    hi = hi_end ? *hi_end : anchor + 1;
    long double step = 1;
    for (int k = 0; !lo_end && h(lo) > 0; ++k) {
      if (k > 2000) throw InternalError("build_phi: bracket expansion failed");
      step *= 2;
      lo = anchor - step;
    }
    step = 1;
    for (int k = 0; !hi_end && h(hi) < 0; ++k) {
      if (k > 2000) throw InternalError("build_phi: bracket expansion failed");
      step *= 2;
      hi = anchor + step;
    }
  }
  if (h(lo) >= 0) return lo;
  if (h(hi) <= 0) return hi;
  for (int k = 0; k < 20000; ++k) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi || hi - lo <= tol * std::max(1.0L, std::fabs(mid))) break;
    (h(mid) < 0 ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

PiecewiseMonotoneMap build_phi(const RationalPoly& f, const RationalPoly& g, const AlgebraicNumber& c,
                               PhiOrientation orientation, long double tol) {
  if (f.is_constant() || g.is_constant()) throw PreconditionError("build_phi: constant polynomial");
  return build_phi(f, g, equivalence_1d(f, g), c, orientation, tol);
}

PiecewiseMonotoneMap build_phi(const RationalPoly& f, const RationalPoly& g, const Verdict1D& verdict,
                               const AlgebraicNumber& c, PhiOrientation orientation, long double tol) {
  if (f.is_constant() || g.is_constant()) throw PreconditionError("build_phi: constant polynomial");
  if (!(tol > 0)) throw PreconditionError("build_phi: tolerance must be positive");
  const ConstantSet& admissible = orientation == PhiOrientation::Inc ? verdict.direct : verdict.reverse;
  if (!admissible.contains(c))
    throw PreconditionError("build_phi: constant " + c.to_string() + " is not admissible for a " +
                            to_string(orientation) + " map");

  PiecewiseMonotoneMap m;
  m.f_ = f;
  m.g_ = g;
  m.c_ = c;
  m.c_ld_ = c.approx_ld();
  m.orientation_ = orientation;
  m.tol_ = tol;
  const RationalPoly geff = orientation == PhiOrientation::Inc ? g : g.reflected();
  m.ff_ = FloatPoly(f);
  m.geff_ = FloatPoly(geff);
  m.dgeff_ = FloatPoly(geff.derivative());
  m.t_exact_ = locations(f);
  m.s_exact_ = locations(g);
  if (m.t_exact_.size() != m.s_exact_.size()) throw InternalError("build_phi: critical point counts differ");
  m.t_ = approximations(m.t_exact_);
  m.s_ = approximations(m.s_exact_);
  m.seff_ = approximations(locations(geff));

  m.slope_power_ = c * AlgebraicNumber(Rational(f.leading() / g.leading()));
  const long double mag = m.slope_power_.approx_pow(1, f.degree());
  m.slope_ = orientation == PhiOrientation::Inc ? mag : -mag;
  return m;
}

long double PiecewiseMonotoneMap::operator()(long double t) const {
  const long double target = c_ld_ * ff_(t);
  const auto idx = static_cast<std::size_t>(std::upper_bound(t_.begin(), t_.end(), t) - t_.begin());
  std::optional<long double> lo, hi;
  if (idx > 0) lo = seff_[idx - 1];
  if (idx < seff_.size()) hi = seff_[idx];
  const long double s = solve_segment(geff_, lo, hi, target, tol_);
  return orientation_ == PhiOrientation::Inc ? s : -s;
}

Point2 PlanarWitnessMap::operator()(const Point2& p) const {
  if (linear_) return {kappa_ * p.x, p.y};
  if (p.x == 0) return {0, axis_ * p.y};
  const long double beta = static_cast<long double>(beta_.r) / static_cast<long double>(beta_.s);
  const long double xb = std::pow(std::fabs(p.x), beta);
  const long double t = p.y / xb;
  if (p.x > 0) return {lambda1_ * p.x, lb1_ * (*phi1_)(t)*xb};
  return {lambda2_ * p.x, lb2_ * (*phi2_)(t)*xb};
}

PlanarWitnessMap inverse_beta_transform(const PairingCertificate& cert, const TransitionChoice& choice,
                                        const QuasiHomogPoly& F, const QuasiHomogPoly& G, long double tol) {
  if (!(F.beta() == G.beta()) || F.degree() != G.degree())
    throw PreconditionError("inverse_beta_transform: F and G need the same beta and degree");
  const Beta& beta = F.beta();
  const long d = F.degree();
  if (!is_beta_transition(cert, choice, x_multiplicity(F), beta, d).characterization)
    throw PreconditionError("inverse_beta_transform: the choice is not a beta-transition");

  PlanarWitnessMap w(beta);
  w.phi1_ = build_phi(cert.side1.f, cert.side1.g, cert.side1.verdict, choice.c1, choice.o1, tol);
  w.phi2_ = build_phi(cert.side2.f, cert.side2.g, cert.side2.verdict, choice.c2, choice.o2, tol);
  const long double sign = cert.pairing == Pairing::Direct ? 1 : -1;
  w.lambda1_ = sign * choice.c1.approx_pow(-1, d);
  w.lambda2_ = sign * choice.c2.approx_pow(-1, d);
  w.lb1_ = choice.c1.approx_pow(-beta.r, beta.s * d);
  w.lb2_ = choice.c2.approx_pow(-beta.r, beta.s * d);
  const long double axis1 = w.lb1_ * w.phi1_->slope();
  const long double axis2 = w.lb2_ * w.phi2_->slope();
  if (std::fabs(axis1 - axis2) > 1e-9L * std::max(std::fabs(axis1), std::fabs(axis2)))
    throw InternalError("inverse_beta_transform: axis slopes disagree");
  w.axis_ = axis1;
  return w;
}

PlanarWitnessMap monomial_witness(const QuasiHomogPoly& F, const QuasiHomogPoly& G) {
  if (!F.is_monomial() || !G.is_monomial() || F.degree() != G.degree() || !(F.beta() == G.beta()))
    throw PreconditionError("monomial_witness: needs aX^d and bX^d");
  const long d = F.degree();
  const Rational ratio = F.coeffs()[0] / G.coeffs()[0];
  if (d % 2 == 0 && ratio < 0) throw PreconditionError("monomial_witness: even degree with opposite signs");
  PlanarWitnessMap w(F.beta());
  w.linear_ = true;
  w.kappa_ = AlgebraicNumber(ratio).approx_pow(1, d) * (ratio < 0 ? -1 : 1);
  w.lambda1_ = w.lambda2_ = w.kappa_;
  w.axis_ = 1;
  return w;
}

PlanarWitnessMap build_witness(const Verdict2D& v, long double tol) {
  if (v.status != Status::Equivalent) throw PreconditionError("build_witness: verdict is not Equivalent");
  if (v.reason == Reason::MonomialCase) return monomial_witness(v.F, v.G);
  if (!v.certificate || !v.choice) throw InternalError("build_witness: Equivalent verdict without a certificate");
  return inverse_beta_transform(*v.certificate, *v.choice, v.F, v.G, tol);
}

ConjugacyReport verify_conjugacy(const QuasiHomogPoly& F, const QuasiHomogPoly& G, const PlanarWitnessMap& Phi,
                                 const GridSpec& grid, long double tol, long double max_L) {
  ConjugacyReport rep;
  const long double beta = static_cast<long double>(F.beta().r) / static_cast<long double>(F.beta().s);
  auto lift = [&](long double x, long double t) { return Point2{x, t * std::pow(std::fabs(x), beta)}; };
  auto residual = [&](const Point2& p, const Point2& q) {
    const long double fv = F.eval(p.x, p.y);
    return std::fabs(G.eval(q.x, q.y) - fv) / std::max(1.0L, std::fabs(fv));
  };

  const int nx = std::max(grid.x_count, 1), nt = std::max(grid.t_count, 1);
  auto coord = [](long double lo, long double hi, int i, int n) {
    return n == 1 ? (lo + hi) / 2 : lo + (hi - lo) * i / (n - 1);
  };
  // Grid images, kept for the neighbour quotients; excluded columns stay empty.
  std::vector<std::vector<std::pair<Point2, Point2>>> cols(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) {
    const long double x = coord(grid.x_min, grid.x_max, i, nx);
    if (std::fabs(x) < grid.x_exclude) continue;
    for (int j = 0; j < nt; ++j) {
      const Point2 p = lift(x, coord(grid.t_min, grid.t_max, j, nt));
      const Point2 q = Phi(p);
      rep.max_rel_residual = std::max(rep.max_rel_residual, residual(p, q));
      cols[static_cast<std::size_t>(i)].emplace_back(p, q);
      ++rep.points;
    }
  }
  for (int j = 0; j < nt; ++j) {
    const Point2 p{0, coord(grid.t_min, grid.t_max, j, nt)};
    rep.max_rel_residual = std::max(rep.max_rel_residual, residual(p, Phi(p)));
    ++rep.points;
  }

  long double lo = std::numeric_limits<long double>::infinity(), hi = 0, strip = 0;
  auto quotient = [&](const Point2& p, const Point2& fp, const Point2& q, const Point2& fq) {
    const long double dist = std::hypot(p.x - q.x, p.y - q.y);
    if (!(dist > 1e-12L)) return;
    const long double r = std::hypot(fp.x - fq.x, fp.y - fq.y) / dist;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    if (std::fabs(p.x) <= grid.strip_delta && std::fabs(q.x) <= grid.strip_delta) strip = std::max(strip, r);
    ++rep.pairs;
  };
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const auto& col = cols[i];
    for (std::size_t j = 0; j + 1 < col.size(); ++j) quotient(col[j].first, col[j].second, col[j + 1].first, col[j + 1].second);
    if (i + 1 < cols.size() && cols[i + 1].size() == col.size())
      for (std::size_t j = 0; j < col.size(); ++j)
        quotient(col[j].first, col[j].second, cols[i + 1][j].first, cols[i + 1][j].second);
  }

  std::mt19937_64 rng(grid.seed);
  std::uniform_real_distribution<long double> ux(grid.x_min, grid.x_max), ut(grid.t_min, grid.t_max),
      us(-grid.strip_delta, grid.strip_delta), unit(-1, 1), expo(-6, -1);
  for (int k = 0; k < grid.random_pairs; ++k) {
    Point2 p, q;
    switch (k % 4) {
      case 0:  // far apart
        p = lift(ux(rng), ut(rng));
        q = lift(ux(rng), ut(rng));
        break;
      case 1:  // close together
        p = lift(ux(rng), ut(rng));
        q = {p.x + std::pow(10.0L, expo(rng)) * unit(rng), p.y + std::pow(10.0L, expo(rng)) * unit(rng)};
        break;
      case 2:  // inside the strip
        p = lift(us(rng), ut(rng));
        q = lift(us(rng), ut(rng));
        break;
      default:  // one point on the axis
        p = Point2{0, ut(rng) * std::pow(grid.strip_delta, beta)};
        q = lift(us(rng), ut(rng));
        break;
    }
    quotient(p, Phi(p), q, Phi(q));
  }

  rep.lip_ratio_min = rep.pairs ? lo : 0;
  rep.lip_ratio_max = hi;
  rep.strip_lipschitz_estimate = strip;
  rep.L = rep.pairs && lo > 0 ? std::max(hi, 1 / lo) : std::numeric_limits<long double>::infinity();
  rep.success = std::isfinite(static_cast<double>(rep.max_rel_residual)) && rep.max_rel_residual <= tol &&
                rep.L < max_L;
  return rep;
}

}  // namespace lipclass
