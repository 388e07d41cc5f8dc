#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lipclass/algnum.hpp"
#include "lipclass/classify2d.hpp"
#include "lipclass/poly.hpp"
#include "lipclass/quasihomog.hpp"
#include "lipclass/transitions.hpp"

namespace lipclass {

/// φ with g∘φ = c·f, assembled segment by segment between critical points.
class PiecewiseMonotoneMap {
 public:
  long double operator()(long double t) const;

  const RationalPoly& f() const { return f_; }
  const RationalPoly& g() const { return g_; }
  const AlgebraicNumber& c() const { return c_; }
  PhiOrientation orientation() const { return orientation_; }
  // Ascending critical points of f and of g.
  const std::vector<AlgebraicNumber>& breakpoints_exact() const { return t_exact_; }
  const std::vector<AlgebraicNumber>& image_breakpoints_exact() const { return s_exact_; }
  const std::vector<long double>& breakpoints() const { return t_; }
  const std::vector<long double>& image_breakpoints() const { return s_; }
  // l = lim φ(t)/t at ±∞, with l^n = slope_power() for n = deg f.
  const AlgebraicNumber& slope_power() const { return slope_power_; }
  long double slope() const { return slope_; }

 private:
  friend PiecewiseMonotoneMap build_phi(const RationalPoly&, const RationalPoly&, const Verdict1D&,
                                        const AlgebraicNumber&, PhiOrientation, long double);

  RationalPoly f_, g_;
  FloatPoly ff_, geff_, dgeff_;  // geff = g or g(-s)
  AlgebraicNumber c_;
  long double c_ld_ = 1;
  PhiOrientation orientation_ = PhiOrientation::Inc;
  std::vector<AlgebraicNumber> t_exact_, s_exact_;
  std::vector<long double> t_, s_, seff_;
  AlgebraicNumber slope_power_;
  long double slope_ = 1;
  long double tol_ = 0;
};

/// Requires c in the constant set of the orientation (PreconditionError).
PiecewiseMonotoneMap build_phi(const RationalPoly& f, const RationalPoly& g, const AlgebraicNumber& c,
                               PhiOrientation orientation, long double tol = 1e-18L);
// Same, reusing a verdict already computed as equivalence_1d(f, g).
PiecewiseMonotoneMap build_phi(const RationalPoly& f, const RationalPoly& g, const Verdict1D& verdict,
                               const AlgebraicNumber& c, PhiOrientation orientation, long double tol = 1e-18L);

struct Point2 {
  long double x;
  long double y;
};

/// Φ(x, t|x|^β) = (λ1 x, |λ1|^β φ1(t)|x|^β) for x > 0, the λ2/φ2 branch for
/// x < 0 and Φ(0, y) = (0, |λ1|^β l1 y). Monomial pairs use (x, y) ↦ (κx, y).
class PlanarWitnessMap {
 public:
  Point2 operator()(const Point2& p) const;

  bool linear() const { return linear_; }
  const Beta& beta() const { return beta_; }
  // Signed λ_i; the sign comes from the pairing.
  long double lambda1() const { return lambda1_; }
  long double lambda2() const { return lambda2_; }
  long double axis_slope() const { return axis_; }
  const PiecewiseMonotoneMap& phi1() const { return *phi1_; }
  const PiecewiseMonotoneMap& phi2() const { return *phi2_; }

 private:
  friend PlanarWitnessMap inverse_beta_transform(const PairingCertificate&, const TransitionChoice&,
                                                 const QuasiHomogPoly&, const QuasiHomogPoly&, long double);
  friend PlanarWitnessMap monomial_witness(const QuasiHomogPoly&, const QuasiHomogPoly&);
  explicit PlanarWitnessMap(Beta beta) : beta_(beta) {}

  Beta beta_;
  bool linear_ = false;
  long double kappa_ = 1;
  long double lambda1_ = 1, lambda2_ = 1;
  long double lb1_ = 1, lb2_ = 1;  // |λ_i|^β
  long double axis_ = 1;
  std::optional<PiecewiseMonotoneMap> phi1_, phi2_;
};

/// Requires a choice that passes the characterization (PreconditionError).
PlanarWitnessMap inverse_beta_transform(const PairingCertificate& cert, const TransitionChoice& choice,
                                        const QuasiHomogPoly& F, const QuasiHomogPoly& G, long double tol = 1e-18L);

/// G(κx, y) = F(x, y) for equivalent monomials F = aX^d, G = bX^d.
PlanarWitnessMap monomial_witness(const QuasiHomogPoly& F, const QuasiHomogPoly& G);

/// Witness for an Equivalent verdict; PreconditionError otherwise.
PlanarWitnessMap build_witness(const Verdict2D& v, long double tol = 1e-18L);

struct GridSpec {
  int x_count = 64;
  int t_count = 64;
  long double x_min = -1, x_max = 1;
  long double t_min = -5, t_max = 5;
  long double x_exclude = 1e-3L;
  int random_pairs = 4000;
  long double strip_delta = 0.25L;
  std::uint64_t seed = 1;
};

struct ConjugacyReport {
  long double max_rel_residual = 0;
  long double lip_ratio_min = 0;
  long double lip_ratio_max = 0;
  long double strip_lipschitz_estimate = 0;
  long double L = 0;
  std::size_t points = 0;
  std::size_t pairs = 0;
  bool success = false;
};

/// Residual max |G(Φ(p)) − F(p)| / max(1, |F(p)|) on the grid and sampled
/// difference quotients of Φ. Success needs residual ≤ tol and L < max_L.
ConjugacyReport verify_conjugacy(const QuasiHomogPoly& F, const QuasiHomogPoly& G, const PlanarWitnessMap& Phi,
                                 const GridSpec& grid = {}, long double tol = 1e-9L, long double max_L = 1e3L);

}  // namespace lipclass
