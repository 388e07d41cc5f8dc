#pragma once

#include <optional>
#include <string>

#include "lipclass/algnum.hpp"
#include "lipclass/lipeq1d.hpp"
#include "lipclass/poly.hpp"
#include "lipclass/quasihomog.hpp"

namespace lipclass {

// Sign of λ: Direct pairs f+ with g+, Reverse pairs f+ with g-.
enum class Pairing { Direct, Reverse };
enum class PhiOrientation { Inc, Dec };

std::string to_string(Pairing p);
std::string to_string(PhiOrientation o);

struct OrientationSet {
  bool inc = false;
  bool dec = false;

  bool contains(PhiOrientation o) const { return o == PhiOrientation::Inc ? inc : dec; }
  bool empty() const { return !inc && !dec; }
};

/// One side of a pairing: g∘φ = c·f with f a height of F and g a height of G.
struct PairedSide {
  RationalPoly f;
  RationalPoly g;
  Verdict1D verdict;

  const ConstantSet& constants(PhiOrientation o) const {
    return o == PhiOrientation::Inc ? verdict.direct : verdict.reverse;
  }
  OrientationSet orientations() const { return {!verdict.direct.is_empty(), !verdict.reverse.is_empty()}; }
};

struct PairingCertificate {
  Pairing pairing = Pairing::Direct;
  PairedSide side1;  // x > 0
  PairedSide side2;  // x < 0
  ConstantSet c1;    // union over φ1 orientations
  ConstantSet c2;
  OrientationSet phi1;
  OrientationSet phi2;

  bool live() const { return !c1.is_empty() && !c2.is_empty(); }
};

struct PairingResult {
  std::optional<PairingCertificate> direct;
  std::optional<PairingCertificate> reverse;
};

PairingResult pairing_search(const RationalPoly& f_plus, const RationalPoly& f_minus,
                             const RationalPoly& g_plus, const RationalPoly& g_minus);

/// Concrete pick of orientations and constants c_i = |λ_i|^{-d}.
struct TransitionChoice {
  PhiOrientation o1 = PhiOrientation::Inc;
  PhiOrientation o2 = PhiOrientation::Inc;
  AlgebraicNumber c1;
  AlgebraicNumber c2;
};

struct BetaCheck {
  bool characterization;
  bool limit_check;
};

/// Decides whether the choice gives a β-transition, once through the
/// coherence/equal-λ characterization and once through the slope condition
/// |λ1|^β lim φ1(t)/t = |λ2|^β lim φ2(t)/t evaluated exactly.
/// The constants must belong to the certificate's sets for the chosen
/// orientations and the heights must be non-constant; PreconditionError otherwise.
BetaCheck is_beta_transition(const PairingCertificate& cert, const TransitionChoice& choice, long e,
                             const Beta& beta, long d);

/// A choice satisfying the characterization, if the certificate admits one.
std::optional<TransitionChoice> find_beta_choice(const PairingCertificate& cert, long e);

/// t ↦ a t + b with a ≠ 0.
struct AffineMap {
  Rational a{1};
  Rational b{0};

  Rational operator()(const Rational& t) const { return a * t + b; }
  RationalPoly as_poly() const { return RationalPoly({b, a}); }
  bool increasing() const { return a > 0; }
  AffineMap inverse() const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// outer ∘ inner
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

struct ProtoTransitionSample {
  Rational lambda1{1};
  Rational lambda2{1};
  AffineMap phi1;
  AffineMap phi2;

  bool positive() const { return lambda1 > 0; }
  friend bool operator==(const ProtoTransitionSample&, const ProtoTransitionSample&) = default;
};

ProtoTransitionSample make_proto(Rational lambda1, Rational lambda2, AffineMap phi1, AffineMap phi2);
ProtoTransitionSample identity_proto();
// (μ,ψ)∘(λ,φ) with p2 = (μ,ψ), p1 = (λ,φ).
ProtoTransitionSample compose_proto(const ProtoTransitionSample& p2, const ProtoTransitionSample& p1);
ProtoTransitionSample inverse_proto(const ProtoTransitionSample& p);

struct HeightPair {
  RationalPoly first;
  RationalPoly second;
  friend bool operator==(const HeightPair&, const HeightPair&) = default;
};

/// (g1, g2)∘(λ, φ) for the degree-d action.
HeightPair act(const HeightPair& g, const ProtoTransitionSample& p, long d);

/// Slope condition of a sample acting on heights of a degree-d β-quasihomogeneous G.
bool sample_slope_condition(const ProtoTransitionSample& p, const Beta& beta);
/// Coherent φ's and (e = 0 or λ1 = λ2).
bool sample_characterization(const ProtoTransitionSample& p, long e);

}  // namespace lipclass
