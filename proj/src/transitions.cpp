#include "lipclass/transitions.hpp"

#include "lipclass/errors.hpp"

namespace lipclass {

std::string to_string(Pairing p) { return p == Pairing::Direct ? "direct" : "reverse"; }
std::string to_string(PhiOrientation o) { return o == PhiOrientation::Inc ? "increasing" : "decreasing"; }

namespace {

PairedSide pair_side(const RationalPoly& f, const RationalPoly& g) { return {f, g, equivalence_1d(f, g)}; }

std::optional<PairingCertificate> certify(Pairing pairing, PairedSide side1, PairedSide side2) {
  PairingCertificate cert;
  cert.pairing = pairing;
  cert.c1 = side1.verdict.direct.unite(side1.verdict.reverse);
  cert.c2 = side2.verdict.direct.unite(side2.verdict.reverse);
  cert.phi1 = side1.orientations();
  cert.phi2 = side2.orientations();
  cert.side1 = std::move(side1);
  cert.side2 = std::move(side2);
  if (!cert.live()) return std::nullopt;
  return cert;
}

constexpr PhiOrientation kOrientations[] = {PhiOrientation::Inc, PhiOrientation::Dec};

}  // namespace

PairingResult pairing_search(const RationalPoly& f_plus, const RationalPoly& f_minus,
                             const RationalPoly& g_plus, const RationalPoly& g_minus) {
  if (f_plus.is_zero() || f_minus.is_zero() || g_plus.is_zero() || g_minus.is_zero())
    throw DomainError("pairing_search: zero height function");
  PairingResult out;
  out.direct = certify(Pairing::Direct, pair_side(f_plus, g_plus), pair_side(f_minus, g_minus));
  out.reverse = certify(Pairing::Reverse, pair_side(f_plus, g_minus), pair_side(f_minus, g_plus));
  return out;
}

BetaCheck is_beta_transition(const PairingCertificate& cert, const TransitionChoice& choice, long e,
                             const Beta& beta, long d) {
  if (!cert.side1.constants(choice.o1).contains(choice.c1) || !cert.side2.constants(choice.o2).contains(choice.c2))
    throw PreconditionError("is_beta_transition: constant not admissible for the chosen orientation");
  if (cert.side1.f.is_constant() || cert.side2.f.is_constant())
    throw PreconditionError("is_beta_transition: constant height functions have no asymptotic slope");

  BetaCheck out{};
  out.characterization = choice.o1 == choice.o2 && (e == 0 || choice.c1 == choice.c2);

  // With n = deg f_i and ρ_i = lead f_i / lead g_i, the slope l_i = lim φ_i(t)/t
  // satisfies l_i^n = c_i ρ_i and |λ_i| = c_i^{-1/d}. Raising the slope
  // condition to the power s·d·n leaves c1^{s(d-rm)} |ρ1|^{sd} = c2^{s(d-rm)} |ρ2|^{sd}.
  const long n = cert.side1.f.degree();
  const long m = n / beta.s;
  const auto ce = static_cast<unsigned>(beta.s * (d - beta.r * m));
  const auto rho_exp = static_cast<unsigned long>(beta.s * d);
  const Rational rho1 = abs(cert.side1.f.leading() / cert.side1.g.leading());
  const Rational rho2 = abs(cert.side2.f.leading() / cert.side2.g.leading());
  const AlgebraicNumber lhs = pow(choice.c1, ce) * AlgebraicNumber(pow(rho1, rho_exp));
  const AlgebraicNumber rhs = pow(choice.c2, ce) * AlgebraicNumber(pow(rho2, rho_exp));
  // Sign of l_i is the orientation of φ_i.
  out.limit_check = choice.o1 == choice.o2 && lhs == rhs;
  return out;
}

std::optional<TransitionChoice> find_beta_choice(const PairingCertificate& cert, long e) {
  for (PhiOrientation o : kOrientations) {
    const ConstantSet& s1 = cert.side1.constants(o);
    const ConstantSet& s2 = cert.side2.constants(o);
    if (s1.is_empty() || s2.is_empty()) continue;
    if (e == 0) return TransitionChoice{o, o, s1.representative(), s2.representative()};
    const ConstantSet common = s1.intersect(s2);
    if (!common.is_empty()) {
      const AlgebraicNumber c = common.representative();
      return TransitionChoice{o, o, c, c};
    }
  }
  return std::nullopt;
}

AffineMap AffineMap::inverse() const { return {1 / a, -b / a}; }

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  return {outer.a * inner.a, outer.a * inner.b + outer.b};
}

ProtoTransitionSample make_proto(Rational lambda1, Rational lambda2, AffineMap phi1, AffineMap phi2) {
  if (lambda1 * lambda2 <= 0) throw DomainError("proto-transition needs lambda1 * lambda2 > 0");
  if (phi1.a == 0 || phi2.a == 0) throw DomainError("proto-transition needs invertible maps");
  return {std::move(lambda1), std::move(lambda2), std::move(phi1), std::move(phi2)};
}

ProtoTransitionSample identity_proto() { return {}; }

ProtoTransitionSample compose_proto(const ProtoTransitionSample& p2, const ProtoTransitionSample& p1) {
  if (p1.positive())
    return {p1.lambda1 * p2.lambda1, p1.lambda2 * p2.lambda2, compose(p2.phi1, p1.phi1), compose(p2.phi2, p1.phi2)};
  return {p1.lambda1 * p2.lambda2, p1.lambda2 * p2.lambda1, compose(p2.phi2, p1.phi1), compose(p2.phi1, p1.phi2)};
}

ProtoTransitionSample inverse_proto(const ProtoTransitionSample& p) {
  if (p.positive()) return {1 / p.lambda1, 1 / p.lambda2, p.phi1.inverse(), p.phi2.inverse()};
  return {1 / p.lambda2, 1 / p.lambda1, p.phi2.inverse(), p.phi1.inverse()};
}

HeightPair act(const HeightPair& g, const ProtoTransitionSample& p, long d) {
  const auto k = static_cast<unsigned long>(d);
  const Rational s1 = pow(abs(p.lambda1), k);
  const Rational s2 = pow(abs(p.lambda2), k);
  const RationalPoly& h1 = p.positive() ? g.first : g.second;
  const RationalPoly& h2 = p.positive() ? g.second : g.first;
  return {s1 * h1.compose(p.phi1.as_poly()), s2 * h2.compose(p.phi2.as_poly())};
}

bool sample_slope_condition(const ProtoTransitionSample& p, const Beta& beta) {
  if (p.phi1.increasing() != p.phi2.increasing()) return false;
  const auto r = static_cast<unsigned long>(beta.r);
  const auto s = static_cast<unsigned long>(beta.s);
  return pow(abs(p.lambda1), r) * pow(abs(p.phi1.a), s) == pow(abs(p.lambda2), r) * pow(abs(p.phi2.a), s);
}

bool sample_characterization(const ProtoTransitionSample& p, long e) {
  return p.phi1.increasing() == p.phi2.increasing() && (e == 0 || p.lambda1 == p.lambda2);
}

}  // namespace lipclass
