#include "lipclass/classify2d.hpp"

#include <sstream>

#include "lipclass/errors.hpp"

namespace lipclass {

std::string to_string(Status s) {
  switch (s) {
    case Status::Equivalent: return "Equivalent";
    case Status::NotEquivalent: return "NotEquivalent";
    case Status::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::MonomialCase: return "MonomialCase";
    case Reason::NecessaryFails: return "NecessaryFails";
    case Reason::NecessaryNotApplicable: return "NecessaryNotApplicable";
    case Reason::CondA: return "CondA";
    case Reason::CondB: return "CondB";
    case Reason::CondC: return "CondC";
    case Reason::NoCriterionApplies: return "NoCriterionApplies";
  }
  return "?";
}

namespace {

void classify_monomials(Verdict2D& v) {
  const Rational& a = v.F.coeffs()[0];
  const Rational& b = v.G.coeffs()[0];
  const long d = v.F.degree();
  v.reason = Reason::MonomialCase;
  if (d != v.G.degree()) {
    v.status = Status::Undetermined;
    v.reason = Reason::NoCriterionApplies;
    v.text = "monomials of different degrees " + std::to_string(d) + " and " + std::to_string(v.G.degree());
  } else if (d % 2 == 1) {
    v.status = Status::Equivalent;
    v.text = "odd degree monomials are always equivalent";
  } else if (sgn(a) == sgn(b)) {
    v.status = Status::Equivalent;
    v.text = "even degree monomials with coefficients of the same sign";
  } else {
    v.status = Status::NotEquivalent;
    v.text = "sign mismatch: coefficients " + a.get_str() + " and " + b.get_str() + " have opposite signs with d = " +
             std::to_string(d) + " even";
  }
}

bool common_constant(const PairingResult& p) {
  for (const auto* cert : {p.direct ? &*p.direct : nullptr, p.reverse ? &*p.reverse : nullptr})
    if (cert && !cert->c1.intersect(cert->c2).is_empty()) return true;
  return false;
}

void pick_choice(Verdict2D& v, long e) {
  for (const auto* cert : {v.pairings.direct ? &*v.pairings.direct : nullptr,
                           v.pairings.reverse ? &*v.pairings.reverse : nullptr}) {
    if (!cert) continue;
    if (auto choice = find_beta_choice(*cert, e)) {
      v.certificate = *cert;
      v.choice = std::move(choice);
      return;
    }
  }
  throw InternalError("sufficient condition holds but no coherent transition was found");
}

}  // namespace

Verdict2D classify(const QuasiHomogPoly& F, const QuasiHomogPoly& G) {
  if (!(F.beta() == G.beta()))
    throw DomainError("F and G are quasihomogeneous for different weights " + F.beta().to_string() + " and " +
                      G.beta().to_string());
  Verdict2D v(F, G);
  v.f_heights = height_functions(F);
  v.g_heights = height_functions(G);
  v.f_zeros = halfplane_zeros(F);
  v.g_zeros = halfplane_zeros(G);

  if (F.is_monomial() && G.is_monomial()) {
    classify_monomials(v);
    return v;
  }

  v.pairings = pairing_search(v.f_heights.plus, v.f_heights.minus, v.g_heights.plus, v.g_heights.minus);
  if (!v.pairings.direct && !v.pairings.reverse) {
    const bool f_both = v.f_zeros.right && v.f_zeros.left;
    const bool g_both = v.g_zeros.right && v.g_zeros.left;
    if (f_both || g_both) {
      v.status = Status::NotEquivalent;
      v.reason = Reason::NecessaryFails;
      v.text = std::string("no proto-transition pairs the height functions, and the zero set of ") +
               (f_both ? "F" : "G") + " meets both half-planes";
    } else {
      v.status = Status::Undetermined;
      v.reason = Reason::NecessaryNotApplicable;
      v.text = "no proto-transition pairs the height functions, but neither zero set meets both half-planes";
    }
    return v;
  }

  if (F.degree() != G.degree()) {
    v.status = Status::Undetermined;
    v.reason = Reason::NoCriterionApplies;
    v.text = "height functions pair up, but the degrees " + std::to_string(F.degree()) + " and " +
             std::to_string(G.degree()) + " differ";
    return v;
  }
  const long e = x_multiplicity(F);
  if (e != x_multiplicity(G)) throw InternalError("paired heights with different X-multiplicities");
  const Beta& beta = F.beta();
  v.conditions.a = beta.r % 2 == 0 || beta.s % 2 == 1;
  v.conditions.b = common_constant(v.pairings);
  v.conditions.c = e == 0;

  if (v.conditions.a) {
    v.reason = Reason::CondA;
    v.text = "r is even or s is odd";
  } else if (v.conditions.c) {
    v.reason = Reason::CondC;
    v.text = "neither F nor G has X as a factor";
  } else if (v.conditions.b) {
    v.reason = Reason::CondB;
    v.text = "both sides admit a common constant, so lambda1 = lambda2";
  } else {
    v.status = Status::Undetermined;
    v.reason = Reason::NoCriterionApplies;
    v.text = "height functions pair up, but none of the sufficient conditions holds";
    return v;
  }
  v.status = Status::Equivalent;
  pick_choice(v, e);
  return v;
}

namespace {

std::string describe_heights(const RationalPoly& p) {
  std::ostringstream os;
  os << to_string(p);
  if (p.is_constant()) return os.str();
  const CriticalData cd = critical_points(p);
  os << "; critical points";
  if (cd.points.empty()) os << " none";
  for (const auto& cp : cd.points) {
    os << " " << cp.location.to_string() << " (mult " << cp.multiplicity << ", value "
       << eval_at(p, cp.location).to_string() << ")";
  }
  if (cd.points.size() >= 2) {
    const MultiplicitySymbol sym = multiplicity_symbol(p);
    os << "; symbol ((";
    for (std::size_t i = 0; i < sym.size(); ++i) os << (i ? "," : "") << sym.values[i].to_string();
    os << "),(";
    for (std::size_t i = 0; i < sym.size(); ++i) os << (i ? "," : "") << sym.mults[i];
    os << "))";
  }
  return os.str();
}

void describe_pairing(std::ostringstream& os, const char* name, const std::optional<PairingCertificate>& cert) {
  os << "pairing " << name << ": ";
  if (!cert) {
    os << "none\n";
    return;
  }
  os << "c1 in " << cert->c1.to_string() << ", c2 in " << cert->c2.to_string() << "\n";
}

const char* yes_no(bool b) { return b ? "holds" : "fails"; }

bool F_G_degrees_differ(const Verdict2D& v) { return v.F.degree() != v.G.degree(); }

}  // namespace

std::string explain(const Verdict2D& v) {
  std::ostringstream os;
  os << "F = " << v.F.to_string() << "\n";
  os << "G = " << v.G.to_string() << "\n";
  os << "beta = " << v.F.beta().to_string() << ", d_F = " << v.F.degree() << ", d_G = " << v.G.degree()
     << ", e_F = " << x_multiplicity(v.F) << ", e_G = " << x_multiplicity(v.G) << "\n";
  os << "f+ = " << describe_heights(v.f_heights.plus) << "\n";
  os << "f- = " << describe_heights(v.f_heights.minus) << "\n";
  os << "g+ = " << describe_heights(v.g_heights.plus) << "\n";
  os << "g- = " << describe_heights(v.g_heights.minus) << "\n";

  if (v.reason == Reason::MonomialCase || (v.F.is_monomial() && v.G.is_monomial())) {
    os << "monomial case: " << v.text << "\n";
    os << "verdict: " << to_string(v.status) << "\n";
    return os.str();
  }

  describe_pairing(os, "direct (lambda > 0)", v.pairings.direct);
  describe_pairing(os, "reverse (lambda < 0)", v.pairings.reverse);
  if (!v.pairings.direct && !v.pairings.reverse) {
    os << "zero set of F meets x > 0: " << (v.f_zeros.right ? "yes" : "no")
       << ", x < 0: " << (v.f_zeros.left ? "yes" : "no") << "\n";
    os << "zero set of G meets x > 0: " << (v.g_zeros.right ? "yes" : "no")
       << ", x < 0: " << (v.g_zeros.left ? "yes" : "no") << "\n";
    os << "necessary condition "
       << (v.reason == Reason::NecessaryFails ? "applies and fails" : "is not applicable") << ": " << v.text << "\n";
    os << "verdict: " << to_string(v.status) << "\n";
    return os.str();
  }

  os << "condition (a) r even or s odd: " << yes_no(v.conditions.a) << "\n";
  os << "condition (b) lambda1 = lambda2: " << yes_no(v.conditions.b) << "\n";
  os << "condition (c) X divides neither F nor G: " << yes_no(v.conditions.c) << "\n";
  if (v.choice) {
    os << "orientation: lambda " << (v.certificate->pairing == Pairing::Direct ? "> 0" : "< 0") << ", phi1 "
       << to_string(v.choice->o1) << ", phi2 " << to_string(v.choice->o2) << "\n";
    if (v.choice->c1 == v.choice->c2)
      os << "c = " << v.choice->c1.to_string() << "\n";
    else
      os << "c1 = " << v.choice->c1.to_string() << ", c2 = " << v.choice->c2.to_string() << "\n";
  }
  os << "verdict: " << to_string(v.status);
  if (v.status == Status::Equivalent) {
    const char* tag = v.reason == Reason::CondA ? "(a)" : v.reason == Reason::CondB ? "(b)" : "(c)";
    os << " by condition " << tag;
  } else {
    os << (F_G_degrees_differ(v) ? ": " + v.text : std::string(": none of (a), (b), (c) holds"));
  }
  os << "\n";
  return os.str();
}

}  // namespace lipclass
