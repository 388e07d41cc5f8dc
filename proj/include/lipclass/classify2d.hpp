#pragma once

#include <optional>
#include <string>

#include "lipclass/quasihomog.hpp"
#include "lipclass/transitions.hpp"

namespace lipclass {

enum class Status { Equivalent, NotEquivalent, Undetermined };

enum class Reason {
  MonomialCase,
  NecessaryFails,
  NecessaryNotApplicable,
  CondA,
  CondB,
  CondC,
  NoCriterionApplies,
};

std::string to_string(Status s);
std::string to_string(Reason r);

struct Conditions {
  bool a = false;  // r even or s odd
  bool b = false;  // a common constant for both sides (λ1 = λ2)
  bool c = false;  // neither F nor G has X as a factor
};

struct Verdict2D {
  Verdict2D(QuasiHomogPoly F_, QuasiHomogPoly G_) : F(std::move(F_)), G(std::move(G_)) {}

  QuasiHomogPoly F;
  QuasiHomogPoly G;
  Status status = Status::Undetermined;
  Reason reason = Reason::NoCriterionApplies;
  std::string text;

  HeightFunctions f_heights;
  HeightFunctions g_heights;
  HalfPlaneZeros f_zeros{};
  HalfPlaneZeros g_zeros{};
  PairingResult pairings;
  Conditions conditions;

  // Present for Equivalent verdicts outside the monomial case.
  std::optional<PairingCertificate> certificate;
  std::optional<TransitionChoice> choice;
};

/// Three-valued classification of β-quasihomogeneous F and G up to
/// R-semialgebraic Lipschitz equivalence. Both must share β (DomainError).
Verdict2D classify(const QuasiHomogPoly& F, const QuasiHomogPoly& G);

/// Multi-line report with a stable layout.
std::string explain(const Verdict2D& v);

}  // namespace lipclass
