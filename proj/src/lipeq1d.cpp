#include "lipclass/lipeq1d.hpp"

#include "lipclass/errors.hpp"

namespace lipclass {

CriticalData critical_points(const RationalPoly& f) {
  if (f.is_zero() || f.is_constant()) throw DomainError("critical_points: constant polynomial");
  CriticalData out;
  const RationalPoly df = f.derivative();
  if (df.is_constant()) return out;
  for (const auto& root : isolate_real_roots(df)) {
    out.points.push_back({make_algebraic(df, root.interval), root.multiplicity + 1});
  }
  return out;
}

MultiplicitySymbol multiplicity_symbol(const RationalPoly& f) {
  const CriticalData cd = critical_points(f);
  if (cd.points.size() < 2) {
    throw PreconditionError("multiplicity symbol needs at least two critical points, found " +
                            std::to_string(cd.points.size()));
  }
  MultiplicitySymbol sym;
  for (const auto& p : cd.points) {
    sym.values.push_back(eval_at(f, p.location));
    sym.mults.push_back(p.multiplicity);
  }
  return sym;
}

ConstantSet ConstantSet::all_positive() {
  ConstantSet s;
  s.kind_ = Kind::AllPositive;
  return s;
}

ConstantSet ConstantSet::finite(std::vector<AlgebraicNumber> members) {
  ConstantSet s;
  for (auto& m : members) {
    if (m.sign() <= 0) throw PreconditionError("constant set members must be positive");
    bool seen = false;
    for (const auto& kept : s.members_) seen = seen || kept == m;
    if (!seen) s.members_.push_back(std::move(m));
  }
  s.kind_ = s.members_.empty() ? Kind::Empty : Kind::Finite;
  return s;
}

bool ConstantSet::contains(const AlgebraicNumber& c) const {
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::AllPositive:
      return c.sign() > 0;
    case Kind::Finite:
      for (const auto& m : members_)
        if (m == c) return true;
      return false;
  }
  return false;
}

ConstantSet ConstantSet::unite(const ConstantSet& other) const {
  if (kind_ == Kind::AllPositive || other.kind_ == Kind::AllPositive) return all_positive();
  std::vector<AlgebraicNumber> all = members_;
  all.insert(all.end(), other.members_.begin(), other.members_.end());
  return finite(std::move(all));
}

ConstantSet ConstantSet::intersect(const ConstantSet& other) const {
  if (kind_ == Kind::AllPositive) return other;
  if (other.kind_ == Kind::AllPositive) return *this;
  std::vector<AlgebraicNumber> common;
  for (const auto& m : members_)
    if (other.contains(m)) common.push_back(m);
  return finite(std::move(common));
}

AlgebraicNumber ConstantSet::representative() const {
  switch (kind_) {
    case Kind::Empty:
      throw PreconditionError("empty constant set has no representative");
    case Kind::AllPositive:
      return AlgebraicNumber(1);
    case Kind::Finite:
      break;
  }
  return members_.front();
}

std::string ConstantSet::to_string() const {
  switch (kind_) {
    case Kind::Empty:
      return "{}";
    case Kind::AllPositive:
      return "(0, inf)";
    case Kind::Finite:
      break;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i].to_string();
  }
  return out + "}";
}

namespace {

// Constants c > 0 with b = c * a, entrywise, mults equal.
ConstantSet scaled_match(const std::vector<AlgebraicNumber>& a, const std::vector<int>& amult,
                         const std::vector<AlgebraicNumber>& b, const std::vector<int>& bmult) {
  if (a.size() != b.size() || amult != bmult) return ConstantSet::empty();
  std::vector<int> sa, sb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa.push_back(a[i].sign());
    sb.push_back(b[i].sign());
  }
  if (sa != sb) return ConstantSet::empty();
  std::size_t k = 0;
  while (k < a.size() && sa[k] == 0) ++k;
  if (k == a.size()) return ConstantSet::all_positive();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == k || sa[i] == 0) continue;
    if (b[i] * a[k] != a[i] * b[k]) return ConstantSet::empty();
  }
  return ConstantSet::single(b[k] / a[k]);
}

}  // namespace

Similarity symbols_similarity(const MultiplicitySymbol& a, const MultiplicitySymbol& b) {
  Similarity s;
  s.direct = scaled_match(a.values, a.mults, b.values, b.mults);
  const std::vector<AlgebraicNumber> rv(a.values.rbegin(), a.values.rend());
  const std::vector<int> rm(a.mults.rbegin(), a.mults.rend());
  s.reverse = scaled_match(rv, rm, b.values, b.mults);
  return s;
}

namespace {

Verdict1D not_equivalent(std::string reason) {
  Verdict1D v;
  v.reason = std::move(reason);
  return v;
}

Verdict1D equivalent(ConstantSet direct, ConstantSet reverse, std::string reason) {
  Verdict1D v;
  v.equivalent = !direct.is_empty() || !reverse.is_empty();
  v.direct = std::move(direct);
  v.reverse = std::move(reverse);
  v.reason = std::move(reason);
  return v;
}

}  // namespace

Verdict1D equivalence_1d(const RationalPoly& f, const RationalPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("equivalence_1d: zero polynomial");

  if (f.is_constant() && g.is_constant()) {
    const Rational a = f.coeff(0);
    const Rational b = g.coeff(0);
    if (sign(a) != sign(b)) return not_equivalent("constants of opposite sign");
    const ConstantSet c = ConstantSet::single(AlgebraicNumber(Rational(b / a)));
    return equivalent(c, c, "constants of the same sign");
  }
  if (f.is_constant() != g.is_constant()) return not_equivalent("one polynomial is constant, the other is not");
  if (f.degree() != g.degree()) {
    return not_equivalent("degrees differ (" + std::to_string(f.degree()) + " vs " + std::to_string(g.degree()) + ")");
  }

  const CriticalData cf = critical_points(f);
  const CriticalData cg = critical_points(g);
  const std::size_t p = cf.points.size();
  if (p != cg.points.size()) {
    return not_equivalent("critical point counts differ (" + std::to_string(p) + " vs " +
                          std::to_string(cg.points.size()) + ")");
  }
  const bool same_lead = sign(f.leading()) == sign(g.leading());

  if (p == 0) {
    const ConstantSet all = ConstantSet::all_positive();
    return equivalent(same_lead ? all : ConstantSet::empty(), same_lead ? ConstantSet::empty() : all,
                      "no critical points");
  }

  if (p == 1) {
    const auto& t0 = cf.points[0];
    const auto& s0 = cg.points[0];
    if (t0.multiplicity != s0.multiplicity) return not_equivalent("multiplicities at the critical point differ");
    const AlgebraicNumber fv = eval_at(f, t0.location);
    const AlgebraicNumber gv = eval_at(g, s0.location);
    if (fv.sign() != gv.sign()) return not_equivalent("critical values have different signs");
    const ConstantSet c = fv.sign() == 0 ? ConstantSet::all_positive() : ConstantSet::single(gv / fv);
    if (f.degree() % 2 == 1) {
      return equivalent(same_lead ? c : ConstantSet::empty(), same_lead ? ConstantSet::empty() : c,
                        "one critical point, odd degree");
    }
    if (!same_lead) return not_equivalent("one critical point: a minimum against a maximum");
    return equivalent(c, c, std::string("one critical point, both ") + (sign(f.leading()) > 0 ? "minima" : "maxima"));
  }

  const Similarity sim = symbols_similarity(multiplicity_symbol(f), multiplicity_symbol(g));
  if (sim.direct.is_empty() && sim.reverse.is_empty()) return not_equivalent("multiplicity symbols are not similar");
  return equivalent(sim.direct, sim.reverse, "multiplicity symbols are similar");
}

}  // namespace lipclass
