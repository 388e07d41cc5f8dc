#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lipclass/classify2d.hpp"
#include "lipclass/cli.hpp"
#include "lipclass/errors.hpp"
#include "lipclass/lipeq1d.hpp"
#include "lipclass/witness.hpp"

namespace lipclass {

namespace {

using nlohmann::json;

std::string approx_text(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string describe(const AlgebraicNumber& a) {
  if (a.is_rational()) return a.to_string();
  return a.to_string() + " ~ " + approx_text(a.approx());
}

json to_json(const AlgebraicNumber& a) {
  json j;
  j["defining"] = to_string(a.defining());
  j["interval"] = {a.interval().lo.get_str(), a.interval().hi.get_str()};
  j["approx"] = a.approx();
  if (a.is_rational()) j["value"] = a.rational_value().get_str();
  return j;
}

json to_json(const ConstantSet& s) {
  json j;
  switch (s.kind()) {
    case ConstantSet::Kind::Empty: j["kind"] = "empty"; break;
    case ConstantSet::Kind::AllPositive: j["kind"] = "all_positive"; break;
    case ConstantSet::Kind::Finite: j["kind"] = "finite"; break;
  }
  j["members"] = json::array();
  for (const auto& m : s.members()) j["members"].push_back(to_json(m));
  return j;
}

json to_json(const ConjugacyReport& r) {
  return {{"max_rel_residual", static_cast<double>(r.max_rel_residual)},
          {"lip_ratio_min", static_cast<double>(r.lip_ratio_min)},
          {"lip_ratio_max", static_cast<double>(r.lip_ratio_max)},
          {"strip_lipschitz_estimate", static_cast<double>(r.strip_lipschitz_estimate)},
          {"L", static_cast<double>(r.L)},
          {"points", r.points},
          {"pairs", r.pairs},
          {"success", r.success}};
}

Beta parse_beta(std::string text) {
  text.erase(0, text.find_first_not_of(' '));
  Rational b;
  try {
    b = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw DomainError("--beta expects r/s, got '" + text + "'");
  }
  return Beta(b.get_num().get_si(), b.get_den().get_si());
}

RationalPoly univariate(const std::string& text) {
  const RationalPoly p = parse_polynomial(text, 1).univariate();
  if (p.is_zero()) throw DomainError("zero polynomial is not admissible");
  return p;
}

// Output of one command: text, optional JSON and exit code.
struct Outcome {
  int code = 0;
  std::string text;
  json data;
};

Outcome classify1d(const std::string& fs, const std::string& gs) {
  const RationalPoly f = univariate(fs), g = univariate(gs);
  const Verdict1D v = equivalence_1d(f, g);
  Outcome o;
  o.code = v.equivalent ? 0 : 1;
  std::ostringstream os;
  os << "f = " << to_string(f) << "\n"
     << "g = " << to_string(g) << "\n"
     << (v.equivalent ? "equivalent" : "not equivalent") << ": " << v.reason << "\n"
     << "increasing phi: c in " << v.direct.to_string() << "\n"
     << "decreasing phi: c in " << v.reverse.to_string() << "\n";
  o.text = os.str();
  o.data = {{"status", v.equivalent ? "equivalent" : "not equivalent"},
            {"reason", v.reason},
            {"f", to_string(f)},
            {"g", to_string(g)},
            {"orientation", {{"increasing", to_json(v.direct)}, {"decreasing", to_json(v.reverse)}}}};
  return o;
}

struct WitnessOptions {
  bool enabled = false;
  int grid = 64;
  double tol = 1e-9;
};

Outcome classify2d(const std::string& Fs, const std::string& Gs, const std::string& beta_text,
                   const WitnessOptions& wopt, std::ostream& err) {
  const Beta beta = parse_beta(beta_text);
  const QuasiHomogPoly F = from_monomials(parse_polynomial(Fs, 2).monomials(), beta);
  const QuasiHomogPoly G = from_monomials(parse_polynomial(Gs, 2).monomials(), beta);
  const Verdict2D v = classify(F, G);

  Outcome o;
  o.code = v.status == Status::Equivalent ? 0 : v.status == Status::NotEquivalent ? 1 : 2;
  o.text = explain(v);
  json constants = json::array();
  json orientation = nullptr;
  if (v.choice) {
    constants.push_back(to_json(v.choice->c1));
    constants.push_back(to_json(v.choice->c2));
    orientation = {{"lambda", v.certificate->pairing == Pairing::Direct ? "positive" : "negative"},
                   {"phi1", to_string(v.choice->o1)},
                   {"phi2", to_string(v.choice->o2)}};
  }
  o.data = {{"status", to_string(v.status)},
            {"reason", to_string(v.reason)},
            {"reason_text", v.text},
            {"beta", beta.to_string()},
            {"F", F.to_string()},
            {"G", G.to_string()},
            {"constants", constants},
            {"orientation", orientation},
            {"conditions", {{"a", v.conditions.a}, {"b", v.conditions.b}, {"c", v.conditions.c}}}};

  if (wopt.enabled && v.status == Status::Equivalent) {
    GridSpec grid;
    grid.x_count = grid.t_count = wopt.grid;
    const ConjugacyReport r = verify_conjugacy(F, G, build_witness(v), grid, wopt.tol);
    std::ostringstream os;
    os << "witness: max relative residual " << static_cast<double>(r.max_rel_residual) << ", Lipschitz ratios in ["
       << static_cast<double>(r.lip_ratio_min) << ", " << static_cast<double>(r.lip_ratio_max) << "], strip estimate "
       << static_cast<double>(r.strip_lipschitz_estimate) << ", L = " << static_cast<double>(r.L) << ", "
       << (r.success ? "verified" : "NOT verified") << "\n";
    o.text += os.str();
    o.data["witness"] = to_json(r);
    if (!r.success) err << "warning: witness verification failed at tolerance " << wopt.tol << "\n";
  } else if (wopt.enabled) {
    o.text += "witness: not built, verdict is not Equivalent\n";
  }
  return o;
}

Outcome symbol(const std::string& fs) {
  const RationalPoly f = univariate(fs);
  Outcome o;
  std::ostringstream os;
  os << "f = " << to_string(f) << "\n";
  json points = json::array();
  json sym = nullptr;
  if (f.is_constant()) {
    os << "constant: no critical points\n";
  } else {
    const CriticalData cd = critical_points(f);
    os << "critical points: " << cd.points.size() << "\n";
    for (const auto& cp : cd.points) {
      const AlgebraicNumber value = eval_at(f, cp.location);
      os << "  t = " << describe(cp.location) << ", multiplicity " << cp.multiplicity << ", value " << describe(value)
         << "\n";
      points.push_back({{"location", to_json(cp.location)}, {"multiplicity", cp.multiplicity}, {"value", to_json(value)}});
    }
    if (cd.points.size() >= 2) {
      const MultiplicitySymbol s = multiplicity_symbol(f);
      os << "symbol: ((";
      json values = json::array(), mults = json::array();
      for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s.values[i].to_string();
        values.push_back(to_json(s.values[i]));
        mults.push_back(s.mults[i]);
      }
      os << "),(";
      for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.mults[i];
      os << "))\n";
      sym = {{"values", values}, {"multiplicities", mults}};
    } else {
      os << "symbol: undefined with fewer than two critical points\n";
    }
  }
  o.text = os.str();
  o.data = {{"f", to_string(f)}, {"critical_points", points}, {"symbol", sym}};
  return o;
}

Outcome roots(const std::string& ps) {
  const RationalPoly p = univariate(ps);
  Outcome o;
  std::ostringstream os;
  os << "p = " << to_string(p) << "\n";
  json list = json::array();
  const auto isolated = isolate_real_roots(p);
  os << "real roots: " << isolated.size() << "\n";
  if (!isolated.empty()) {
    const RationalPoly sq = squarefree_part(p);
    for (const auto& r : isolated) {
      const AlgebraicNumber a = make_algebraic(sq, r.interval);
      os << "  " << describe(a) << ", multiplicity " << r.multiplicity << "\n";
      list.push_back({{"root", to_json(a)}, {"multiplicity", r.multiplicity}});
    }
  }
  o.text = os.str();
  o.data = {{"p", to_string(p)}, {"roots", list}};
  return o;
}

// Arguments such as "-t^2+1" would be taken for options; a leading space
// keeps them positional and the polynomial parser ignores it.
std::vector<std::string> shield_negative_positionals(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(a.begin(), ' ');
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lipschitz classification of univariate and quasihomogeneous polynomials", "lipclass"};
  app.require_subcommand(1);

  bool json_out = false;
  std::string out_file;
  std::string a1, a2, beta_text;
  WitnessOptions wopt;

  auto* c1 = app.add_subcommand("classify1d", "Lipschitz equivalence of univariate polynomials f, g");
  c1->add_option("f", a1, "first polynomial in t")->required();
  c1->add_option("g", a2, "second polynomial in t")->required();
  c1->add_flag("--json", json_out, "print JSON");
  c1->add_option("--out", out_file, "also write JSON to this file");

  auto* c2 = app.add_subcommand("classify2d", "R-semialgebraic Lipschitz classification of quasihomogeneous F, G");
  c2->add_option("F", a1, "first polynomial in X, Y")->required();
  c2->add_option("G", a2, "second polynomial in X, Y")->required();
  c2->add_option("--beta", beta_text, "weight r/s with r > s > 0")->required();
  c2->add_flag("--json", json_out, "print JSON");
  c2->add_flag("--witness", wopt.enabled, "build the conjugating map and verify it numerically");
  c2->add_option("--grid", wopt.grid, "grid points per axis for --witness")->check(CLI::Range(2, 4096));
  c2->add_option("--tol", wopt.tol, "residual tolerance for --witness")->check(CLI::PositiveNumber);
  c2->add_option("--out", out_file, "also write JSON to this file");

  auto* c3 = app.add_subcommand("symbol", "critical points and multiplicity symbol of f");
  c3->add_option("f", a1, "polynomial in t")->required();
  c3->add_flag("--json", json_out, "print JSON");
  c3->add_option("--out", out_file, "also write JSON to this file");

  auto* c4 = app.add_subcommand("roots", "isolated real roots of p");
  c4->add_option("p", a1, "polynomial in t")->required();
  c4->add_flag("--json", json_out, "print JSON");
  c4->add_option("--out", out_file, "also write JSON to this file");

  std::vector<std::string> args = shield_negative_positionals(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  try {
    Outcome o;
    if (*c1)
      o = classify1d(a1, a2);
    else if (*c2)
      o = classify2d(a1, a2, beta_text, wopt, err);
    else if (*c3)
      o = symbol(a1);
    else
      o = roots(a1);
    out << (json_out ? o.data.dump(2) + "\n" : o.text);
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) {
        err << "error: cannot write " << out_file << "\n";
        return 3;
      }
      f << o.data.dump(2) << "\n";
    }
    return o.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace lipclass
