#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "lipclass/classify2d.hpp"
#include "lipclass/cli.hpp"
#include <json.hpp>
#include "lipclass/errors.hpp"

using namespace lipclass;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_position(const std::string& text, int vars) {
  try {
    parse_polynomial(text, vars);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST(ParsePolynomial, WorkedExample) {
  const PolynomialExpr e = parse_polynomial("X*Y^4 + 8*X^4*Y^2 + 16*X^7", 2);
  const std::vector<Term> want = {{16, 7, 0}, {8, 4, 2}, {1, 1, 4}};
  EXPECT_EQ(e.terms, want);
}

TEST(ParsePolynomial, Univariate) {
  EXPECT_EQ(parse_polynomial("t^4+8*t^2+16", 1).univariate(), RationalPoly({16, 0, 8, 0, 1}));
  EXPECT_EQ(parse_polynomial("3/2*t - t", 1).univariate(), RationalPoly({0, make_rational(1, 2)}));
  EXPECT_EQ(parse_polynomial("0.25 T^2 - 1.5", 1).univariate(), RationalPoly({make_rational(-3, 2), 0, make_rational(1, 4)}));
  EXPECT_EQ(parse_polynomial("  -x + 2x ", 1).univariate(), RationalPoly({0, 1}));
  EXPECT_TRUE(parse_polynomial("t - t", 1).univariate().is_zero());
}

TEST(ParsePolynomial, ImplicitProductsAndCase) {
  const PolynomialExpr e = parse_polynomial("2x y^2 + 3 * Y^2 * X - .5", 2);
  const std::vector<Term> want = {{5, 1, 2}, {make_rational(-1, 2), 0, 0}};
  EXPECT_EQ(e.terms, want);
}

TEST(ParsePolynomial, Errors) {
  EXPECT_EQ(error_position("t^2 +", 1), 5u);
  EXPECT_EQ(error_position("t^-2", 1), 2u);
  EXPECT_EQ(error_position("t^1.5", 1), 3u);
  EXPECT_EQ(error_position("X*Y", 1), 2u);
  EXPECT_EQ(error_position("t*X", 1), 2u);
  EXPECT_EQ(error_position("X + t", 2), 4u);
  EXPECT_EQ(error_position("3/0*X", 2), 0u);
  EXPECT_EQ(error_position("2 ** X", 2), 3u);
  EXPECT_EQ(error_position("(X)", 2), 0u);
  EXPECT_EQ(error_position("", 2), 0u);
}

TEST(ParsePolynomial, RoundTrip) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const int vars = 1 + static_cast<int>(rng() % 2);
    std::vector<Term> terms;
    const int n = 1 + static_cast<int>(rng() % 5);
    std::string text;
    for (int k = 0; k < n; ++k) {
      const Rational c = gen::nonzero_rational(rng, 20, 7);
      const long xe = static_cast<long>(rng() % 6), ye = vars == 2 ? static_cast<long>(rng() % 6) : 0;
      text += (k ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : "")) + Rational(abs(c)).get_str() +
              (xe ? "*X^" + std::to_string(xe) : "") + (ye ? "*Y^" + std::to_string(ye) : "");
    }
    if (vars == 1)
      for (auto& ch : text)
        if (ch == 'X') ch = 't';
    const PolynomialExpr first = parse_polynomial(text, vars);
    const PolynomialExpr second = parse_polynomial(to_string(first), vars);
    EXPECT_EQ(first.terms, second.terms) << text << " -> " << to_string(first);
  }
}

TEST(Cli, WorkedExample) {
  const Result r = invoke({"classify2d", "X*Y^4+8*X^4*Y^2+16*X^7", "X*Y^4+18*X^4*Y^2+81*X^7", "--beta", "3/2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("condition (b)"), std::string::npos);
  EXPECT_NE(r.out.find("c = 81/16"), std::string::npos);
}

TEST(Cli, WorkedExampleWitness) {
  const Result r = invoke({"classify2d", "X*Y^4+8*X^4*Y^2+16*X^7", "X*Y^4+18*X^4*Y^2+81*X^7", "--beta", "3/2",
                           "--witness", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["witness"]["success"].get<bool>());
  EXPECT_LE(j["witness"]["max_rel_residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["constants"][0]["value"], "81/16");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"classify1d", "t^2", "t^2+1"}).code, 1);
  EXPECT_EQ(invoke({"classify1d", "t^3-3t", "t^3-12t"}).code, 0);
  EXPECT_EQ(invoke({"classify2d", "2*X^4", "X*Y", "--beta", "3/2"}).code, 3);
  EXPECT_EQ(invoke({"classify2d", "2*X^4", "X*Y^2", "--beta", "3/2"}).code, 1);
  EXPECT_EQ(invoke({"classify2d", "2*X^4", "-3*X^4", "--beta", "3/2"}).code, 1);
  EXPECT_EQ(invoke({"classify2d", "2*X^3", "-5*X^3", "--beta", "3/2"}).code, 0);
  EXPECT_EQ(invoke({"classify2d", "2*X^4", "3*X^5", "--beta", "3/2"}).code, 2);
  EXPECT_EQ(invoke({"classify2d", "X^2", "X^2", "--beta", "1/2"}).code, 3);
  EXPECT_EQ(invoke({"classify2d", "X^2", "X^2", "--beta", "4/2"}).code, 0);  // reduces to 2
  EXPECT_EQ(invoke({"classify2d", "X^2", "X^2"}).code, 3);
  EXPECT_EQ(invoke({"classify1d", "0", "t"}).code, 3);
  EXPECT_EQ(invoke({"classify1d", "t^2+"}).code, 3);
  EXPECT_EQ(invoke({"frobnicate"}).code, 3);
  EXPECT_EQ(invoke({}).code, 3);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"symbol", "-t^4+8*t^2-16"}).code, 0);
  EXPECT_EQ(invoke({"roots", "t^3-2t"}).code, 0);
}

TEST(Cli, NegativeLeadingTerms) {
  const Result r = invoke({"classify1d", "-t^2", "-4*t^2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(invoke({"symbol", "-t^3"}).code, 0);
}

TEST(Cli, ErrorsGoToStderr) {
  const Result r = invoke({"classify1d", "t^^2", "t"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("position"), std::string::npos);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "lipclass_out.json";
  const Result r = invoke({"classify1d", "t^3-3t", "t^3-12t", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path), slurp(std::string(LIPCLASS_GOLDEN_DIR) + "/classify1d_cubic.json"));
}

TEST(Cli, Golden) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"classify2d_worked_example",
       {"classify2d", "X*Y^4+8*X^4*Y^2+16*X^7", "X*Y^4+18*X^4*Y^2+81*X^7", "--beta", "3/2", "--json"}},
      {"classify2d_monomial_even", {"classify2d", "2*X^4", "-3*X^4", "--beta", "3/2", "--json"}},
      {"classify2d_no_criterion",
       {"classify2d", "-3*X^7*Y^2+X*Y^6", "-9*X^7*Y^2+3*X^4*Y^4+X*Y^6", "--beta", "3/2", "--json"}},
      {"classify1d_cubic", {"classify1d", "t^3-3t", "t^3-12t", "--json"}},
      {"symbol_worked_example", {"symbol", "-t^4+8*t^2-16", "--json"}},
      {"roots_cubic", {"roots", "t^3-2t", "--json"}},
  };
  for (const auto& [name, args] : cases) {
    const Result r = invoke(args);
    EXPECT_EQ(r.out, slurp(std::string(LIPCLASS_GOLDEN_DIR) + "/" + name + ".json")) << name;
  }
}

TEST(Cli, ExitCodeMatchesStatus) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    const Beta b = gen::beta(rng);
    const QuasiHomogPoly F = gen::quasihomog(rng, b, 2);
    const QuasiHomogPoly G = rng() % 2 ? gen::quasihomog(rng, b, 2)
                                       : gen::rescaled(F, abs(gen::nonzero_rational(rng, 4, 2)),
                                                       gen::nonzero_rational(rng, 3, 2), gen::nonzero_rational(rng, 3, 2));
    const Verdict2D v = classify(F, G);
    const int want = v.status == Status::Equivalent ? 0 : v.status == Status::NotEquivalent ? 1 : 2;
    const Result r = invoke({"classify2d", F.to_string(), G.to_string(), "--beta", b.to_string(), "--json"});
    EXPECT_EQ(r.code, want) << F.to_string() << " | " << G.to_string() << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["status"], to_string(v.status));
  }
}
