// Symbolic expression layer: canonical simplification, differentiation,
// exact/floating evaluation, parsing/printing, matrix inverses, and the
// closed-form exponentials of adjoint matrices (every spectrum case).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lieb/exp_adjoint.hpp"
#include "lieb/expr.hpp"
#include "lieb/lie_algebra.hpp"

using namespace lieb;

namespace {

bool same(const Expr& a, const Expr& b) {
  return expr_cmp(simplify(a), simplify(b)) == 0;
}

bool same(const Expr& a, const std::string& b) { return same(a, parse_expr(b)); }

Rat at_zero(const Expr& e) {
  auto v = eval_exact(e, {{"x1", Rat(0)}, {"x2", Rat(0)}, {"x3", Rat(0)}});
  REQUIRE(v.has_value());
  return *v;
}

}  // namespace

TEST_CASE("canonical simplification") {
  Expr x = esym("x1"), y = esym("x2");

  CHECK(is_zero(x - x));
  CHECK(same(x + x, "2*x1"));
  CHECK(same(parse_expr("2*x1 + 3*x1"), "5*x1"));
  CHECK(same(x * x, "x1^2"));
  CHECK(same(simplify(epow(epow(x, 2), 3)), "x1^6"));
  CHECK(same(parse_expr("x1*x2 - x2*x1"), "0"));
  CHECK(same((x + y) * enumber(2) - (x + y) - (x + y), "0"));

  // functions fold only at zero arguments
  CHECK(same(parse_expr("exp(0)"), "1"));
  CHECK(same(parse_expr("cos(0)"), "1"));
  CHECK(same(parse_expr("sin(0)"), "0"));
  CHECK(same(parse_expr("tanh(0)"), "0"));
  CHECK(expr_str(parse_expr("sin(2)")) == "sin(2)");

  // exponentials merge multiplicatively
  CHECK(same(parse_expr("exp(x1)*exp(2*x1)"), "exp(3*x1)"));
  CHECK(same(parse_expr("exp(x1)^2"), "exp(2*x1)"));
  CHECK(same(parse_expr("exp(x1)*exp(-x1)"), "1"));
  CHECK(same(parse_expr("exp(x1 + x2)*exp(x1 - x2)"), "exp(2*x1)"));

  // products distribute over sums: flat expanded normal form
  CHECK(same(simplify(epow(x + enumber(1), 2)), "1 + 2*x1 + x1^2"));
  CHECK(same(parse_expr("(x1 + x2)*(x1 - x2)"), "x1^2 - x2^2"));
  CHECK(same(parse_expr("(exp(x1) + 1)*(exp(x1) - 1) - exp(2*x1)"), "-1"));
  // negative powers of sums stay atomic
  Expr q = parse_expr("1/(1 + x1)");
  CHECK(expr_str(q) == "1/(1 + x1)");
}

TEST_CASE("printer and parser round-trip") {
  const char* cases[] = {
      "x1",
      "1 + x1",
      "-x1/2",
      "3*x1/2",
      "exp(2*x1)",
      "a/2 + 1/(2*a)",
      "exp(-x1 + a*x1)",
      "1/x1",
      "x1^2*x2",
      "-1/2 + exp(2*x1)/2",
      "cos(x2)*sin(x3)",
  };
  for (const char* c : cases) {
    Expr e = parse_expr(c);
    CHECK(expr_str(e) == c);
    CHECK(expr_cmp(parse_expr(expr_str(e)), e) == 0);
  }
  CHECK_THROWS_AS(parse_expr("x1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("exp x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("(x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expr("x1^x2"), std::invalid_argument);

  CHECK(expr_latex(parse_expr("exp(2*x1)")) == "e^{2 x_{1}}");
  CHECK(expr_latex(parse_expr("x1/2")) == "\\frac{x_{1}}{2}");
  CHECK(expr_latex(parse_expr("sin(x2)")) == "\\sin\\left(x_{2}\\right)");
}

TEST_CASE("differentiation rules") {
  CHECK(same(diff(parse_expr("x1^2*exp(2*x1)"), "x1"),
             "2*x1*exp(2*x1) + 2*x1^2*exp(2*x1)"));
  CHECK(same(diff(parse_expr("tan(x1)"), "x1"), "1 + tan(x1)^2"));
  CHECK(same(diff(parse_expr("tanh(x1)"), "x1"), "1 - tanh(x1)^2"));
  CHECK(same(diff(parse_expr("sin(x1^2)"), "x1"), "2*x1*cos(x1^2)"));
  CHECK(same(diff(parse_expr("cos(x1)"), "x1"), "-sin(x1)"));
  CHECK(same(diff(parse_expr("cosh(x1)"), "x1"), "sinh(x1)"));
  CHECK(same(diff(parse_expr("1/x1"), "x1"), "-1/x1^2"));
  CHECK(is_zero(diff(parse_expr("exp(2*x2)"), "x1")));
  // quotient through the inverse-power rule
  CHECK(same(diff(parse_expr("(exp(2*x1) - 1)/2"), "x1"), "exp(2*x1)"));
}

TEST_CASE("exact and floating evaluation") {
  Expr e = parse_expr("(exp(2*x1) - 1)/2");
  CHECK(at_zero(e) == 0);
  CHECK(at_zero(parse_expr("cos(x2)*cosh(x3)")) == 1);
  CHECK(!eval_exact(parse_expr("exp(x1)"), {{"x1", Rat(1)}}).has_value());
  CHECK(!eval_exact(parse_expr("x1 + x2"), {{"x1", Rat(1)}}).has_value());
  CHECK(!eval_exact(parse_expr("1/x1"), {{"x1", Rat(0)}}).has_value());
  CHECK(eval_exact(parse_expr("(1 + x1)^2"), {{"x1", rat(1, 2)}}) == rat(9, 4));

  double v = eval_double(e, {{"x1", 0.25}});
  CHECK(v == doctest::Approx((std::exp(0.5) - 1) / 2).epsilon(1e-14));
  CHECK_THROWS_AS(eval_double(e, {{"x2", 1.0}}), std::invalid_argument);

  // derivative at a point agrees with a central difference
  Expr f = parse_expr("exp(x1)*sin(2*x1)");
  Expr df = diff(f, "x1");
  double h = 1e-6, x0 = 0.7;
  double fd = (eval_double(f, {{"x1", x0 + h}}) - eval_double(f, {{"x1", x0 - h}})) / (2 * h);
  CHECK(eval_double(df, {{"x1", x0}}) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("scalar field embeds into expressions") {
  Scalar s = scalar_parse("(a^2 + 1)/(2*a)");
  Expr e = scalar_to_expr(s);
  CHECK(expr_str(e) == "a/2 + 1/(2*a)");
  CHECK(eval_exact(e, {{"a", Rat(3)}}) == s.eval(Rat(3)));
  CHECK(scalar_to_expr(Scalar(0)) != nullptr);
  CHECK(is_zero(scalar_to_expr(Scalar(0))));
  CHECK(same(scalar_to_expr(scalar_parse("-1/2")), "-1/2"));
}

TEST_CASE("expression matrices: product, determinant, inverse") {
  // diag(1, e^x, e^x) — the exponential of diag(0,1,1)
  ExprMat3 E;
  E[0][0] = enumber(1);
  E[1][1] = parse_expr("exp(x1)");
  E[2][2] = parse_expr("exp(x1)");
  CHECK(same(expr_det(E), "exp(2*x1)"));
  ExprMat3 Einv = expr_inverse(E);
  CHECK(same(Einv[1][1], "exp(-x1)"));
  ExprMat3 P = E * Einv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(same(P[i][j], i == j ? "1" : "0"));

  ExprMat3 singular;  // all zero
  CHECK_THROWS_AS(expr_inverse(singular), std::domain_error);
}

TEST_CASE("adjoint exponential: nilpotent (Heisenberg)") {
  LieAlgebra g = bianchi("II");
  auto X = adjoint_matrices(g);
  CHECK(X[0].is_zero());
  CHECK(spectrum_case(X[1]) == SpectrumCase::Nilpotent);
  ExprMat3 E = exp_adjoint(X[1], "x2");
  CHECK(same(E[2][0], "-x2"));
  for (int i = 0; i < 3; ++i) CHECK(same(E[i][i], "1"));
  CHECK(is_zero(E[0][2]));
}

TEST_CASE("adjoint exponential: double root (types V and IV)") {
  auto XV = adjoint_matrices(bianchi("V"));
  CHECK(spectrum_case(XV[0]) == SpectrumCase::DoubleRoot);
  ExprMat3 EV = exp_adjoint(XV[0], "x1");
  CHECK(same(EV[0][0], "1"));
  CHECK(same(EV[1][1], "exp(x1)"));
  CHECK(same(EV[2][2], "exp(x1)"));
  CHECK(is_zero(EV[1][2]));

  auto XIV = adjoint_matrices(bianchi("IV"));
  CHECK(spectrum_case(XIV[0]) == SpectrumCase::DoubleRoot);
  ExprMat3 EIV = exp_adjoint(XIV[0], "x1");
  CHECK(same(EIV[1][1], "exp(x1)"));
  CHECK(same(EIV[1][2], "-x1*exp(x1)"));
  CHECK(same(EIV[2][2], "exp(x1)"));
  CHECK(is_zero(EIV[2][1]));
}

TEST_CASE("adjoint exponential: eigenvalues {0,0,p} (type III)") {
  auto X = adjoint_matrices(bianchi("III"));
  CHECK(spectrum_case(X[0]) == SpectrumCase::ZeroZeroP);
  ExprMat3 E = exp_adjoint(X[0], "x1");
  CHECK(same(E[1][1], "1/2 + exp(2*x1)/2"));
  CHECK(same(E[1][2], "-1/2 + exp(2*x1)/2"));
  CHECK(same(E[2][1], "-1/2 + exp(2*x1)/2"));
  CHECK(same(E[2][2], "1/2 + exp(2*x1)/2"));
  CHECK(same(E[0][0], "1"));

  // group law, numerically: E(s)E(t) = E(s+t)
  ExprMat3 Es = exp_adjoint(X[0], "s"), Et = exp_adjoint(X[0], "t");
  ExprMat3 Pr = Es * Et;
  std::map<std::string, double> pt{{"s", 0.3}, {"t", 0.7}, {"x1", 1.0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(eval_double(Pr[i][j], pt) ==
            doctest::Approx(eval_double(E[i][j], pt)).epsilon(1e-12));
}

TEST_CASE("adjoint exponential: distinct real roots (type VI_a, symbolic a)") {
  auto X = adjoint_matrices(bianchi("VI_a"));
  CHECK(spectrum_case(X[0]) == SpectrumCase::RealDistinct);
  ExprMat3 E = exp_adjoint(X[0], "x1");
  CHECK(same(E[1][1], "exp((a - 1)*x1)/2 + exp((a + 1)*x1)/2"));
  CHECK(same(E[1][2], "-exp((a - 1)*x1)/2 + exp((a + 1)*x1)/2"));
  CHECK(expr_cmp(E[2][1], E[1][2]) == 0);
  CHECK(same(E[0][0], "1"));
  CHECK(is_zero(E[0][1]));

  // exact value at the origin is the identity
  std::map<std::string, Rat> origin{{"x1", Rat(0)}, {"a", rat(1, 2)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(eval_exact(E[i][j], origin) == Rat(i == j ? 1 : 0));
}

TEST_CASE("adjoint exponential: complex pair (types IX and VII_a)") {
  auto XIX = adjoint_matrices(bianchi("IX"));
  CHECK(spectrum_case(XIX[0]) == SpectrumCase::ComplexPair);
  ExprMat3 R = exp_adjoint(XIX[0], "x1");
  CHECK(same(R[0][0], "1"));
  CHECK(same(R[1][1], "cos(x1)"));
  CHECK(same(R[1][2], "-sin(x1)"));
  CHECK(same(R[2][1], "sin(x1)"));
  CHECK(same(R[2][2], "cos(x1)"));

  auto XA = adjoint_matrices(bianchi("VII_a"));
  CHECK(spectrum_case(XA[0]) == SpectrumCase::ComplexPair);
  ExprMat3 E = exp_adjoint(XA[0], "x1");
  CHECK(same(E[1][1], "exp(a*x1)*cos(x1)"));
  CHECK(same(E[1][2], "-exp(a*x1)*sin(x1)"));
  CHECK(same(E[2][1], "exp(a*x1)*sin(x1)"));

  // d/dx exp(xM) = M exp(xM), symbolically
  ExprMat3 ME = mat_to_exprmat(XA[0]) * E;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(expr_cmp(diff(E[i][j], "x1"), ME[i][j]) == 0);
}

TEST_CASE("adjoint exponential: unsupported spectra are loud") {
  Mat3 nonsing = Mat3::identity();
  CHECK_THROWS_WITH_AS(exp_adjoint(nonsing, "x1"),
                       doctest::Contains("unsupported spectrum"),
                       std::domain_error);

  Mat3 bad;  // singular, eigenvalues 0, 1 +- sqrt(2): disc 8 is not a square
  bad[1][1] = Scalar(1);
  bad[1][2] = Scalar(1);
  bad[2][1] = Scalar(2);
  bad[2][2] = Scalar(1);
  CHECK_THROWS_WITH_AS(exp_adjoint(bad, "x1"),
                       doctest::Contains("unsupported spectrum"),
                       std::domain_error);
}
