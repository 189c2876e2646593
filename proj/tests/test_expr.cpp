#include <cmath>
#include <random>

#include "doctest.h"
#include "susyfactory/errors.hpp"
#include "susyfactory/expr.hpp"

using namespace susy;

namespace {

const Complex I(0.0, 1.0);

// random expression generator for the round-trip / involution properties
ExprPtr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 9);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  switch (pick(rng)) {
    case 0:
      return ExprNode::num(Complex(std::round(coef(rng) * 4) / 4, 0.0));
    case 1:
      return ExprNode::num(I);
    case 2:
    case 3:
      return ExprNode::var();
    case 4:
      return ExprNode::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5:
      return ExprNode::sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6:
      return ExprNode::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7:
      return ExprNode::neg(random_expr(rng, depth - 1));
    case 8: {
      std::uniform_int_distribution<int> e(0, 3);
      return ExprNode::pow(random_expr(rng, depth - 1), e(rng));
    }
    default:
      return ExprNode::abs(ExprNode::var());
  }
}

}  // namespace

TEST_CASE("parse structure matches the grammar") {
  auto e = parse("i*x");
  CHECK(e.root->kind == NodeKind::Mul);
  CHECK(e.root->args[0]->kind == NodeKind::Num);
  CHECK(e.root->args[0]->value == I);
  CHECK(e.root->args[1]->kind == NodeKind::Var);

  auto f = parse("i*k*x^3 - i*g*x^2");
  CHECK(f.root->kind == NodeKind::Sub);
  CHECK(f.root->args[0]->kind == NodeKind::Mul);
  REQUIRE(f.root->args[0]->args.size() == 2);  // (i*k)*x^3 left-assoc
  CHECK(f.root->args[0]->args[1]->kind == NodeKind::Pow);
  CHECK(f.root->args[0]->args[1]->exponent == 3);

  auto g = parse("i*x - i*lam/x");
  CHECK(g.root->kind == NodeKind::Sub);
  CHECK(g.root->args[1]->kind == NodeKind::Div);

  CHECK(parse("|x|").root->kind == NodeKind::Abs);
  CHECK(parse("abs(x)").root->kind == NodeKind::Abs);
  CHECK(equal(parse("|x|"), parse("abs(x)")));

  for (const char* s : {"i*x - i*lam/x", "i*x*abs(x)", "i*k*x^3 - i*g*x^2", "x^-2"}) {
    SuperpotentialExpr e = parse(s);
    CHECK(equal(e, parse(print(e))));
  }
}

TEST_CASE("parse errors carry position and kind") {
  CHECK_THROWS_AS(parse("i*x +"), SyntaxError);
  CHECK_THROWS_AS(parse("foo(x)"), SyntaxError);
  CHECK_THROWS_AS(parse("x^1.5"), SyntaxError);
  CHECK_THROWS_AS(parse("x^(2)"), SyntaxError);
  CHECK_THROWS_AS(parse("(x"), SyntaxError);
}

TEST_CASE("eval") {
  CHECK(eval(parse("i*x"), 2.0) == Complex(0.0, 2.0));
  CHECK(eval(parse("x^2"), 3.0) == Complex(9.0, 0.0));
  ParamEnv env{{"lam", 3.0}};
  CHECK(eval(parse("i*x - i*lam/x"), 1.0, env) == Complex(0.0, -2.0));
  CHECK(eval(parse("abs(x)"), -2.5) == Complex(2.5, 0.0));
  CHECK(eval(parse("sign(x)*x"), -2.0) == Complex(2.0, 0.0));
  CHECK(eval(parse("x^-2"), 2.0) == Complex(0.25, 0.0));
  CHECK_THROWS_AS(eval(parse("1/x"), 0.0), EvalDomainError);
  CHECK_THROWS_AS(eval(parse("g*x"), 1.0), UnboundParameter);
}

TEST_CASE("differentiate matches stated examples") {
  ParamEnv env{{"k", 1.0}};
  // d/dx (i k x^3) = 3 i k x^2
  auto d1 = differentiate(parse("i*k*x^3"));
  CHECK(std::abs(eval(d1, 2.0, env) - Complex(0, 12.0)) < 1e-14);
  // d/dx (x^2) = 2x
  auto d2 = differentiate(parse("x^2"));
  CHECK(equal(d2, parse("2*x")));
  // d/dx (i*|x|^2) = 2 i |x| sign(x) = 2 i x
  auto d3 = differentiate(parse("i*abs(x)^2"));
  for (double x : {0.7, -0.7})
    CHECK(std::abs(eval(d3, x) - Complex(0.0, 2.0 * x)) < 1e-14);
}

TEST_CASE("differentiate agrees with central finite differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.3, 2.5);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 20; ++trial) {
    SuperpotentialExpr e{random_expr(rng, 3)};
    SuperpotentialExpr de = differentiate(e);
    double x = xs(rng);
    const double h = 1e-5;
    try {
      Complex fd = (eval(e, x + h) - eval(e, x - h)) / (2.0 * h);
      Complex sym = eval(de, x);
      double scale = std::max({1.0, std::abs(fd), std::abs(sym)});
      CHECK(std::abs(fd - sym) / scale < 1e-6);
      ++checked;
    } catch (const EvalDomainError&) {
      continue;
    }
  }
  CHECK(checked == 20);
}

TEST_CASE("conj_reflect on the named superpotentials") {
  // W = ix -> W*(-x) = ix
  CHECK(equal(conj_reflect(parse("i*x")), parse("i*x")));
  // W = ix - ig -> W*(-x) = ix + ig
  CHECK(equal(conj_reflect(parse("i*x - i*g")), parse("i*x + i*g")));
  // W = x^2 -> x^2
  CHECK(equal(conj_reflect(parse("x^2")), parse("x^2")));
}

TEST_CASE("pt invariance of the named superpotentials") {
  CHECK(is_pt_invariant(parse("i*x")));
  CHECK_FALSE(is_pt_invariant(parse("i*x - i*g"), {{"g", 1.0}}));
  CHECK(is_pt_invariant(parse("i*x - i*g"), {{"g", 0.0}}));  // g = 0 degenerate
  CHECK(is_pt_invariant(parse("x^2")));
  CHECK(is_pt_invariant(parse("i*x + i*lam/x"), {{"lam", 3.0}}));
  CHECK(is_pt_invariant(parse("i*x - i*lam/x"), {{"lam", 3.0}}));
  CHECK(is_pt_invariant(parse("i*x*abs(x)")));
  CHECK_FALSE(is_pt_invariant(parse("i*k*x^3 - i*g*x^2"), {{"k", 1.0}, {"g", 1.0}}));
}

TEST_CASE("property: round trip, involution, reflect identity") {
  std::mt19937 rng(42);
  int involution_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    SuperpotentialExpr e{random_expr(rng, 4)};
    // parse(print(e)) structurally equals e
    SuperpotentialExpr back = parse(print(e));
    CHECK(equal(e, back));
    // conj_reflect is an involution
    SuperpotentialExpr twice = conj_reflect(conj_reflect(e));
    CHECK(equal(e, twice));
    ++involution_checked;
    // eval(conj_reflect(e), x) = conj(eval(e, -x)) at real x
    std::uniform_real_distribution<double> xs(-2.0, 2.0);
    SuperpotentialExpr r = conj_reflect(e);
    for (int k = 0; k < 3; ++k) {
      double x = xs(rng);
      try {
        Complex lhs = eval(r, x);
        Complex rhs = std::conj(eval(e, -x));
        double scale = std::max(1.0, std::abs(rhs));
        CHECK(std::abs(lhs - rhs) / scale < 1e-12);
      } catch (const EvalDomainError&) {
        continue;
      }
    }
  }
  CHECK(involution_checked == 500);
}
