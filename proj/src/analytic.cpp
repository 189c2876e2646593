#include "susyfactory/analytic.hpp"

#include <cmath>

#include "susyfactory/errors.hpp"

namespace susy {

double su11_energy(const Su11Coefficients& c, int n) {
  if (n < 0) throw InputError("level index must be >= 0");
  double rad = c.h11 * c.h22 + c.h12 * c.h12;
  if (rad <= 0.0) throw RadicandNonpositive("h11*h22 + h12^2 must be positive");
  double shift =
      (c.h1 * c.h1 * c.h22 - c.h2 * c.h2 * c.h11 - 2.0 * c.h1 * c.h2 * c.h12) / (4.0 * rad);
  return std::sqrt(rad) * (2.0 * n + 1.0) + shift + c.c0;
}

namespace {

// real constant/linear/quadratic coefficient extraction; throws on anything else
struct Quad {
  double c0 = 0, c1 = 0, c2 = 0;
};

Quad real_quadratic(const CoeffFn& f) {
  Quad q;
  for (const auto& m : f.terms()) {
    if (m.abspow != 0 || m.sgnpow != 0 || m.xpow < 0 || m.xpow > 2 || m.c.imag() != 0.0)
      throw NotQuadraticForm("coefficient outside the quadratic template");
    if (m.xpow == 0) q.c0 = m.c.real();
    if (m.xpow == 1) q.c1 = m.c.real();
    if (m.xpow == 2) q.c2 = m.c.real();
  }
  return q;
}

}  // namespace

Su11Coefficients decompose_su11(const DiffOperator& h) {
  // D-form of the template:
  //   -h11 D^2 + (h1 + 2 h12 x) D + h22 x^2 + h2 x + (c0 + h12)
  Su11Coefficients c;
  Quad f2 = real_quadratic(h.coeff(2));
  if (f2.c1 != 0.0 || f2.c2 != 0.0)
    throw NotQuadraticForm("D^2 coefficient must be constant");
  c.h11 = -f2.c0;
  Quad f1 = real_quadratic(h.coeff(1));
  if (f1.c2 != 0.0) throw NotQuadraticForm("D coefficient must be linear in x");
  c.h1 = f1.c0;
  c.h12 = 0.5 * f1.c1;
  Quad f0 = real_quadratic(h.coeff(0));
  c.h22 = f0.c2;
  c.h2 = f0.c1;
  c.c0 = f0.c0 - c.h12;
  return c;
}

namespace {

double radicand(ShapeInvariantCase c, double lambda) {
  switch (c) {
    case ShapeInvariantCase::IID_minus:
    case ShapeInvariantCase::IIE_plus:
      return 1.0 + 4.0 * lambda * (lambda - 1.0);
    default:
      return 1.0 + 4.0 * lambda * (lambda + 1.0);
  }
}

}  // namespace

double shape_invariant_energy(ShapeInvariantCase c, double lambda, int n) {
  if (n < 0) throw InputError("level index must be >= 0");
  double rad = radicand(c, lambda);
  if (rad < 0.0) throw RadicandNonpositive("1 + 4*lambda*(lambda -+ 1) must be >= 0");
  double root = 0.5 * std::sqrt(rad);
  switch (c) {
    case ShapeInvariantCase::IID_minus:
      return 2.0 * n + 0.5 + root - lambda;
    case ShapeInvariantCase::IID_plus:
      return 2.0 * n + 1.5 + root - lambda;
    case ShapeInvariantCase::IIE_minus:
      return 2.0 * n + 0.5 + root + lambda;
    case ShapeInvariantCase::IIE_plus:
      return 2.0 * n + 1.5 + root + lambda;
  }
  throw Error("unreachable");
}

double ground_state_exponent(ShapeInvariantCase c, double lambda) {
  double prod;
  switch (c) {
    case ShapeInvariantCase::IID_minus:
    case ShapeInvariantCase::IIE_plus:
      prod = lambda * (lambda - 1.0);
      break;
    default:
      prod = lambda * (lambda + 1.0);
      break;
  }
  double rad = 0.25 + prod;
  if (rad < 0.0) throw RadicandNonpositive("0.25 + lambda*(lambda -+ 1) must be >= 0");
  return 0.5 + std::sqrt(rad);
}

double ground_state_eval(ShapeInvariantCase c, double lambda, double x) {
  if (x <= 0.0) throw EvalDomainError("ground state defined on the half line x > 0");
  return std::pow(x, ground_state_exponent(c, lambda)) * std::exp(-0.5 * x * x);
}

GeneratorPair radial_generators(bool iie, double lambda) {
  // W = ix -+ i lambda / x
  const Complex I(0.0, 1.0);
  CoeffFn w = CoeffFn::x_power(1, I) + CoeffFn::x_power(-1, (iie ? I : -I) * lambda);
  return make_generators(w, Convention::TypeI);
}

}  // namespace susy
