#ifndef SUSYFACTORY_ANALYTIC_HPP
#define SUSYFACTORY_ANALYTIC_HPP

#include "susyfactory/generators.hpp"

namespace susy {

/// Quadratic template H = h11 p^2 + h22 x^2 + i h12 (xp + px) + i h1 p + h2 x
/// plus a constant offset c0 absorbed outside the template.
struct Su11Coefficients {
  double h11 = 0, h22 = 0, h12 = 0, h1 = 0, h2 = 0;
  double c0 = 0;
};

/// Closed-form level n of the quadratic template (plus c0):
///   sqrt(h11 h22 + h12^2)(2n+1)
///   + (h1^2 h22 - h2^2 h11 - 2 h1 h2 h12) / (4 (h11 h22 + h12^2)) + c0.
/// Throws RadicandNonpositive when h11 h22 + h12^2 <= 0.
double su11_energy(const Su11Coefficients& c, int n);

/// Match a quadratic DiffOperator onto the template; reassembling the
/// template plus c0 reproduces the operator exactly.
/// Throws NotQuadraticForm for any other shape.
Su11Coefficients decompose_su11(const DiffOperator& h);

enum class ShapeInvariantCase { IID_minus, IID_plus, IIE_minus, IIE_plus };

/// Closed-form spectra of the radial shape-invariant pairs (the 1/2-scaled
/// operators):
///   IID: E_n(-) = 2n + 0.5 + 0.5 sqrt(1+4l(l-1)) - l,
///        E_n(+) = 2n + 1.5 + 0.5 sqrt(1+4l(l+1)) - l
///   IIE: E_n(-) = 2n + 0.5 + 0.5 sqrt(1+4l(l+1)) + l,
///        E_n(+) = 2n + 1.5 + 0.5 sqrt(1+4l(l-1)) + l
/// Valid for lambda > 1 (simplifying exactly to 2n / 2n+2 / 2n+2l+1);
/// the source's stated threshold is lambda > 2.
double shape_invariant_energy(ShapeInvariantCase c, double lambda, int n);

/// Ground-state exponent s in psi0(x) = x^s exp(-x^2/2) for the case.
double ground_state_exponent(ShapeInvariantCase c, double lambda);

/// Pointwise unnormalized psi0(x) on the half line; throws for x <= 0.
double ground_state_eval(ShapeInvariantCase c, double lambda, double x);

/// The unscaled first-order generators of the radial cases
/// (A = -d/dx - x +- lambda/x and partner), built from the operator module.
GeneratorPair radial_generators(bool iie, double lambda);

}  // namespace susy

#endif  // SUSYFACTORY_ANALYTIC_HPP
