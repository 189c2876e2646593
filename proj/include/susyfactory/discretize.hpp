#ifndef SUSYFACTORY_DISCRETIZE_HPP
#define SUSYFACTORY_DISCRETIZE_HPP

#include <string>
#include <variant>
#include <vector>

#include "susyfactory/diff_operator.hpp"
#include "susyfactory/matrix.hpp"

namespace susy {

/// Oscillator-basis projection: operators are assembled from ladder-algebra
/// x and d/dx matrices in dimension n_build, then truncated to n_keep so the
/// kept block of operator products is exact (n_build >= 2 n_keep).
struct OscillatorBasis {
  int n_keep = 200;
  int n_build = 0;  // 0 -> 2*n_keep + 40
  double omega = 1.0;
  bool extended_precision = false;  // build + solve in long double
};

enum class Domain { full_line, half_line };

/// Second-order central differences on a grid of `points` nodes spanning
/// [x_min, x_max] (Dirichlet beyond the ends). theta != 0 bends the path
/// into the complex plane: x(u) = u + i tan(theta) sqrt(u^2 + 1), whose
/// asymptotes make angles theta and pi - theta with the real axis; this is
/// the contour on which analytically continued potentials such as -x^4 keep
/// square-integrable eigenfunctions. theta = 0 is the real line.
struct FiniteDifference {
  double x_min = -10.0;
  double x_max = 10.0;
  int points = 2001;
  double theta = 0.0;
  Domain domain = Domain::full_line;
};

using Scheme = std::variant<OscillatorBasis, FiniteDifference>;

std::string describe(const Scheme& s);

/// Complex tridiagonal matrix: diag[j], upper[j] = (j,j+1), lower[j] = (j,j-1).
struct TridiagMatrix {
  std::vector<Complex> diag, upper, lower;
  int size() const { return int(diag.size()); }
  bool real_symmetric(double tol = 0.0) const;
  CMat<double> to_dense() const;
};

/// Finite complex matrix realization of a DiffOperator plus provenance.
struct OperatorMatrix {
  std::variant<CMat<double>, CMat<long double>, TridiagMatrix> data;
  std::string scheme_desc;
  std::string provenance;
  int dimension() const;
};

/// Oscillator-basis matrix. Polynomial coefficients use exact ladder algebra;
/// |x| and sign(x) factors use exact half-range Hermite-function integrals.
/// Throws PoleInCoefficient for 1/x-type terms.
OperatorMatrix ho_matrix(const DiffOperator& h, const OscillatorBasis& scheme);

/// Finite-difference matrix, optionally on the bent complex contour.
/// Throws PoleOnGrid for poles on a full-line grid and ThetaOutOfRange for
/// |theta| >= pi/4.
OperatorMatrix fd_matrix(const DiffOperator& h, const FiniteDifference& scheme);

namespace detail {
/// Exact <m| |x| |n> in the omega-scaled oscillator basis (n x n block of the
/// multiplication operator, matrix elements exact to roundoff).
CMat<double> absx_matrix(int n, double omega);
CMat<long double> absx_matrix_ld(int n, long double omega);
/// Exact <m| sign(x) |n>.
CMat<double> sign_matrix(int n, double omega);
CMat<long double> sign_matrix_ld(int n, long double omega);
}  // namespace detail

}  // namespace susy

#endif  // SUSYFACTORY_DISCRETIZE_HPP
