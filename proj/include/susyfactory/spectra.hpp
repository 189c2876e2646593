#ifndef SUSYFACTORY_SPECTRA_HPP
#define SUSYFACTORY_SPECTRA_HPP

#include "susyfactory/discretize.hpp"

namespace susy {

/// Eigenvalues sorted ascending by real part (ties by imaginary part),
/// with convergence metadata.
struct Spectrum {
  std::vector<Complex> values;
  std::string scheme;
  int converged_count = 0;
  double stability_digits = 0.0;
  bool solver_converged = true;   // QR iteration completed
  bool not_converged = false;     // converge() agreement flag
  int dropped = 0;                // filter_physical bookkeeping
  double max_residual = -1.0;     // eigenpair residual subsample; -1 = unchecked
};

/// Deterministic total order used everywhere spectra are compared or printed.
void sort_spectrum(std::vector<Complex>& v);

/// All eigenvalues of the matrix. Real symmetric tridiagonal input takes the
/// O(n^2) QL path; everything else goes через balancing + Hessenberg + shifted
/// QR. A subsample of eigenpair residuals is validated for small dense input.
Spectrum eigenvalues(const OperatorMatrix& m);

/// Diagonalize h under each scheme (resolution order), flag the lowest k
/// eigenvalues converged iff successive schemes agree within tol, and return
/// the finest spectrum. Never throws on disagreement; sets not_converged.
Spectrum converge(const DiffOperator& h, const std::vector<Scheme>& schemes, double tol,
                  int k);

/// Retains eigenvalues with |Im| <= max_imag; records the dropped count.
Spectrum filter_physical(const Spectrum& s, double max_imag);

/// Number of worker threads honoring SUSYFACTORY_THREADS.
int thread_budget();

}  // namespace susy

#endif  // SUSYFACTORY_SPECTRA_HPP
