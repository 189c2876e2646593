#ifndef SUSYFACTORY_VERIFY_HPP
#define SUSYFACTORY_VERIFY_HPP

#include <string>
#include <vector>

#include "susyfactory/spectra.hpp"

namespace susy {

struct MatchedPair {
  int index_plus = 0;
  int index_minus = 0;
  double delta = 0.0;
};

/// Classification of the relation between computed spectra.
struct PairingReport {
  bool susy_shift = false;
  bool iso_spectral = false;
  bool twins = false;
  bool quadruplet = false;
  bool ground_zero = false;
  std::vector<MatchedPair> pairs;
  Complex ground_energy{0.0, 0.0};
  double tolerance = 0.0;
  int depth = 0;
  std::string relation() const;  // "susy_shift" | "iso_spectral" | ... | "none"
  std::string to_json() const;
};

/// Test the converged prefixes (length k, default min(converged, 5)):
///   susy_shift  iff |E_n(+) - E_{n+1}(-)| <= tol for n < k-1 and |E_0(-)| <= tol
///   iso_spectral iff |E_n(+) - E_n(-)| <= tol for n < k
/// Both may hold (degenerate); both flags are then reported.
/// Throws InsufficientConverged unless both spectra have >= 2 converged values.
PairingReport match_spectra(const Spectrum& s_plus, const Spectrum& s_minus, double tol,
                            int depth = -1);

/// Twins: spectra of the two plus-members agree elementwise, likewise the two
/// minus-members, and (h1p, h1m) satisfies the SUSY shift.
PairingReport twins_check(const Spectrum& h1p, const Spectrum& h1m, const Spectrum& h2p,
                          const Spectrum& h2m, double tol, int depth = -1);

/// Quadruplet: all four spectra agree elementwise on the converged prefix.
PairingReport quadruplet_check(const Spectrum& s1, const Spectrum& s2, const Spectrum& s3,
                               const Spectrum& s4, double tol, int depth = -1);

}  // namespace susy

#endif  // SUSYFACTORY_VERIFY_HPP
