#include "susyfactory/verify.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "susyfactory/errors.hpp"

namespace susy {

std::string PairingReport::relation() const {
  if (twins) return "twins";
  if (quadruplet) return "quadruplet";
  if (susy_shift && iso_spectral) return "susy_shift+iso_spectral";
  if (susy_shift) return "susy_shift";
  if (iso_spectral) return "iso_spectral";
  return "none";
}

std::string PairingReport::to_json() const {
  nlohmann::json j;
  j["relation"] = relation();
  j["susy_shift"] = susy_shift;
  j["iso_spectral"] = iso_spectral;
  j["twins"] = twins;
  j["quadruplet"] = quadruplet;
  j["ground_zero"] = ground_zero;
  j["ground_energy"] = {{"re", ground_energy.real()}, {"im", ground_energy.imag()}};
  j["tolerance"] = tolerance;
  j["depth"] = depth;
  nlohmann::json parr = nlohmann::json::array();
  for (const auto& p : pairs)
    parr.push_back({{"index_plus", p.index_plus},
                    {"index_minus", p.index_minus},
                    {"delta", p.delta}});
  j["pairs"] = parr;
  return j.dump(2);
}

namespace {

int effective_depth(std::initializer_list<const Spectrum*> specs, int requested,
                    int min_required, int default_cap) {
  int k = default_cap;
  if (requested > 0) k = requested;
  for (const Spectrum* s : specs) {
    if (s->converged_count < min_required)
      throw InsufficientConverged("need at least " + std::to_string(min_required) +
                                  " converged eigenvalues (have " +
                                  std::to_string(s->converged_count) + ")");
    k = std::min(k, s->converged_count);
  }
  return k;
}

bool elementwise_match(const Spectrum& a, const Spectrum& b, int k, double tol) {
  for (int n = 0; n < k; ++n)
    if (std::abs(a.values[n] - b.values[n]) > tol) return false;
  return true;
}

}  // namespace

PairingReport match_spectra(const Spectrum& s_plus, const Spectrum& s_minus, double tol,
                            int depth) {
  PairingReport r;
  r.tolerance = tol;
  int k = effective_depth({&s_plus, &s_minus}, depth, 2, 5);
  r.depth = k;
  r.ground_energy = s_minus.values.empty() ? Complex(0, 0) : s_minus.values[0];
  r.ground_zero = std::abs(r.ground_energy) <= tol;

  bool shift = r.ground_zero;
  for (int n = 0; shift && n < k - 1; ++n)
    if (std::abs(s_plus.values[n] - s_minus.values[n + 1]) > tol) shift = false;
  bool iso = true;
  for (int n = 0; iso && n < k; ++n)
    if (std::abs(s_plus.values[n] - s_minus.values[n]) > tol) iso = false;

  r.susy_shift = shift;
  r.iso_spectral = iso;
  if (shift) {
    for (int n = 0; n < k - 1; ++n)
      r.pairs.push_back({n, n + 1, std::abs(s_plus.values[n] - s_minus.values[n + 1])});
  } else if (iso) {
    for (int n = 0; n < k; ++n)
      r.pairs.push_back({n, n, std::abs(s_plus.values[n] - s_minus.values[n])});
  }
  return r;
}

PairingReport twins_check(const Spectrum& h1p, const Spectrum& h1m, const Spectrum& h2p,
                          const Spectrum& h2m, double tol, int depth) {
  PairingReport r;
  r.tolerance = tol;
  int k = effective_depth({&h1p, &h1m, &h2p, &h2m}, depth, 4, 4);
  r.depth = k;
  bool plus_match = elementwise_match(h1p, h2p, k, tol);
  bool minus_match = elementwise_match(h1m, h2m, k, tol);
  PairingReport inner = match_spectra(h1p, h1m, tol, k);
  r.ground_energy = inner.ground_energy;
  r.ground_zero = inner.ground_zero;
  r.twins = plus_match && minus_match && inner.susy_shift;
  r.susy_shift = inner.susy_shift;
  if (r.twins) {
    for (int n = 0; n < k; ++n)
      r.pairs.push_back({n, n, std::abs(h1p.values[n] - h2p.values[n])});
  }
  return r;
}

PairingReport quadruplet_check(const Spectrum& s1, const Spectrum& s2, const Spectrum& s3,
                               const Spectrum& s4, double tol, int depth) {
  PairingReport r;
  r.tolerance = tol;
  int k = effective_depth({&s1, &s2, &s3, &s4}, depth, 4, 4);
  r.depth = k;
  r.ground_energy = s1.values.empty() ? Complex(0, 0) : s1.values[0];
  r.ground_zero = std::abs(r.ground_energy) <= tol;
  r.quadruplet = elementwise_match(s1, s2, k, tol) && elementwise_match(s1, s3, k, tol) &&
                 elementwise_match(s1, s4, k, tol);
  if (r.quadruplet) {
    for (int n = 0; n < k; ++n)
      r.pairs.push_back({n, n, std::max({std::abs(s1.values[n] - s2.values[n]),
                                         std::abs(s1.values[n] - s3.values[n]),
                                         std::abs(s1.values[n] - s4.values[n])})});
  }
  return r;
}

}  // namespace susy
