#ifndef SUSYFACTORY_PIPELINE_HPP
#define SUSYFACTORY_PIPELINE_HPP

#include <optional>
#include <string>

#include "susyfactory/analytic.hpp"
#include "susyfactory/generators.hpp"
#include "susyfactory/verify.hpp"

namespace susy {

/// Declarative description of one run: superpotential(s), convention,
/// discretization, verification and output settings. Field names mirror the
/// CLI flags; config files are a flat key=value subset of the same names.
struct RunConfig {
  std::string w;             // TypeI/TypeIII superpotential
  std::string w1, w2;        // TypeII pair
  ParamEnv params;
  std::string convention = "type1";  // type1 | type2 | type3
  double scale_factor = 1.0;

  std::string method = "ho";  // ho | fd
  int n_keep = 200;
  int n_build = 0;            // 0 -> 2*n_keep + 40
  double omega = 1.0;
  bool extended = false;
  double x_min = -10.0, x_max = 10.0;
  int points = 2001;
  double theta = 0.0;
  std::string domain = "full";  // full | half
  double max_imag = -1.0;       // >= 0 enables filter_physical

  double tol = 1e-6;
  int depth = 5;
  std::string expect = "any";  // susy | iso | twins | quadruplet | any

  std::string out_path;        // empty -> stdout
  std::string format = "csv";  // csv | json
};

/// Parse a flat key=value config file into a RunConfig (unknown keys rejected).
RunConfig load_config_file(const std::string& path);
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

Convention parse_convention(const std::string& name);

struct FactorResult {
  GeneratorPair gen;
  HamiltonianPair pair;
};

/// Parse + lower the superpotential(s) and build H+ = AB, H- = BA
/// (scaled by scale_factor when != 1).
FactorResult factor(const RunConfig& cfg);

struct PairSpectra {
  Spectrum plus;
  Spectrum minus;
};

/// Discretize and diagonalize both members under the configured scheme at two
/// resolutions (for convergence metadata). Conjugate-mirror pairs on a bent
/// contour automatically use opposite contour angles.
PairSpectra pair_spectra(const RunConfig& cfg, const FactorResult& f);

/// Full spectrum run: factor + pair_spectra (+ optional filtering).
PairSpectra run_spectrum(const RunConfig& cfg);

/// Spectrum run + relation classification at cfg.tol/cfg.depth.
struct VerifyResult {
  PairSpectra spectra;
  PairingReport report;
  bool matches_expected = false;
};
VerifyResult run_verify(const RunConfig& cfg);

/// CSV with 9 significant digits: n, re/im E+, re/im E-, converged flags.
std::string spectrum_csv(const PairSpectra& s, int depth);
std::string spectrum_json(const PairSpectra& s, int depth);

/// Reproduction report for the built-in presets table1..table5.
struct TableReport {
  std::string name;
  std::vector<std::string> lines;  // human-readable summary
  bool values_ok = false;          // published values reproduced within tolerance
  bool relation_ok = false;        // expected relation confirmed
  bool published_discrepancy = false;  // soft flag (table2)
  double max_value_dev = 0.0;
  PairingReport pairing;
  std::string csv;
};
TableReport run_table(const std::string& name);
std::vector<std::string> table_names();

}  // namespace susy

#endif  // SUSYFACTORY_PIPELINE_HPP
