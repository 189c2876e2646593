// susyfactory: build supersymmetric partner Hamiltonians H+ = AB, H- = BA
// from superpotentials, compute their spectra, and classify the spectral
// relation (SUSY shift, iso-spectral, twins, quadruplet).
//
// Exit codes: 0 success/match, 1 relation mismatch, 2 invalid input,
//             3 not converged.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "susyfactory/errors.hpp"
#include "susyfactory/pipeline.hpp"

namespace {

using namespace susy;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotConverged = 3;

struct CliOptions {
  RunConfig cfg;
  std::string config_file;
  std::vector<std::string> params;
  std::string grid;
  std::string table_name;
};

void add_common_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--config", o.config_file, "flat key=value config file");
  cmd->add_option("--w", o.cfg.w, "superpotential W(x) (type1/type3)");
  cmd->add_option("--w1", o.cfg.w1, "first superpotential (type2)");
  cmd->add_option("--w2", o.cfg.w2, "second superpotential (type2)");
  cmd->add_option("--param", o.params, "parameter binding k=v (repeatable)");
  cmd->add_option("--convention", o.cfg.convention, "type1|type2|type3");
  cmd->add_option("--method", o.cfg.method, "ho|fd");
  cmd->add_option("--n-keep", o.cfg.n_keep, "oscillator basis size kept");
  cmd->add_option("--n-build", o.cfg.n_build, "oscillator build size (0 = 2*n_keep+40)");
  cmd->add_option("--omega", o.cfg.omega, "oscillator basis frequency");
  cmd->add_flag("--extended", o.cfg.extended, "extended-precision oscillator path");
  cmd->add_option("--grid", o.grid, "finite-difference grid MIN:MAX:PTS");
  cmd->add_option("--theta", o.cfg.theta, "contour angle in radians (|theta| < pi/4)");
  cmd->add_option("--domain", o.cfg.domain, "full|half");
  cmd->add_option("--max-imag", o.cfg.max_imag, "filter |Im E| above this (>=0)");
  cmd->add_option("--scale", o.cfg.scale_factor, "overall factor applied to H+-");
  cmd->add_option("--tol", o.cfg.tol, "convergence/classification tolerance");
  cmd->add_option("--depth", o.cfg.depth, "comparison depth k");
  cmd->add_option("--expect", o.cfg.expect, "susy|iso|twins|quadruplet|any");
  cmd->add_option("--out", o.cfg.out_path, "output path (default stdout)");
  cmd->add_option("--format", o.cfg.format, "csv|json");
}

// flags override config-file values: start from the file, then re-apply flags
void finalize(CliOptions& o, CLI::App* cmd) {
  if (!o.config_file.empty()) {
    RunConfig base = load_config_file(o.config_file);
    RunConfig flags = o.cfg;
    o.cfg = base;
    auto overridden = [&](const std::string& name) { return cmd->count(name) > 0; };
    if (overridden("--w")) o.cfg.w = flags.w;
    if (overridden("--w1")) o.cfg.w1 = flags.w1;
    if (overridden("--w2")) o.cfg.w2 = flags.w2;
    if (overridden("--convention")) o.cfg.convention = flags.convention;
    if (overridden("--method")) o.cfg.method = flags.method;
    if (overridden("--n-keep")) o.cfg.n_keep = flags.n_keep;
    if (overridden("--n-build")) o.cfg.n_build = flags.n_build;
    if (overridden("--omega")) o.cfg.omega = flags.omega;
    if (overridden("--extended")) o.cfg.extended = flags.extended;
    if (overridden("--theta")) o.cfg.theta = flags.theta;
    if (overridden("--domain")) o.cfg.domain = flags.domain;
    if (overridden("--max-imag")) o.cfg.max_imag = flags.max_imag;
    if (overridden("--scale")) o.cfg.scale_factor = flags.scale_factor;
    if (overridden("--tol")) o.cfg.tol = flags.tol;
    if (overridden("--depth")) o.cfg.depth = flags.depth;
    if (overridden("--expect")) o.cfg.expect = flags.expect;
    if (overridden("--out")) o.cfg.out_path = flags.out_path;
    if (overridden("--format")) o.cfg.format = flags.format;
  }
  for (const auto& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw InputError("--param expects name=value");
    try {
      o.cfg.params[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("invalid --param value in '" + p + "'");
    }
  }
  if (!o.grid.empty()) {
    double mn, mx;
    int pts;
    if (std::sscanf(o.grid.c_str(), "%lf:%lf:%d", &mn, &mx, &pts) != 3)
      throw InputError("--grid expects MIN:MAX:PTS");
    o.cfg.x_min = mn;
    o.cfg.x_max = mx;
    o.cfg.points = pts;
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw InputError("cannot open output file '" + cfg.out_path + "'");
  out << text;
}

int cmd_factor(const CliOptions& o) {
  FactorResult f = factor(o.cfg);
  std::ostringstream os;
  os << "H+ = " << f.pair.h_plus.to_string() << "\n";
  os << "H- = " << f.pair.h_minus.to_string() << "\n";
  os << "symmetry(H+): " << to_string(f.pair.sym_plus.primary())
     << (f.pair.sym_plus.hermitian && f.pair.sym_plus.pt_symmetric ? " (also pt_symmetric)"
                                                                   : "")
     << "\n";
  os << "symmetry(H-): " << to_string(f.pair.sym_minus.primary())
     << (f.pair.sym_minus.hermitian && f.pair.sym_minus.pt_symmetric ? " (also pt_symmetric)"
                                                                     : "")
     << "\n";
  if (f.pair.trivial) os << "note: degenerate pair (H+ = H-)\n";
  emit(o.cfg, os.str());
  return kExitOk;
}

int cmd_spectrum(const CliOptions& o) {
  PairSpectra s = run_spectrum(o.cfg);
  bool converged = !s.plus.not_converged && !s.minus.not_converged &&
                   s.plus.solver_converged && s.minus.solver_converged;
  emit(o.cfg, o.cfg.format == "json" ? spectrum_json(s, o.cfg.depth)
                                     : spectrum_csv(s, o.cfg.depth));
  if (!converged) {
    std::cerr << "not converged: stability digits " << s.plus.stability_digits << " / "
              << s.minus.stability_digits << "\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_verify(const CliOptions& o) {
  VerifyResult v = run_verify(o.cfg);
  emit(o.cfg, v.report.to_json());
  if (v.spectra.plus.not_converged || v.spectra.minus.not_converged)
    return kExitNotConverged;
  return v.matches_expected ? kExitOk : kExitMismatch;
}

int cmd_classify(const CliOptions& o) {
  std::ostringstream os;
  Convention conv = parse_convention(o.cfg.convention);
  if (conv == Convention::TypeII) {
    if (o.cfg.w1.empty() || o.cfg.w2.empty())
      throw InputError("type2 requires both --w1 and --w2");
    os << "W1 PT-invariant: " << (is_pt_invariant(parse(o.cfg.w1), o.cfg.params) ? "yes" : "no")
       << "\n";
    os << "W2 PT-invariant: " << (is_pt_invariant(parse(o.cfg.w2), o.cfg.params) ? "yes" : "no")
       << "\n";
  } else {
    if (o.cfg.w.empty()) throw InputError("missing superpotential --w");
    os << "W PT-invariant: " << (is_pt_invariant(parse(o.cfg.w), o.cfg.params) ? "yes" : "no")
       << "\n";
  }
  FactorResult f = factor(o.cfg);
  auto describe_sym = [](const Symmetry& s) {
    std::string d = to_string(s.primary());
    if (s.hermitian && s.pt_symmetric) d += " (also pt_symmetric)";
    return d;
  };
  os << "H+: " << describe_sym(f.pair.sym_plus) << "\n";
  os << "H-: " << describe_sym(f.pair.sym_minus) << "\n";
  emit(o.cfg, os.str());
  return kExitOk;
}

int cmd_table(const CliOptions& o) {
  TableReport rep = run_table(o.table_name);
  std::ostringstream os;
  os << "== " << rep.name << " ==\n";
  for (const auto& line : rep.lines) os << line << "\n";
  os << "values: " << (rep.values_ok ? "ok" : "DEVIATION") << " (max dev " << std::scientific
     << rep.max_value_dev << ")\n";
  os << "relation: " << (rep.relation_ok ? "confirmed" : "NOT CONFIRMED") << "\n";
  if (rep.published_discrepancy) os << "flag: published-value-discrepancy\n";
  if (!o.cfg.out_path.empty()) {
    std::ofstream out(o.cfg.out_path);
    if (!out) throw InputError("cannot open output file '" + o.cfg.out_path + "'");
    out << (o.cfg.format == "json" ? rep.pairing.to_json() : rep.csv);
  }
  std::cout << os.str();
  return rep.relation_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supersymmetric partner Hamiltonian factory"};
  app.require_subcommand(1);

  CliOptions o;
  CLI::App* factor_cmd = app.add_subcommand("factor", "print H+ = AB and H- = BA");
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "compute paired spectra");
  CLI::App* verify_cmd = app.add_subcommand("verify", "classify the spectral relation");
  CLI::App* classify_cmd = app.add_subcommand("classify", "PT/hermiticity report");
  CLI::App* table_cmd = app.add_subcommand("table", "reproduce a published table preset");
  for (CLI::App* c : {factor_cmd, spectrum_cmd, verify_cmd, classify_cmd, table_cmd})
    add_common_options(c, o);
  table_cmd->add_option("name", o.table_name, "table1|table2|table3|table4|table5")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInvalid : kExitOk;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    finalize(o, active);
    if (active == factor_cmd) return cmd_factor(o);
    if (active == spectrum_cmd) return cmd_spectrum(o);
    if (active == verify_cmd) return cmd_verify(o);
    if (active == classify_cmd) return cmd_classify(o);
    if (active == table_cmd) return cmd_table(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
