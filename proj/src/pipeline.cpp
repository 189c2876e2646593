#include "susyfactory/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "susyfactory/errors.hpp"
#include "susyfactory/presets.hpp"

namespace susy {

Convention parse_convention(const std::string& name) {
  if (name == "type1") return Convention::TypeI;
  if (name == "type2") return Convention::TypeII;
  if (name == "type3") return Convention::TypeIII;
  throw InputError("unknown convention '" + name + "' (type1|type2|type3)");
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  auto to_int = [&](const std::string& v) {
    try {
      return std::stoi(v);
    } catch (...) {
      throw InputError("invalid integer for key '" + key + "'");
    }
  };
  auto to_double = [&](const std::string& v) {
    try {
      return std::stod(v);
    } catch (...) {
      throw InputError("invalid number for key '" + key + "'");
    }
  };
  if (key == "w")
    cfg.w = value;
  else if (key == "w1")
    cfg.w1 = value;
  else if (key == "w2")
    cfg.w2 = value;
  else if (key == "convention")
    cfg.convention = value;
  else if (key == "scale")
    cfg.scale_factor = to_double(value);
  else if (key == "method")
    cfg.method = value;
  else if (key == "n_keep")
    cfg.n_keep = to_int(value);
  else if (key == "n_build")
    cfg.n_build = to_int(value);
  else if (key == "omega")
    cfg.omega = to_double(value);
  else if (key == "extended")
    cfg.extended = (value == "true" || value == "1");
  else if (key == "x_min")
    cfg.x_min = to_double(value);
  else if (key == "x_max")
    cfg.x_max = to_double(value);
  else if (key == "points")
    cfg.points = to_int(value);
  else if (key == "theta")
    cfg.theta = to_double(value);
  else if (key == "domain")
    cfg.domain = value;
  else if (key == "max_imag")
    cfg.max_imag = to_double(value);
  else if (key == "tol")
    cfg.tol = to_double(value);
  else if (key == "depth")
    cfg.depth = to_int(value);
  else if (key == "expect")
    cfg.expect = value;
  else if (key == "out")
    cfg.out_path = value;
  else if (key == "format")
    cfg.format = value;
  else if (key.rfind("param.", 0) == 0)
    cfg.params[key.substr(6)] = to_double(value);
  else
    throw InputError("unknown config key '" + key + "'");
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r\n\"");
      auto b = s.find_last_not_of(" \t\r\n\"");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

FactorResult factor(const RunConfig& cfg) {
  Convention conv = parse_convention(cfg.convention);
  FactorResult r;
  if (conv == Convention::TypeII) {
    if (cfg.w1.empty() || cfg.w2.empty())
      throw InputError("type2 requires both --w1 and --w2");
    r.gen = make_generators(parse(cfg.w1), parse(cfg.w2), cfg.params);
  } else {
    if (cfg.w.empty()) throw InputError("missing superpotential --w");
    r.gen = make_generators(parse(cfg.w), conv, cfg.params);
  }
  r.pair = hamiltonian_pair(r.gen);
  if (cfg.scale_factor != 1.0) {
    r.pair.h_plus = scale(r.pair.h_plus, cfg.scale_factor);
    r.pair.h_minus = scale(r.pair.h_minus, cfg.scale_factor);
    r.pair.sym_plus = classify(r.pair.h_plus);
    r.pair.sym_minus = classify(r.pair.h_minus);
  }
  return r;
}

namespace {

bool conjugate_mirror_pair(const DiffOperator& hp, const DiffOperator& hm) {
  for (int m = 0; m < 3; ++m)
    if (!(hp.coeff(m).conjugated() == hm.coeff(m))) return false;
  return true;
}

std::vector<Scheme> schemes_for(const RunConfig& cfg, double theta) {
  std::vector<Scheme> out;
  if (cfg.method == "ho") {
    OscillatorBasis fine{cfg.n_keep, cfg.n_build, cfg.omega, cfg.extended};
    OscillatorBasis coarse = fine;
    coarse.n_keep = std::max(8, int(cfg.n_keep * 3) / 4);
    coarse.n_build = cfg.n_build == 0 ? 0 : std::max(2 * coarse.n_keep, cfg.n_build * 3 / 4);
    out = {coarse, fine};
  } else if (cfg.method == "fd") {
    Domain dom = cfg.domain == "half" ? Domain::half_line : Domain::full_line;
    FiniteDifference fine{cfg.x_min, cfg.x_max, cfg.points, theta, dom};
    FiniteDifference coarse = fine;
    coarse.points = std::max(16, (cfg.points * 3) / 4);
    // keep an even count so no node lands on x = 0
    if (coarse.points % 2 != 0) ++coarse.points;
    out = {coarse, fine};
  } else {
    throw InputError("unknown method '" + cfg.method + "' (ho|fd)");
  }
  return out;
}

}  // namespace

PairSpectra pair_spectra(const RunConfig& cfg, const FactorResult& f) {
  double theta_plus = cfg.theta;
  double theta_minus = cfg.theta;
  if (cfg.method == "fd" && cfg.theta != 0.0 &&
      conjugate_mirror_pair(f.pair.h_plus, f.pair.h_minus))
    theta_plus = -cfg.theta;  // mirror contour for the conjugate member
  PairSpectra s;
  s.plus = converge(f.pair.h_plus, schemes_for(cfg, theta_plus), cfg.tol, cfg.depth);
  s.minus = converge(f.pair.h_minus, schemes_for(cfg, theta_minus), cfg.tol, cfg.depth);
  if (cfg.max_imag >= 0.0) {
    s.plus = filter_physical(s.plus, cfg.max_imag);
    s.minus = filter_physical(s.minus, cfg.max_imag);
  }
  return s;
}

PairSpectra run_spectrum(const RunConfig& cfg) {
  FactorResult f = factor(cfg);
  return pair_spectra(cfg, f);
}

VerifyResult run_verify(const RunConfig& cfg) {
  VerifyResult v;
  v.spectra = run_spectrum(cfg);
  v.report = match_spectra(v.spectra.plus, v.spectra.minus, cfg.tol, cfg.depth);
  const std::string& e = cfg.expect;
  if (e == "any")
    v.matches_expected = v.report.relation() != "none";
  else if (e == "susy")
    v.matches_expected = v.report.susy_shift;
  else if (e == "iso")
    v.matches_expected = v.report.iso_spectral;
  else if (e == "twins")
    v.matches_expected = v.report.twins;
  else if (e == "quadruplet")
    v.matches_expected = v.report.quadruplet;
  else
    throw InputError("unknown expected relation '" + e + "'");
  return v;
}

namespace {

std::string num9(double v) {
  std::ostringstream os;
  os << std::setprecision(9) << v;
  return os.str();
}

}  // namespace

std::string spectrum_csv(const PairSpectra& s, int depth) {
  std::ostringstream os;
  os << "n,re_e_plus,im_e_plus,re_e_minus,im_e_minus,conv_plus,conv_minus\n";
  int rows = std::min<int>({depth, int(s.plus.values.size()), int(s.minus.values.size())});
  for (int n = 0; n < rows; ++n) {
    os << n << "," << num9(s.plus.values[n].real()) << "," << num9(s.plus.values[n].imag())
       << "," << num9(s.minus.values[n].real()) << "," << num9(s.minus.values[n].imag())
       << "," << (n < s.plus.converged_count ? 1 : 0) << ","
       << (n < s.minus.converged_count ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string spectrum_json(const PairSpectra& s, int depth) {
  nlohmann::json j;
  int rows = std::min<int>({depth, int(s.plus.values.size()), int(s.minus.values.size())});
  nlohmann::json rowsj = nlohmann::json::array();
  for (int n = 0; n < rows; ++n) {
    rowsj.push_back({{"n", n},
                     {"e_plus", {{"re", s.plus.values[n].real()}, {"im", s.plus.values[n].imag()}}},
                     {"e_minus", {{"re", s.minus.values[n].real()}, {"im", s.minus.values[n].imag()}}},
                     {"conv_plus", n < s.plus.converged_count},
                     {"conv_minus", n < s.minus.converged_count}});
  }
  j["levels"] = rowsj;
  j["scheme_plus"] = s.plus.scheme;
  j["scheme_minus"] = s.minus.scheme;
  j["stability_digits_plus"] = s.plus.stability_digits;
  j["stability_digits_minus"] = s.minus.stability_digits;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Table reproduction presets
// ---------------------------------------------------------------------------
namespace {

std::string fmt_dev(double dev) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << dev;
  return os.str();
}

double compare_levels(const std::vector<Complex>& got, const std::vector<double>& ref,
                      std::vector<std::string>& lines, const std::string& label) {
  double worst = 0.0;
  for (std::size_t n = 0; n < ref.size() && n < got.size(); ++n) {
    double dev = std::abs(got[n] - Complex(ref[n], 0.0));
    worst = std::max(worst, dev);
    lines.push_back("  " + label + "[" + std::to_string(n) + "] = " + num9(got[n].real()) +
                    (std::abs(got[n].imag()) > 1e-12
                         ? (std::string(" + ") + num9(got[n].imag()) + "i")
                         : "") +
                    "  ref " + num9(ref[n]) + "  |dev| " + fmt_dev(dev));
  }
  return worst;
}

TableReport report_table1() {
  auto t = presets::table1();
  TableReport rep;
  rep.name = "table1";
  rep.values_ok = true;
  rep.relation_ok = true;
  for (const auto& run : t.runs) {
    RunConfig cfg = t.config;
    cfg.params = run.params;
    VerifyResult v = run_verify(cfg);
    std::ostringstream hdr;
    hdr << "k=" << run.params.at("k") << " g=" << run.params.at("g") << " ["
        << v.spectra.minus.scheme << "]";
    rep.lines.push_back(hdr.str());
    double w1 = compare_levels(v.spectra.plus.values, run.e_plus, rep.lines, "E+");
    double w2 = compare_levels(v.spectra.minus.values, run.e_minus, rep.lines, "E-");
    rep.max_value_dev = std::max({rep.max_value_dev, w1, w2});
    PairingReport pr = match_spectra(v.spectra.plus, v.spectra.minus, t.class_tol, 5);
    rep.lines.push_back("  relation: " + pr.relation());
    rep.values_ok = rep.values_ok && std::max(w1, w2) <= t.value_tol;
    rep.relation_ok = rep.relation_ok && pr.susy_shift;
    rep.pairing = pr;
    rep.csv += spectrum_csv(v.spectra, 5);
  }
  return rep;
}

TableReport report_table2() {
  auto t = presets::table2();
  TableReport rep;
  rep.name = "table2";
  FactorResult f = factor(t.config);

  // base run at two resolutions (convergence metadata) plus two theta
  // perturbations at the fine resolution only (contour-robustness check);
  // all eight diagonalizations are independent, so run them as one batch
  std::vector<double> thetas = {t.config.theta, t.config.theta + t.theta_step,
                                t.config.theta - t.theta_step};
  Domain dom = t.config.domain == "half" ? Domain::half_line : Domain::full_line;
  auto solve = [&](const DiffOperator& h, double th, int pts) {
    FiniteDifference g{t.config.x_min, t.config.x_max, pts, th, dom};
    Spectrum s = eigenvalues(fd_matrix(h, g));
    return filter_physical(s, t.config.max_imag);
  };
  // H+ is the coefficient conjugate of H-, so it lives on the mirror contour
  struct Job {
    const DiffOperator* h;
    double theta;
    int pts;
  };
  int coarse = (t.config.points * 3) / 4;
  if (coarse % 2) ++coarse;
  std::vector<Job> jobs;
  for (double th : thetas) {
    jobs.push_back({&f.pair.h_minus, th, t.config.points});
    jobs.push_back({&f.pair.h_plus, -th, t.config.points});
  }
  jobs.push_back({&f.pair.h_minus, thetas[0], coarse});
  jobs.push_back({&f.pair.h_plus, -thetas[0], coarse});
  std::vector<std::future<Spectrum>> futs;
  for (const Job& j : jobs)
    futs.push_back(std::async(std::launch::async,
                              [&solve, j] { return solve(*j.h, j.theta, j.pts); }));
  std::vector<Spectrum> solved(jobs.size());
  for (std::size_t k = 0; k < futs.size(); ++k) solved[k] = futs[k].get();

  std::vector<PairSpectra> runs = {{solved[1], solved[0]},
                                   {solved[3], solved[2]},
                                   {solved[5], solved[4]}};
  // convergence metadata for the base run from the coarse/fine agreement
  PairSpectra& base = runs[0];
  auto attach_metadata = [&](Spectrum& fine, const Spectrum& coarse_s) {
    int k = std::min({5, int(fine.values.size()), int(coarse_s.values.size())});
    double worst = 0;
    int agree = k;
    for (int n = 0; n < k; ++n) {
      double d = std::abs(fine.values[n] - coarse_s.values[n]);
      if (d > t.config.tol) agree = std::min(agree, n);
      worst = std::max(worst, d);
    }
    fine.converged_count = agree;
    fine.not_converged = agree < k;
    fine.stability_digits = worst > 0 ? -std::log10(worst) : 16.0;
  };
  attach_metadata(base.minus, solved[6]);
  attach_metadata(base.plus, solved[7]);

  double theta_dev = 0.0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    for (int n = 0; n < 5; ++n) {
      theta_dev = std::max(theta_dev,
                           std::abs(runs[r].plus.values[n] - base.plus.values[n]));
      theta_dev = std::max(theta_dev,
                           std::abs(runs[r].minus.values[n] - base.minus.values[n]));
    }
  }
  rep.lines.push_back("theta robustness (pi/6 vs pi/6 +- pi/36): max dev " +
                      fmt_dev(theta_dev));
  bool theta_ok = theta_dev <= t.theta_agreement_tol;

  double wp = compare_levels(base.plus.values, t.e_ref, rep.lines, "E+");
  double wm = compare_levels(base.minus.values, t.e_ref, rep.lines, "E-");
  rep.max_value_dev = std::max(wp, wm);
  rep.published_discrepancy = rep.max_value_dev > t.published_tol;

  PairingReport pr = match_spectra(base.plus, base.minus, t.class_tol, 5);
  rep.pairing = pr;
  double ground = std::abs(pr.ground_energy);
  rep.lines.push_back("relation: " + pr.relation() + ", |E0| = " + fmt_dev(ground));
  rep.relation_ok = pr.iso_spectral && ground <= t.ground_tol && theta_ok;
  rep.values_ok = !rep.published_discrepancy;
  if (rep.published_discrepancy) rep.lines.push_back("flag: published-value-discrepancy");
  rep.csv = spectrum_csv(base, 5);
  return rep;
}

TableReport report_table34(bool four) {
  auto t = four ? presets::table4() : presets::table3();
  TableReport rep;
  rep.name = four ? "table4" : "table3";
  VerifyResult va = run_verify(t.config_a);
  VerifyResult vb = run_verify(t.config_b);
  rep.lines.push_back("pair A (W1=" + t.config_a.w1 + ", W2=" + t.config_a.w2 + ")");
  double w1 = compare_levels(va.spectra.plus.values, t.e_plus_a, rep.lines, "E+");
  double w2 = compare_levels(va.spectra.minus.values, t.e_minus_a, rep.lines, "E-");
  rep.lines.push_back("pair B (W1=" + t.config_b.w1 + ", W2=" + t.config_b.w2 + ")");
  double w3 = compare_levels(vb.spectra.plus.values, t.e_plus_b, rep.lines, "E+");
  double w4 = compare_levels(vb.spectra.minus.values, t.e_minus_b, rep.lines, "E-");
  rep.max_value_dev = std::max({w1, w2, w3, w4});
  rep.values_ok = rep.max_value_dev <= t.value_tol;
  PairingReport pr =
      four ? quadruplet_check(va.spectra.plus, va.spectra.minus, vb.spectra.plus,
                              vb.spectra.minus, t.class_tol, 4)
           : twins_check(va.spectra.plus, va.spectra.minus, vb.spectra.plus,
                         vb.spectra.minus, t.class_tol, 4);
  rep.pairing = pr;
  rep.relation_ok = four ? pr.quadruplet : pr.twins;
  rep.lines.push_back("relation: " + pr.relation());
  rep.csv = spectrum_csv(va.spectra, 4) + spectrum_csv(vb.spectra, 4);
  return rep;
}

TableReport report_table5() {
  auto t = presets::table5();
  TableReport rep;
  rep.name = "table5";
  VerifyResult v = run_verify(t.config);
  PairSpectra fd = run_spectrum(t.fd_oracle);
  rep.lines.push_back("oscillator basis [" + v.spectra.minus.scheme + "]");
  double w1 = compare_levels(v.spectra.plus.values, t.e_plus, rep.lines, "E+");
  double w2 = compare_levels(v.spectra.minus.values, t.e_minus, rep.lines, "E-");
  rep.max_value_dev = std::max(w1, w2);
  double cross = 0.0;
  for (int n = 0; n < 4; ++n) {
    cross = std::max(cross, std::abs(v.spectra.plus.values[n] - fd.plus.values[n]));
    cross = std::max(cross, std::abs(v.spectra.minus.values[n] - fd.minus.values[n]));
  }
  rep.lines.push_back("HO vs FD cross-validation: max dev " + fmt_dev(cross));
  PairingReport pr = match_spectra(v.spectra.plus, v.spectra.minus, t.class_tol, 4);
  rep.pairing = pr;
  double ground = std::abs(pr.ground_energy);
  rep.lines.push_back("relation: " + pr.relation() + ", |E0-| = " + fmt_dev(ground));
  rep.values_ok = rep.max_value_dev <= t.published_tol && cross <= t.cross_tol;
  rep.relation_ok = pr.susy_shift && ground <= t.ground_tol;
  rep.csv = spectrum_csv(v.spectra, 4);
  return rep;
}

}  // namespace

std::vector<std::string> table_names() {
  return {"table1", "table2", "table3", "table4", "table5"};
}

TableReport run_table(const std::string& name) {
  if (name == "table1") return report_table1();
  if (name == "table2") return report_table2();
  if (name == "table3") return report_table34(false);
  if (name == "table4") return report_table34(true);
  if (name == "table5") return report_table5();
  throw InputError("unknown table preset '" + name + "' (table1..table5)");
}

}  // namespace susy
