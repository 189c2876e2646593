#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "susyfactory/errors.hpp"
#include "susyfactory/pipeline.hpp"

using namespace susy;

TEST_CASE("config files parse and flags map onto keys") {
  const char* path = "susy_test_config.tmp";
  {
    std::ofstream f(path);
    f << "# harmonic pair\n";
    f << "w = \"i*x\"\n";
    f << "convention = type1\n";
    f << "method = ho\n";
    f << "n_keep = 48\n";
    f << "tol = 1e-8\n";
    f << "param.g = 1.5\n";
  }
  RunConfig cfg = load_config_file(path);
  std::remove(path);
  CHECK(cfg.w == "i*x");
  CHECK(cfg.n_keep == 48);
  CHECK(cfg.tol == 1e-8);
  CHECK(cfg.params.at("g") == 1.5);
  CHECK_THROWS_AS(apply_key_value(cfg, "bogus", "1"), InputError);
  CHECK_THROWS_AS(load_config_file("definitely_missing.cfg"), InputError);
}

TEST_CASE("factor pipeline validates conventions") {
  RunConfig cfg;
  cfg.w = "i*x";
  cfg.convention = "type2";
  CHECK_THROWS_AS(factor(cfg), InputError);
  cfg.convention = "type9";
  CHECK_THROWS_AS(factor(cfg), InputError);
  cfg.convention = "type1";
  cfg.w.clear();
  CHECK_THROWS_AS(factor(cfg), InputError);
}

TEST_CASE("harmonic verify run end to end") {
  RunConfig cfg;
  cfg.w = "i*x";
  cfg.convention = "type1";
  cfg.method = "ho";
  cfg.n_keep = 48;
  cfg.tol = 1e-8;
  cfg.depth = 5;
  cfg.expect = "susy";
  VerifyResult v = run_verify(cfg);
  CHECK(v.matches_expected);
  CHECK(v.report.susy_shift);
  CHECK(std::abs(v.report.ground_energy) < 1e-9);
  for (int n = 0; n < 5; ++n) {
    CHECK(std::abs(v.spectra.minus.values[n] - Complex(2.0 * n, 0)) < 1e-8);
    CHECK(std::abs(v.spectra.plus.values[n] - Complex(2.0 * n + 2.0, 0)) < 1e-8);
  }
  cfg.expect = "iso";
  CHECK_FALSE(run_verify(cfg).matches_expected);
}

TEST_CASE("csv output is deterministic and 9-digit") {
  RunConfig cfg;
  cfg.w = "i*x";
  cfg.convention = "type1";
  cfg.method = "ho";
  cfg.n_keep = 40;
  cfg.tol = 1e-8;
  cfg.depth = 4;
  PairSpectra s1 = run_spectrum(cfg);
  PairSpectra s2 = run_spectrum(cfg);
  std::string c1 = spectrum_csv(s1, 4);
  std::string c2 = spectrum_csv(s2, 4);
  CHECK(c1 == c2);
  CHECK(c1.find("n,re_e_plus,im_e_plus,re_e_minus,im_e_minus") == 0);
  CHECK(c1.find("\n0,") != std::string::npos);
  std::string j = spectrum_json(s1, 4);
  CHECK(j.find("\"levels\"") != std::string::npos);
}

TEST_CASE("scale factor flows through the radial pipeline") {
  RunConfig cfg;
  cfg.w = "i*x - i*lam/x";
  cfg.params = {{"lam", 3.0}};
  cfg.convention = "type1";
  cfg.scale_factor = 0.5;
  cfg.method = "fd";
  cfg.domain = "half";
  cfg.x_min = 1e-3;
  cfg.x_max = 12.0;
  cfg.points = 4000;
  cfg.tol = 1e-3;
  cfg.depth = 4;
  cfg.expect = "susy";
  VerifyResult v = run_verify(cfg);
  CHECK(v.report.susy_shift);
  for (int n = 0; n < 4; ++n) {
    CHECK(std::abs(v.spectra.minus.values[n] - Complex(2.0 * n, 0)) < 2e-4);
    CHECK(std::abs(v.spectra.plus.values[n] - Complex(2.0 * n + 2.0, 0)) < 2e-4);
  }
}

TEST_CASE("type2 pipeline and classify surface") {
  RunConfig cfg;
  cfg.convention = "type2";
  cfg.w1 = "x";
  cfg.w2 = "x^3";
  FactorResult f = factor(cfg);
  CHECK(f.pair.sym_plus.pt_symmetric);
  CHECK_FALSE(f.pair.sym_plus.hermitian);
  cfg.w2 = "x^2";
  CHECK_THROWS_AS(factor(cfg), EvenProductViolation);
}
