#include "susyfactory/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <thread>

#include "susyfactory/eig.hpp"
#include "susyfactory/errors.hpp"

namespace susy {

void sort_spectrum(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

int thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUSYFACTORY_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min<unsigned>(hw, unsigned(cap));
  }
  return int(hw);
}

namespace {

template <class R>
Spectrum solve_dense(const CMat<R>& M) {
  Spectrum s;
  std::vector<std::complex<R>> vals;
  auto stats = eig::eigenvalues_dense(M, vals);
  s.solver_converged = stats.converged;
  s.values.reserve(vals.size());
  for (const auto& v : vals) s.values.emplace_back(double(v.real()), double(v.imag()));
  sort_spectrum(s.values);
  // residual subsample on small systems (inverse iteration is O(n^3) each)
  if (stats.converged && M.size() >= 2 && M.size() <= 220) {
    R worst = 0;
    const int picks[3] = {0, M.size() / 2, M.size() - 1};
    for (int p : picks) {
      std::complex<R> lam(R(s.values[p].real()), R(s.values[p].imag()));
      worst = std::max(worst, eig::eigenpair_residual(M, lam));
    }
    s.max_residual = double(worst);
  }
  return s;
}

}  // namespace

Spectrum eigenvalues(const OperatorMatrix& m) {
  Spectrum s;
  if (std::holds_alternative<TridiagMatrix>(m.data)) {
    const auto& T = std::get<TridiagMatrix>(m.data);
    if (T.size() < 1) throw InputError("matrix dimension must be >= 1");
    if (T.real_symmetric(1e-14)) {
      std::vector<double> d(T.size()), e(std::max(0, T.size() - 1));
      for (int j = 0; j < T.size(); ++j) d[j] = T.diag[j].real();
      for (int j = 0; j + 1 < T.size(); ++j) e[j] = T.upper[j].real();
      auto vals = eig::tridiag_eigenvalues(std::move(d), std::move(e));
      s.values.assign(vals.begin(), vals.end());
    } else {
      s = solve_dense(T.to_dense());
    }
  } else if (std::holds_alternative<CMat<double>>(m.data)) {
    s = solve_dense(std::get<CMat<double>>(m.data));
  } else {
    s = solve_dense(std::get<CMat<long double>>(m.data));
  }
  s.scheme = m.scheme_desc;
  s.converged_count = int(s.values.size());
  return s;
}

Spectrum converge(const DiffOperator& h, const std::vector<Scheme>& schemes, double tol,
                  int k) {
  if (schemes.size() < 2) throw InputError("converge needs at least two schemes");
  auto run_one = [&h](const Scheme& sc) {
    if (std::holds_alternative<OscillatorBasis>(sc))
      return eigenvalues(ho_matrix(h, std::get<OscillatorBasis>(sc)));
    return eigenvalues(fd_matrix(h, std::get<FiniteDifference>(sc)));
  };

  std::vector<Spectrum> runs(schemes.size());
  int budget = thread_budget();
  if (budget > 1 && schemes.size() > 1) {
    std::vector<std::future<Spectrum>> futs;
    futs.reserve(schemes.size());
    for (const auto& sc : schemes)
      futs.push_back(std::async(std::launch::async, run_one, std::cref(sc)));
    for (std::size_t i = 0; i < futs.size(); ++i) runs[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < schemes.size(); ++i) runs[i] = run_one(schemes[i]);
  }

  int kmax = k;
  for (const auto& r : runs) kmax = std::min<int>(kmax, int(r.values.size()));
  if (kmax < 1) throw InputError("comparison depth exceeds matrix dimension");

  double worst = 0.0;
  int agree = kmax;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    for (int n = 0; n < kmax; ++n) {
      double d = std::abs(runs[i].values[n] - runs[i + 1].values[n]);
      if (d > tol) agree = std::min(agree, n);
      worst = std::max(worst, d);
    }
  }

  Spectrum out = runs.back();
  out.converged_count = agree;
  out.not_converged = agree < kmax;
  out.stability_digits =
      worst > 0 ? -std::log10(worst) : 16.0;
  for (const auto& r : runs) out.solver_converged = out.solver_converged && r.solver_converged;
  return out;
}

Spectrum filter_physical(const Spectrum& s, double max_imag) {
  Spectrum out = s;
  out.values.clear();
  int kept_converged = 0;
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    if (std::abs(s.values[n].imag()) <= max_imag) {
      out.values.push_back(s.values[n]);
      if (int(n) < s.converged_count) ++kept_converged;
    }
  }
  out.dropped = int(s.values.size() - out.values.size());
  out.converged_count = kept_converged;
  return out;
}

}  // namespace susy
