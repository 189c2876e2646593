#include "susyfactory/discretize.hpp"

#include <cmath>
#include <sstream>

#include "susyfactory/errors.hpp"

namespace susy {

namespace {

template <class R>
struct LadderBasis {
  CMat<R> x;  // position operator
  CMat<R> d;  // d/dx
};

// x = (a + a^dag)/sqrt(2 omega); d/dx = sqrt(omega/2)(a - a^dag)
template <class R>
LadderBasis<R> ladder(int n, R omega) {
  LadderBasis<R> b{CMat<R>(n), CMat<R>(n)};
  R cx = R(1) / std::sqrt(R(2) * omega);
  R cd = std::sqrt(omega / R(2));
  for (int k = 0; k + 1 < n; ++k) {
    R s = std::sqrt(R(k + 1));
    b.x(k, k + 1) = cx * s;  // a
    b.x(k + 1, k) = cx * s;  // a^dag
    b.d(k, k + 1) = cd * s;
    b.d(k + 1, k) = -cd * s;
  }
  b.x.set_bands(1, 1);
  b.d.set_bands(1, 1);
  return b;
}

// phi_k(0), phi_k'(0) for orthonormal Hermite functions, k = 0..n-1
template <class R>
void hermite_at_zero(int n, std::vector<R>& f, std::vector<R>& fp) {
  f.assign(n, R(0));
  fp.assign(n, R(0));
  f[0] = std::pow(R(M_PI), R(-0.25));
  for (int k = 1; k + 1 < n; ++k)
    if ((k + 1) % 2 == 0) f[k + 1] = -std::sqrt(R(k) / R(k + 1)) * f[k - 1];
  for (int k = 1; k < n; ++k) fp[k] = std::sqrt(R(2) * R(k)) * f[k - 1];
}

// Half-range overlaps S[m][k] = int_0^inf psi_m psi_k dx (omega-scaled basis),
// from the Wronskian identity; nonzero only for opposite parity.
template <class R>
std::vector<std::vector<R>> half_overlap(int n, R omega) {
  std::vector<R> f, fp;
  hermite_at_zero(n, f, fp);
  R w14 = std::pow(omega, R(0.25));
  R w34 = std::pow(omega, R(0.75));
  std::vector<std::vector<R>> S(n, std::vector<R>(n, R(0)));
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      if ((m + k) % 2 == 0) continue;
      R psim = w14 * f[m], dpsim = w34 * fp[m];
      R psik = w14 * f[k], dpsik = w34 * fp[k];
      S[m][k] = (psim * dpsik - dpsim * psik) / (R(2) * omega * R(k - m));
    }
  }
  return S;
}

template <class R>
CMat<R> absx_impl(int n, R omega) {
  auto S = half_overlap<R>(n + 1, omega);
  CMat<R> M(n);
  R c = R(2) / std::sqrt(R(2) * omega);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      if ((m + k) % 2 != 0) continue;
      R v = std::sqrt(R(k + 1)) * S[m][k + 1];
      if (k >= 1) v += std::sqrt(R(k)) * S[m][k - 1];
      M(m, k) = c * v;
    }
  }
  M.set_dense();
  return M;
}

template <class R>
CMat<R> sign_impl(int n, R omega) {
  auto S = half_overlap<R>(n, omega);
  CMat<R> M(n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      if ((m + k) % 2 == 1) M(m, k) = R(2) * S[m][k];
  M.set_dense();
  return M;
}

template <class R>
CMat<R> ho_build(const DiffOperator& h, int n_build, int n_keep, R omega) {
  auto basis = ladder<R>(n_build, omega);
  // cache powers of x
  std::vector<CMat<R>> xpow;
  xpow.push_back(CMat<R>::identity(n_build));
  auto xp = [&](int a) -> const CMat<R>& {
    while (int(xpow.size()) <= a) xpow.push_back(xpow.back() * basis.x);
    return xpow[a];
  };
  CMat<R> absm, sgnm;
  bool have_abs = false, have_sgn = false;

  CMat<R> H(n_build);
  for (int m = 0; m <= 2; ++m) {
    const CoeffFn& f = h.coeff(m);
    if (f.is_zero()) continue;
    // assemble the multiplication operator for f
    CMat<R> F(n_build);
    bool simple_const = f.is_constant();
    if (!simple_const) {
      for (const auto& mono : f.terms()) {
        if (mono.xpow < 0)
          throw PoleInCoefficient("1/x coefficients are not representable in the "
                                  "oscillator basis; use a half-line grid");
        CMat<R> piece = xp(mono.xpow);
        if (mono.abspow == 1) {
          if (!have_abs) {
            absm = absx_impl<R>(n_build, omega);
            have_abs = true;
          }
          piece = piece * absm;
        }
        if (mono.sgnpow == 1) {
          if (!have_sgn) {
            sgnm = sign_impl<R>(n_build, omega);
            have_sgn = true;
          }
          piece = piece * sgnm;
        }
        F.axpy(std::complex<R>(R(mono.c.real()), R(mono.c.imag())), piece);
      }
    }
    // term = F * D^m  (or c * D^m for constant coefficients)
    CMat<R> term = simple_const ? CMat<R>::identity(n_build) : F;
    for (int j = 0; j < m; ++j) term = term * basis.d;
    if (simple_const) {
      Complex c = f.constant_part();
      H.axpy(std::complex<R>(R(c.real()), R(c.imag())), term);
    } else {
      H += term;
    }
  }
  return H.truncated(n_keep);
}

}  // namespace

namespace detail {
CMat<double> absx_matrix(int n, double omega) { return absx_impl<double>(n, omega); }
CMat<long double> absx_matrix_ld(int n, long double omega) {
  return absx_impl<long double>(n, omega);
}
CMat<double> sign_matrix(int n, double omega) { return sign_impl<double>(n, omega); }
CMat<long double> sign_matrix_ld(int n, long double omega) {
  return sign_impl<long double>(n, omega);
}
}  // namespace detail

std::string describe(const Scheme& s) {
  std::ostringstream os;
  if (std::holds_alternative<OscillatorBasis>(s)) {
    const auto& b = std::get<OscillatorBasis>(s);
    os << "ho(n_keep=" << b.n_keep << ",n_build=" << b.n_build << ",omega=" << b.omega
       << (b.extended_precision ? ",extended" : "") << ")";
  } else {
    const auto& g = std::get<FiniteDifference>(s);
    os << "fd([" << g.x_min << "," << g.x_max << "],points=" << g.points
       << ",theta=" << g.theta << "," << (g.domain == Domain::half_line ? "half" : "full")
       << ")";
  }
  return os.str();
}

bool TridiagMatrix::real_symmetric(double tol) const {
  const int n = size();
  for (int j = 0; j < n; ++j) {
    if (std::abs(diag[j].imag()) > tol) return false;
    if (j + 1 < n) {
      if (std::abs(upper[j].imag()) > tol || std::abs(lower[j + 1].imag()) > tol) return false;
      if (std::abs(upper[j].real() - lower[j + 1].real()) >
          tol * (1.0 + std::abs(upper[j].real())))
        return false;
    }
  }
  return true;
}

CMat<double> TridiagMatrix::to_dense() const {
  const int n = size();
  CMat<double> M(n);
  for (int j = 0; j < n; ++j) {
    M(j, j) = diag[j];
    if (j + 1 < n) M(j, j + 1) = upper[j];
    if (j > 0) M(j, j - 1) = lower[j];
  }
  M.set_bands(1, 1);
  return M;
}

int OperatorMatrix::dimension() const {
  if (std::holds_alternative<TridiagMatrix>(data)) return std::get<TridiagMatrix>(data).size();
  if (std::holds_alternative<CMat<double>>(data)) return std::get<CMat<double>>(data).size();
  return std::get<CMat<long double>>(data).size();
}

OperatorMatrix ho_matrix(const DiffOperator& h, const OscillatorBasis& scheme) {
  OscillatorBasis s = scheme;
  if (s.n_keep < 1) throw InputError("n_keep must be >= 1");
  if (s.omega <= 0.0) throw InputError("omega must be > 0");
  if (s.n_build == 0) s.n_build = 2 * s.n_keep + 40;
  if (s.n_build < 2 * s.n_keep) throw InputError("n_build must be >= 2*n_keep");
  OperatorMatrix out;
  out.scheme_desc = describe(s);
  out.provenance = h.to_string();
  if (s.extended_precision)
    out.data = ho_build<long double>(h, s.n_build, s.n_keep, (long double)s.omega);
  else
    out.data = ho_build<double>(h, s.n_build, s.n_keep, s.omega);
  return out;
}

OperatorMatrix fd_matrix(const DiffOperator& h, const FiniteDifference& scheme) {
  const FiniteDifference& g = scheme;
  if (std::abs(g.theta) >= M_PI / 4.0)
    throw ThetaOutOfRange("contour angle must satisfy |theta| < pi/4");
  if (g.points < 3) throw InputError("points must be >= 3");
  if (g.x_max <= g.x_min) throw InputError("x_max must exceed x_min");
  if (g.domain == Domain::half_line && g.x_min <= 0.0)
    throw InputError("half_line requires x_min > 0");
  bool pole = false, kink = false;
  for (int m = 0; m <= 2; ++m) {
    pole = pole || h.coeff(m).has_pole();
    kink = kink || h.coeff(m).has_kink();
  }
  if (pole && g.domain == Domain::full_line)
    throw PoleOnGrid("1/x coefficients require a half-line grid");
  if (kink && g.domain == Domain::full_line && g.points % 2 != 0)
    throw InputError("|x| or sign(x) coefficients need an even point count so no "
                     "node falls on x = 0");

  const int P = g.points;
  const double hstep = (g.x_max - g.x_min) / (P - 1);
  const double b = std::tan(g.theta);
  const double smooth = 1.0;  // contour kink-smoothing scale

  std::vector<Complex> x(P), inv(P);  // contour points and 1/x'(u)
  for (int j = 0; j < P; ++j) {
    double u = g.x_min + j * hstep;
    double rad = std::sqrt(u * u + smooth * smooth);
    x[j] = Complex(u, b * rad);
    inv[j] = 1.0 / Complex(1.0, b * u / rad);
  }
  std::vector<Complex> invmid(P - 1);  // 1/x' at cell midpoints
  for (int j = 0; j + 1 < P; ++j) {
    double u = g.x_min + (j + 0.5) * hstep;
    double rad = std::sqrt(u * u + smooth * smooth);
    invmid[j] = 1.0 / Complex(1.0, b * u / rad);
  }

  TridiagMatrix T;
  T.diag.assign(P, Complex(0, 0));
  T.upper.assign(P, Complex(0, 0));
  T.lower.assign(P, Complex(0, 0));

  const CoeffFn& f2 = h.coeff(2);
  const CoeffFn& f1 = h.coeff(1);
  const CoeffFn& f0 = h.coeff(0);
  const double h2 = hstep * hstep;
  for (int j = 0; j < P; ++j) {
    if (pole && x[j] == Complex(0.0, 0.0)) throw PoleOnGrid("grid node at x = 0");
    Complex il = j > 0 ? invmid[j - 1] : inv[j];
    Complex ir = j + 1 < P ? invmid[j] : inv[j];
    if (!f2.is_zero()) {
      Complex c2 = f2.eval(x[j]);  // c2 * D^2 via the flux form
      T.diag[j] += c2 * inv[j] * (-(il + ir)) / h2;
      if (j + 1 < P) T.upper[j] += c2 * inv[j] * ir / h2;
      if (j > 0) T.lower[j] += c2 * inv[j] * il / h2;
    }
    if (!f1.is_zero()) {
      Complex c1 = f1.eval(x[j]) * inv[j] / (2.0 * hstep);
      if (j + 1 < P) T.upper[j] += c1;
      if (j > 0) T.lower[j] -= c1;
    }
    if (!f0.is_zero()) T.diag[j] += f0.eval(x[j]);
  }

  OperatorMatrix out;
  out.scheme_desc = describe(g);
  out.provenance = h.to_string();
  out.data = std::move(T);
  return out;
}

}  // namespace susy
