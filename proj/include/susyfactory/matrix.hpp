#ifndef SUSYFACTORY_MATRIX_HPP
#define SUSYFACTORY_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "susyfactory/errors.hpp"

namespace susy {

/// Dense square complex matrix, row-major, with band bookkeeping so that
/// products of ladder-operator matrices stay O(n * bandwidth^2).
template <class R>
class CMat {
 public:
  using Scalar = std::complex<R>;

  CMat() = default;
  explicit CMat(int n) : n_(n), a_(std::size_t(n) * n), lo_(0), hi_(0) {}

  static CMat identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  int size() const { return n_; }
  Scalar& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
  Scalar* row(int i) { return a_.data() + std::size_t(i) * n_; }
  const Scalar* row(int i) const { return a_.data() + std::size_t(i) * n_; }

  int band_lower() const { return lo_; }
  int band_upper() const { return hi_; }
  void set_bands(int lo, int hi) {
    lo_ = std::min(lo, n_ - 1);
    hi_ = std::min(hi, n_ - 1);
  }
  void set_dense() { lo_ = hi_ = n_ - 1; }

  CMat& operator+=(const CMat& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    lo_ = std::max(lo_, o.lo_);
    hi_ = std::max(hi_, o.hi_);
    return *this;
  }

  CMat& axpy(Scalar alpha, const CMat& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += alpha * o.a_[k];
    lo_ = std::max(lo_, o.lo_);
    hi_ = std::max(hi_, o.hi_);
    return *this;
  }

  CMat& operator*=(Scalar f) {
    for (auto& v : a_) v *= f;
    return *this;
  }

  CMat truncated(int m) const {
    CMat t(m);
    for (int i = 0; i < m; ++i)
      std::copy(row(i), row(i) + m, t.row(i));
    t.set_bands(lo_, hi_);
    return t;
  }

  R frobenius_norm() const {
    R s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  R max_abs() const {
    R s = 0;
    for (const auto& v : a_) s = std::max(s, std::abs(v));
    return s;
  }

  friend CMat operator*(const CMat& A, const CMat& B) {
    const int n = A.n_;
    CMat C(n);
    C.set_bands(A.lo_ + B.lo_, A.hi_ + B.hi_);
    for (int i = 0; i < n; ++i) {
      const int kmin = std::max(0, i - A.lo_);
      const int kmax = std::min(n - 1, i + A.hi_);
      Scalar* ci = C.row(i);
      const Scalar* ai = A.row(i);
      for (int k = kmin; k <= kmax; ++k) {
        const Scalar aik = ai[k];
        if (aik == Scalar(0)) continue;
        const int jmin = std::max(0, k - B.lo_);
        const int jmax = std::min(n - 1, k + B.hi_);
        const Scalar* bk = B.row(k);
        for (int j = jmin; j <= jmax; ++j) ci[j] += aik * bk[j];
      }
    }
    return C;
  }

 private:
  int n_ = 0;
  std::vector<Scalar> a_;
  int lo_ = 0, hi_ = 0;  // lower/upper bandwidth (n-1 when dense)
};

/// LU solve with partial pivoting (in-place on a copy); used for the
/// inverse-iteration residual checks.
template <class R>
std::vector<std::complex<R>> lu_solve(CMat<R> A, std::vector<std::complex<R>> b) {
  using C = std::complex<R>;
  const int n = A.size();
  std::vector<int> piv(n);
  for (int k = 0; k < n; ++k) {
    int p = k;
    R best = std::abs(A(k, k));
    for (int i = k + 1; i < n; ++i) {
      R v = std::abs(A(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv[k] = p;
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
    C pivval = A(k, k);
    if (pivval == C(0)) pivval = C(std::numeric_limits<R>::min() * R(1e6));
    for (int i = k + 1; i < n; ++i) {
      C m = A(i, k) / pivval;
      A(i, k) = m;
      if (m == C(0)) continue;
      const C* rk = A.row(k);
      C* ri = A.row(i);
      for (int j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
    }
  }
  for (int k = 0; k < n; ++k) {
    if (piv[k] != k) std::swap(b[k], b[piv[k]]);
    for (int i = k + 1; i < n; ++i) b[i] -= A(i, k) * b[k];
  }
  for (int k = n - 1; k >= 0; --k) {
    for (int j = k + 1; j < n; ++j) b[k] -= A(k, j) * b[j];
    C d = A(k, k);
    if (d == C(0)) d = C(std::numeric_limits<R>::min() * R(1e6));
    b[k] /= d;
  }
  return b;
}

}  // namespace susy

#endif  // SUSYFACTORY_MATRIX_HPP
