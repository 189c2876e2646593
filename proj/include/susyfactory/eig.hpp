#ifndef SUSYFACTORY_EIG_HPP
#define SUSYFACTORY_EIG_HPP

#include <limits>
#include <numeric>

#include "susyfactory/matrix.hpp"

namespace susy {
namespace eig {

/// Parlett-Reinsch balancing: diagonal similarity by radix powers so row and
/// column norms match. Improves eigenvalue conditioning of non-normal input.
template <class R>
void balance(CMat<R>& A) {
  const int n = A.size();
  const R radix = 2, sq = radix * radix;
  bool done = false;
  int sweeps = 0;
  while (!done && sweeps++ < 40) {
    done = true;
    for (int i = 0; i < n; ++i) {
      R r = 0, c = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(A(j, i));
        r += std::abs(A(i, j));
      }
      if (c == R(0) || r == R(0)) continue;
      R g = r / radix, f = 1, s = c + r;
      while (c < g) {
        f *= radix;
        c *= sq;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sq;
      }
      if ((c + r) / f < R(0.95) * s) {
        done = false;
        R ginv = R(1) / f;
        for (int j = 0; j < n; ++j) A(i, j) *= ginv;
        for (int j = 0; j < n; ++j) A(j, i) *= f;
      }
    }
  }
  A.set_dense();
}

/// Householder reduction to upper Hessenberg form, transforms discarded.
template <class R>
void hessenberg(CMat<R>& A) {
  using C = std::complex<R>;
  const int n = A.size();
  std::vector<C> v(n);
  for (int k = 0; k < n - 2; ++k) {
    R scale = 0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(A(i, k));
    if (scale == R(0)) continue;
    R alpha2 = 0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = A(i, k) / scale;
      alpha2 += std::norm(v[i]);
    }
    R alpha = std::sqrt(alpha2);
    if (alpha == R(0)) continue;
    C lead = v[k + 1];
    C phase = (lead == C(0)) ? C(1) : lead / std::abs(lead);
    v[k + 1] += phase * alpha;
    R vnorm2 = 0;
    for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == R(0)) continue;
    // A <- (I - 2 v v*/|v|^2) A (I - 2 v v*/|v|^2)
    for (int j = k; j < n; ++j) {  // left: rows k+1..n-1
      C s(0);
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * A(i, j);
      s *= R(2) / vnorm2;
      for (int i = k + 1; i < n; ++i) A(i, j) -= s * v[i];
    }
    for (int i = 0; i < n; ++i) {  // right: cols k+1..n-1
      C s(0);
      C* ri = A.row(i);
      for (int j = k + 1; j < n; ++j) s += ri[j] * v[j];
      s *= R(2) / vnorm2;
      for (int j = k + 1; j < n; ++j) ri[j] -= s * std::conj(v[j]);
    }
    for (int i = k + 2; i < n; ++i) A(i, k) = C(0);
  }
  A.set_dense();
}

/// Complex Givens rotation [c, s; -conj(s), c] with real c zeroing b against a.
template <class R>
void make_givens(std::complex<R> a, std::complex<R> b, R& c, std::complex<R>& s,
                 std::complex<R>& r) {
  using C = std::complex<R>;
  R na = std::abs(a), nb = std::abs(b);
  if (nb == R(0)) {
    c = 1;
    s = C(0);
    r = a;
    return;
  }
  if (na == R(0)) {
    c = 0;
    s = C(1);
    r = b;
    return;
  }
  R d = std::hypot(na, nb);
  c = na / d;
  C phase = a / na;
  s = phase * std::conj(b) / d;
  r = phase * d;
}

struct QrStats {
  bool converged = true;
  int iterations = 0;
};

/// Eigenvalues of an upper Hessenberg matrix by explicitly shifted QR with
/// deflation (Wilkinson shifts, occasional exceptional shifts). Unsorted.
template <class R>
QrStats hessenberg_qr_eigenvalues(CMat<R>& H, std::vector<std::complex<R>>& out) {
  using C = std::complex<R>;
  const int n = H.size();
  out.assign(n, C(0));
  const R eps = std::numeric_limits<R>::epsilon();
  QrStats stats;
  std::vector<R> cs(n);
  std::vector<C> sn(n);

  int hi = n - 1;
  int stalls = 0;
  const int max_total = 60 * std::max(n, 10);
  while (hi >= 0) {
    if (hi == 0) {
      out[0] = H(0, 0);
      break;
    }
    // deflate converged trailing 1x1 blocks
    bool deflated = false;
    for (int i = hi; i >= 1; --i) {
      R small = eps * (std::abs(H(i - 1, i - 1)) + std::abs(H(i, i)));
      if (small == R(0)) small = eps * H.frobenius_norm();
      if (std::abs(H(i, i - 1)) <= small) {
        H(i, i - 1) = C(0);
        if (i == hi) {
          out[hi] = H(hi, hi);
          --hi;
          stalls = 0;
          deflated = true;
        }
        break;
      }
    }
    if (deflated) continue;
    if (hi == 0) continue;

    if (++stats.iterations > max_total) {
      stats.converged = false;
      for (int i = 0; i <= hi; ++i) out[i] = H(i, i);  // best effort
      break;
    }

    // active block [lo, hi]
    int lo = hi;
    while (lo > 0 && H(lo, lo - 1) != C(0)) --lo;

    // shift: eigenvalue of trailing 2x2 nearest H(hi,hi)
    C shift;
    if (++stalls % 12 == 0) {
      shift = C(std::abs(H(hi, hi - 1)) + (hi >= 2 ? std::abs(H(hi - 1, hi - 2)) : R(0)), 0);
      shift += H(hi, hi);
    } else {
      C a = H(hi - 1, hi - 1), b = H(hi - 1, hi), c2 = H(hi, hi - 1), d = H(hi, hi);
      C tr = a + d;
      C disc = std::sqrt(tr * tr - R(4) * (a * d - b * c2));
      C l1 = (tr + disc) / R(2), l2 = (tr - disc) / R(2);
      shift = (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
    }

    for (int i = lo; i <= hi; ++i) H(i, i) -= shift;
    // QR factor via Givens chasing the subdiagonal, then RQ. The rotation
    // kernels run on raw re/im pairs; std::complex array access is layout-
    // guaranteed and the split form compiles several times faster.
    for (int j = lo; j < hi; ++j) {
      C r;
      make_givens(H(j, j), H(j + 1, j), cs[j], sn[j], r);
      H(j, j) = r;
      H(j + 1, j) = C(0);
      const R c = cs[j];
      const R sre = sn[j].real(), sim = sn[j].imag();
      R* a = reinterpret_cast<R*>(H.row(j) + j + 1);
      R* b = reinterpret_cast<R*>(H.row(j + 1) + j + 1);
      const int m = hi - j;
      for (int k = 0; k < m; ++k) {
        const R t1r = a[2 * k], t1i = a[2 * k + 1];
        const R t2r = b[2 * k], t2i = b[2 * k + 1];
        // row j   <- c t1 + s t2 ; row j+1 <- -conj(s) t1 + c t2
        a[2 * k] = c * t1r + sre * t2r - sim * t2i;
        a[2 * k + 1] = c * t1i + sre * t2i + sim * t2r;
        b[2 * k] = c * t2r - (sre * t1r + sim * t1i);
        b[2 * k + 1] = c * t2i - (sre * t1i - sim * t1r);
      }
    }
    // right multiply by G_lo^H ... G_{hi-1}^H, processed row-wise: rotation j
    // touches row i only when i <= j + 2, and ascending j within a row
    // reproduces the global application order
    for (int i = lo; i <= hi; ++i) {
      R* ri = reinterpret_cast<R*>(H.row(i));
      for (int j = std::max(lo, i - 2); j < hi; ++j) {
        const R c = cs[j];
        // applying G^H on the right uses conj(s)
        const R sre = sn[j].real(), sim = -sn[j].imag();
        const R t1r = ri[2 * j], t1i = ri[2 * j + 1];
        const R t2r = ri[2 * j + 2], t2i = ri[2 * j + 3];
        // col j <- c t1 + t2 s ; col j+1 <- -conj(s) t1 + c t2
        ri[2 * j] = c * t1r + t2r * sre - t2i * sim;
        ri[2 * j + 1] = c * t1i + t2r * sim + t2i * sre;
        ri[2 * j + 2] = c * t2r - (sre * t1r + sim * t1i);
        ri[2 * j + 3] = c * t2i - (sre * t1i - sim * t1r);
      }
    }
    for (int i = lo; i <= hi; ++i) H(i, i) += shift;
  }
  return stats;
}

/// All eigenvalues of a general dense complex matrix:
/// balance -> Hessenberg -> shifted QR. Unsorted.
template <class R>
QrStats eigenvalues_dense(CMat<R> A, std::vector<std::complex<R>>& out) {
  balance(A);
  hessenberg(A);
  return hessenberg_qr_eigenvalues(A, out);
}

/// Eigenvalues of a real symmetric tridiagonal matrix by implicit-shift QL.
/// O(n^2), used for the fine-grid finite-difference matrices.
template <class R>
std::vector<R> tridiag_eigenvalues(std::vector<R> d, std::vector<R> e) {
  const int n = int(d.size());
  e.resize(n, R(0));  // e[i] couples i and i+1; e[n-1] unused
  const R eps = std::numeric_limits<R>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        R dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 50) throw NoConvergence("tridiagonal QL exceeded iteration cap");
      R g = (d[l + 1] - d[l]) / (2 * e[l]);
      R r = std::hypot(g, R(1));
      g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
      R s = 1, c = 1, p = 0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        R f = s * e[i], b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == R(0)) {
          d[i + 1] -= p;
          e[m] = 0;
          underflow = (i >= l);
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

/// One eigenvector of A for an approximate eigenvalue via inverse iteration.
template <class R>
std::vector<std::complex<R>> inverse_iteration(const CMat<R>& A, std::complex<R> lambda,
                                               int iters = 3) {
  using C = std::complex<R>;
  const int n = A.size();
  CMat<R> M = A;
  R scale = A.max_abs();
  C perturbed = lambda + C(scale * std::numeric_limits<R>::epsilon() * R(100), 0);
  for (int i = 0; i < n; ++i) M(i, i) -= perturbed;
  std::vector<C> v(n);
  for (int i = 0; i < n; ++i) v[i] = C(R(1) / std::sqrt(R(n)), R(i % 7) * R(0.01));
  for (int it = 0; it < iters; ++it) {
    v = lu_solve(M, std::move(v));
    R nrm = 0;
    for (const auto& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm == R(0)) break;
    for (auto& z : v) z /= nrm;
  }
  return v;
}

/// ||Av - lambda v|| / ||A|| for a unit-norm v from inverse iteration.
template <class R>
R eigenpair_residual(const CMat<R>& A, std::complex<R> lambda) {
  using C = std::complex<R>;
  const int n = A.size();
  auto v = inverse_iteration(A, lambda);
  R num = 0;
  for (int i = 0; i < n; ++i) {
    C s(0);
    const C* ri = A.row(i);
    for (int j = 0; j < n; ++j) s += ri[j] * v[j];
    s -= lambda * v[i];
    num += std::norm(s);
  }
  R anorm = A.frobenius_norm();
  return anorm == R(0) ? std::sqrt(num) : std::sqrt(num) / anorm;
}

}  // namespace eig
}  // namespace susy

#endif  // SUSYFACTORY_EIG_HPP
