#pragma once

// Dense complex matrices: products, spectral-norm estimation by power
// iteration, leading-window residuals, and the signed binomial involution.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oproot/parallel.hpp"

namespace oproot {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw std::invalid_argument("ComplexMatrix: entry count mismatch");
    check_finite();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  const cplx* row(std::size_t i) const { return a_.data() + i * cols_; }
  cplx* row(std::size_t i) { return a_.data() + i * cols_; }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  ComplexMatrix conj_transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
  }

  ComplexMatrix leading_block(std::size_t w) const {
    if (w > rows_ || w > cols_)
      throw std::invalid_argument("leading_block: window too large");
    ComplexMatrix b(w, w);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j) b(i, j) = (*this)(i, j);
    return b;
  }

  void check_finite() const {
    for (const cplx& v : a_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("ComplexMatrix: non-finite entry");
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

inline ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: dimension mismatch");
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_sub: dimension mismatch");
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline ComplexMatrix mat_scale(const ComplexMatrix& a, cplx s) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

// Exact triple-loop product, row-parallel, inner loops ordered for row-major
// streaming. Zero rows/entries of A are skipped, so triangular factors cost
// about half.
inline ComplexMatrix mat_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_product: dimension mismatch");
  const std::size_t n = a.rows(), m = b.cols(), inner = a.cols();
  ComplexMatrix c(n, m);
  parallel_for(n, [&](std::size_t i) {
    cplx* ci = c.row(i);
    for (std::size_t k = 0; k < inner; ++k) {
      const cplx av = a(i, k);
      const double ar = av.real(), ai = av.imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const cplx* bk = b.row(k);
      for (std::size_t j = 0; j < m; ++j) {
        const double br = bk[j].real(), bi = bk[j].imag();
        ci[j] += cplx(ar * br - ai * bi, ar * bi + ai * br);
      }
    }
  });
  c.check_finite();
  return c;
}

inline std::vector<cplx> mat_vec(const ComplexMatrix& a, const std::vector<cplx>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<cplx> out(a.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx acc(0.0, 0.0);
    const cplx* ri = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double ar = ri[j].real(), ai = ri[j].imag();
      const double vr = v[j].real(), vi = v[j].imag();
      acc += cplx(ar * vr - ai * vi, ar * vi + ai * vr);
    }
    out[i] = acc;
  }
  return out;
}

inline std::vector<cplx> adjoint_vec(const ComplexMatrix& a, const std::vector<cplx>& v) {
  if (a.rows() != v.size()) throw std::invalid_argument("adjoint_vec: dimension mismatch");
  std::vector<cplx> out(a.cols(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const cplx* ri = a.row(i);
    const cplx vi = v[i];
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += std::conj(ri[j]) * vi;
  }
  return out;
}

inline double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& x : v) s += x.real() * x.real() + x.imag() * x.imag();
  return std::sqrt(s);
}

inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Exact binomial coefficient: 128-bit integer arithmetic through n = 131
// (every prefix product below is itself a binomial, so the division is
// exact), log-gamma beyond. The long double variant keeps 64 mantissa bits.
inline long double binomial_ld(std::size_t n, std::size_t k) {
  if (k > n) return 0.0L;
  if (k > n - k) k = n - k;
  if (n <= 131) {
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<long double>(r);
  }
  return std::exp(std::lgamma(static_cast<long double>(n) + 1.0L) -
                  std::lgamma(static_cast<long double>(k) + 1.0L) -
                  std::lgamma(static_cast<long double>(n - k) + 1.0L));
}

inline double binomial(std::size_t n, std::size_t k) {
  return static_cast<double>(binomial_ld(n, k));
}

}  // namespace detail

// Largest singular value via power iteration on A*A with a fixed-seed start
// vector (reports stay reproducible). Column and row norms are true lower
// bounds and clamp an under-converged iterate.
inline double op_norm_est(const ComplexMatrix& a, int iters = 200, double tol = 1e-8) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("op_norm_est: square matrix required");
  if (iters < 1) throw std::invalid_argument("op_norm_est: iters must be >= 1");
  const std::size_t n = a.rows();
  if (n == 0) return 0.0;

  std::uint64_t seed = 0x6F70726F6F74ULL;
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = detail::unit_interval(detail::splitmix64(seed)) - 0.5;
    const double im = detail::unit_interval(detail::splitmix64(seed)) - 0.5;
    v[i] = cplx(re, im);
  }
  double nv = vec_norm(v);
  for (auto& x : v) x /= nv;

  double sigma = 0.0, prev = -1.0;
  for (int it = 0; it < iters; ++it) {
    std::vector<cplx> u = mat_vec(a, v);
    sigma = vec_norm(u);
    if (sigma == 0.0) break;
    std::vector<cplx> w = adjoint_vec(a, u);
    const double nw = vec_norm(w);
    if (nw == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
    if (prev >= 0.0 && std::abs(sigma - prev) <= tol * sigma) break;
    prev = sigma;
  }

  double colmax = 0.0, rowmax = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double cs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx x = a(i, j);
      cs += x.real() * x.real() + x.imag() * x.imag();
    }
    colmax = std::max(colmax, cs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double rs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx x = a(i, j);
      rs += x.real() * x.real() + x.imag() * x.imag();
    }
    rowmax = std::max(rowmax, rs);
  }
  return std::max({sigma, std::sqrt(colmax), std::sqrt(rowmax)});
}

// Leading-window comparison: only the first size x size block is trusted in a
// truncated operator identity.
struct Window {
  std::size_t size = 0;
};

inline double window_residual(const ComplexMatrix& a, const ComplexMatrix& b, Window w) {
  if (w.size > std::min(a.rows(), a.cols()) || w.size > std::min(b.rows(), b.cols()))
    throw std::invalid_argument("window_residual: window too large");
  if (w.size == 0) return 0.0;
  ComplexMatrix d(w.size, w.size);
  for (std::size_t i = 0; i < w.size; ++i)
    for (std::size_t j = 0; j < w.size; ++j) d(i, j) = a(i, j) - b(i, j);
  return op_norm_est(d);
}

// Window norm of a single matrix (difference against zero).
inline double window_norm(const ComplexMatrix& a, Window w) {
  if (w.size > std::min(a.rows(), a.cols()))
    throw std::invalid_argument("window_norm: window too large");
  if (w.size == 0) return 0.0;
  return op_norm_est(a.leading_block(w.size));
}

// Lower-triangular matrix of signed binomial coefficients,
// B[i][j] = (-1)^j C(i, j). B is an involution: B.B = I.
inline ComplexMatrix binomial_involution_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("binomial_involution_matrix: n must be >= 1");
  ComplexMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = detail::binomial(i, j);
      b(i, j) = (j % 2 == 0) ? v : -v;
    }
  return b;
}

}  // namespace oproot
