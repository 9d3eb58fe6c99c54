#pragma once

// Square-root constructions for the classical operators: the parameterized
// roots of S^2, the Toeplitz-root decision, the Abel-kernel root of the
// Volterra operator, the compressed-shift root by series functional calculus,
// the Chebyshev-integral root of (S+S*)/2, and three routes to the roots of
// the Cesaro matrix.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oproot/matrix.hpp"
#include "oproot/operators.hpp"
#include "oproot/quadrature.hpp"
#include "oproot/series.hpp"
#include "oproot/special.hpp"

namespace oproot {

// ---------------------------------------------------------------------------
// Roots of S^2: Q = W* U* [za, b; zc, -za] U W with z a^2 + b c = 1.
// ---------------------------------------------------------------------------

struct ShiftRootParams {
  PowerSeries a, b, c;
  std::array<cplx, 4> u;  // row-major 2x2 constant unitary

  ShiftRootParams(PowerSeries a_, PowerSeries b_, PowerSeries c_, std::array<cplx, 4> u_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), u(u_) {}

  double unitarity_defect() const {
    const cplx u00 = u[0], u01 = u[1], u10 = u[2], u11 = u[3];
    // U^H U - I entries
    const cplx g00 = std::conj(u00) * u00 + std::conj(u10) * u10 - 1.0;
    const cplx g01 = std::conj(u00) * u01 + std::conj(u10) * u11;
    const cplx g10 = std::conj(u01) * u00 + std::conj(u11) * u10;
    const cplx g11 = std::conj(u01) * u01 + std::conj(u11) * u11 - 1.0;
    return std::max({std::abs(g00), std::abs(g01), std::abs(g10), std::abs(g11)});
  }

  // Max coefficient magnitude of z a^2 + b c - 1 through the jointly reliable
  // degree of the stored truncations.
  double constraint_residual() const {
    const std::size_t k = std::min({a.order(), b.order(), c.order()});
    PowerSeries za2 = shift_up(series_mul(a, a, k));
    PowerSeries bc = series_mul(b, c, k);
    double worst = 0.0;
    for (std::size_t n = 0; n <= k; ++n) {
      cplx r = za2[n] + bc[n] - (n == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0));
      worst = std::max(worst, std::abs(r));
    }
    return worst;
  }
};

namespace detail {

// Stacked index of basis vector z^i under the interleaving map
// z^{2k} -> (z^k, 0), z^{2k+1} -> (0, z^k).
inline std::size_t interleave_index(std::size_t i, std::size_t half) {
  return (i % 2 == 0) ? i / 2 : half + i / 2;
}

}  // namespace detail

inline ComplexMatrix shift2_root(const ShiftRootParams& p, std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("shift2_root: n must be even and >= 2");
  if (p.unitarity_defect() > 1e-10)
    throw std::invalid_argument("shift2_root: U is not unitary");
  if (p.constraint_residual() > 1e-8)
    throw std::invalid_argument("shift2_root: z a^2 + b c = 1 violated");

  const std::size_t half = n / 2;
  const ComplexMatrix t11 = analytic_multiplier_matrix(shift_up(p.a), half);
  const ComplexMatrix t12 = analytic_multiplier_matrix(p.b, half);
  const ComplexMatrix t21 = analytic_multiplier_matrix(shift_up(p.c), half);

  // Conjugate the 2x2 block symbol by the constant unitary: A = U^H T U.
  const ComplexMatrix* t[2][2] = {{&t11, &t12}, {&t21, &t11}};
  const double tsign[2][2] = {{1.0, 1.0}, {1.0, -1.0}};  // t22 = -t11
  ComplexMatrix stacked(n, n);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      cplx coef[2][2];
      for (int pp = 0; pp < 2; ++pp)
        for (int q = 0; q < 2; ++q)
          coef[pp][q] = std::conj(p.u[2 * pp + r]) * p.u[2 * q + s];
      for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < half; ++j) {
          cplx acc(0.0, 0.0);
          for (int pp = 0; pp < 2; ++pp)
            for (int q = 0; q < 2; ++q)
              acc += coef[pp][q] * tsign[pp][q] * (*t[pp][q])(i, j);
          stacked(r * half + i, s * half + j) = acc;
        }
    }

  // Pull back through the interleaving permutation; W never materializes.
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pi = detail::interleave_index(i, half);
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = stacked(pi, detail::interleave_index(j, half));
  }
  return out;
}

// Preset parameter families for the CLI and the checks.
inline ShiftRootParams shift2_params_cross(std::size_t degree) {
  // a = 0, b = 1, c = 1, U = I
  return ShiftRootParams(PowerSeries(degree), PowerSeries::constant(1.0, degree),
                         PowerSeries::constant(1.0, degree),
                         {cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)});
}

inline ShiftRootParams shift2_params_sqrt(std::size_t degree) {
  // a = 1, b = c = sqrt(1-z), U = swap
  PowerSeries ones = PowerSeries::constant(1.0, degree);
  PowerSeries one_minus_z(degree);
  one_minus_z.at(0) = 1.0;
  one_minus_z.at(1) = -1.0;
  PowerSeries root = series_sqrt(one_minus_z, degree);
  return ShiftRootParams(ones, root, root, {cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)});
}

inline ShiftRootParams shift2_params_shift(std::size_t degree) {
  // a = 0, b = c = 1, U = swap; reproduces S itself
  return ShiftRootParams(PowerSeries(degree), PowerSeries::constant(1.0, degree),
                         PowerSeries::constant(1.0, degree),
                         {cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)});
}

// ---------------------------------------------------------------------------
// Toeplitz root decision for polynomial symbols.
// ---------------------------------------------------------------------------

// Polynomial from its zero multiset, as a series of the given order.
inline PowerSeries poly_from_roots(const std::vector<cplx>& zeros, cplx lead,
                                   std::size_t order) {
  PowerSeries p = PowerSeries::constant(lead, order);
  for (const cplx& r : zeros) {
    PowerSeries factor(order);
    factor.at(0) = -r;
    if (order >= 1) factor.at(1) = 1.0;
    p = series_mul(p, factor, order);
  }
  return p;
}

// The analytic symbol has a Toeplitz square root exactly when every zero in
// the open disc has even multiplicity; the root pairs those zeros and takes
// the series square root of the zero-free remainder.
inline std::optional<PowerSeries> toeplitz_root_decide(const std::vector<cplx>& zeros,
                                                       cplx lead, std::size_t k) {
  if (lead == cplx(0.0, 0.0))
    throw std::invalid_argument("toeplitz_root_decide: zero leading coefficient");
  std::vector<cplx> pending(zeros);
  std::vector<cplx> paired;
  std::vector<cplx> outer;
  const double same = 1e-9;
  while (!pending.empty()) {
    const cplx r = pending.back();
    pending.pop_back();
    if (std::abs(r) >= 1.0) {
      outer.push_back(r);
      continue;
    }
    bool matched = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (std::abs(pending[i] - r) <= same) {
        pending.erase(pending.begin() + long(i));
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;  // odd multiplicity inside the disc
    paired.push_back(r);
  }
  PowerSeries outer_poly = poly_from_roots(outer, lead, k);
  PowerSeries psi = series_sqrt(outer_poly, k);
  PowerSeries inner_poly = poly_from_roots(paired, cplx(1.0, 0.0), k);
  return series_mul(inner_poly, psi, k);
}

// ---------------------------------------------------------------------------
// Abel-kernel root of the Volterra operator.
// ---------------------------------------------------------------------------

// Product integration of (1/sqrt(pi)) int_0^x f(t) (x-t)^{-1/2} dt on the
// midpoint grid: f is frozen per cell and the kernel integrated exactly, so
// the weights telescope.
inline ComplexMatrix volterra_abel_root(std::size_t m) {
  if (m < 2) throw std::invalid_argument("volterra_abel_root: m must be >= 2");
  const double h = 1.0 / double(m);
  const double c = 2.0 / std::sqrt(std::numbers::pi);
  ComplexMatrix y(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const double xi = (double(i) + 0.5) * h;
    for (std::size_t j = 0; j < i; ++j) {
      const double tj = double(j) * h;
      const double tj1 = double(j + 1) * h;
      y(i, j) = c * (std::sqrt(xi - tj) - std::sqrt(xi - tj1));
    }
    y(i, i) = c * std::sqrt(0.5 * h);  // partial cell [t_i, x_i]
  }
  return y;
}

// ---------------------------------------------------------------------------
// Compressed-shift root through the Cayley image of the Volterra operator.
// ---------------------------------------------------------------------------

// Root symbol sqrt(z + Theta(z) (1-z)^{1/5}) as a truncated series.
inline PowerSeries compressed_shift_symbol(std::size_t k) {
  PowerSeries f = series_add(PowerSeries::monomial(1, k),
                             series_mul(theta_coeffs(k), binomial_series(0.2, k), k));
  return series_sqrt(f, k);
}

// Evaluates the symbol at the Cayley matrix. Plain partial sums sit at the
// edge of convergence (the matrix is a contraction of norm close to 1), so
// Cesaro averaging of the first k partial sums is the default.
inline ComplexMatrix compressed_shift_root(const ComplexMatrix& m_cayley, std::size_t k,
                                           bool cesaro_avg = true) {
  if (m_cayley.rows() != m_cayley.cols())
    throw std::invalid_argument("compressed_shift_root: square matrix required");
  if (k < 1) throw std::invalid_argument("compressed_shift_root: k must be >= 1");
  if (op_norm_est(m_cayley) > 1.05)
    throw std::invalid_argument("compressed_shift_root: matrix norm exceeds 1.05");

  const PowerSeries psi = compressed_shift_symbol(k);
  const std::size_t n = m_cayley.rows();
  ComplexMatrix acc = mat_scale(ComplexMatrix::identity(n), psi[0]);
  ComplexMatrix power = ComplexMatrix::identity(n);
  const std::size_t top = cesaro_avg ? k - 1 : k;
  for (std::size_t j = 1; j <= top; ++j) {
    power = mat_product(power, m_cayley);
    const double w = cesaro_avg ? 1.0 - double(j) / double(k) : 1.0;
    acc = mat_add(acc, mat_scale(power, w * psi[j]));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Roots of (S+S*)/2 by Chebyshev-weighted integrals.
// ---------------------------------------------------------------------------

enum class TcosBranch { principal, flipped };

namespace detail {

// Quadrature for int_{-1}^{1} phi(x) u_n u_m sqrt(1-x^2) dx: split at the
// kink of phi at 0, panels graded into all four sqrt-type endpoints.
inline GridMesh tcos_mesh(std::size_t quad_nodes) {
  const std::size_t levels = 30;
  const std::size_t q = std::max<std::size_t>(6, quad_nodes / (4 * levels + 4));
  GridMesh left = composite_graded(-1.0, 0.0, levels, q, true, true);
  GridMesh right = composite_graded(0.0, 1.0, levels, q, true, true);
  GridMesh m;
  m.nodes = std::move(left.nodes);
  m.weights = std::move(left.weights);
  m.nodes.insert(m.nodes.end(), right.nodes.begin(), right.nodes.end());
  m.weights.insert(m.weights.end(), right.weights.begin(), right.weights.end());
  return m;
}

inline ComplexMatrix tcos_entries(std::size_t n, const std::function<cplx(double)>& phi,
                                  std::size_t quad_nodes) {
  const GridMesh mesh = tcos_mesh(quad_nodes);
  const std::size_t nk = mesh.nodes.size();
  // u-values per node, scaled by the full weight phi * rho * w.
  std::vector<std::vector<double>> u(n, std::vector<double>(nk));
  std::vector<cplx> wphi(nk);
  for (std::size_t t = 0; t < nk; ++t) {
    const double x = mesh.nodes[t];
    const std::vector<double> uv = chebyshev_u_values(n - 1, x);
    for (std::size_t r = 0; r < n; ++r) u[r][t] = uv[r];
    wphi[t] = mesh.weights[t] * std::sqrt(std::max(0.0, 1.0 - x * x)) * phi(x);
  }
  ComplexMatrix b(n, n);
  const double scale = 2.0 / std::numbers::pi;
  parallel_for(n, [&](std::size_t mr) {
    for (std::size_t nc = mr; nc < n; ++nc) {
      cplx acc(0.0, 0.0);
      for (std::size_t t = 0; t < nk; ++t) acc += wphi[t] * (u[mr][t] * u[nc][t]);
      b(mr, nc) = scale * acc;
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) b(i, j) = b(j, i);  // symmetric integrand
  return b;
}

}  // namespace detail

// Entry matrix for an arbitrary measurable symbol phi(x); the root builders
// and the phi(x) = x consistency hook share this path.
inline ComplexMatrix tcos_root_with_symbol(std::size_t n, const std::function<cplx(double)>& phi,
                                           std::size_t quad_nodes) {
  if (n < 2) throw std::invalid_argument("tcos_root_with_symbol: n must be >= 2");
  if (quad_nodes < 8 * n)
    throw std::invalid_argument("tcos_root_with_symbol: quad_nodes must be >= 8n");
  ComplexMatrix full = detail::tcos_entries(n, phi, quad_nodes);
  ComplexMatrix half = detail::tcos_entries(n, phi, quad_nodes / 2);
  if (max_abs_diff(full, half) > 1e-8)
    throw std::runtime_error("tcos_root_with_symbol: quadrature node budget too small");
  return full;
}

inline ComplexMatrix tcos_root(std::size_t n, TcosBranch branch, std::size_t quad_nodes) {
  const double flip = branch == TcosBranch::flipped ? -1.0 : 1.0;
  auto phi = [flip](double x) -> cplx {
    if (x >= 0.0) return cplx(std::sqrt(x), 0.0);
    return cplx(0.0, flip * std::sqrt(-x));
  };
  return tcos_root_with_symbol(n, phi, quad_nodes);
}

// ---------------------------------------------------------------------------
// Cesaro roots: closed form, operator series, and binomial factorization.
// ---------------------------------------------------------------------------

// Reference evaluation of the alternating-sum entry formula
//   C(i,j) sum_l (-1)^l C(i-j, l) / sqrt(l+j+1).
// Cancellation destroys it beyond i-j of about 40; keep to the small band.
inline double cesaro_entry_alternating(std::size_t i, std::size_t j) {
  if (j > i) return 0.0;
  double s = 0.0;
  for (std::size_t l = 0; l <= i - j; ++l) {
    const double term = detail::binomial(i - j, l) / std::sqrt(double(l + j) + 1.0);
    s += (l % 2 == 0) ? term : -term;
  }
  return detail::binomial(i, j) * s;
}

namespace detail {

// Nodes for int_0^inf e^{-(j+1) t^2} (1 - e^{-t^2})^{i-j} dt; the integrand
// is entire, so a handful of moderate panels reaches machine precision.
inline GridMesh cesaro_entry_mesh() {
  const double tmax = std::sqrt(40.0);
  GridMesh m;
  const GaussRule r = gauss_legendre(86);
  const double bp[] = {0.0, 0.5, 1.0, 2.0, 3.0, 4.5, tmax};
  for (std::size_t p = 0; p + 1 < sizeof(bp) / sizeof(bp[0]); ++p)
    append_gauss_panel(m, r, bp[p], bp[p + 1]);
  return m;
}

}  // namespace detail

// Lower-triangular closed-form root. Entries use the integral rewrite
//   A_ij = C(i,j) (2/sqrt(pi)) int_0^inf e^{-(j+1)t^2} (1-e^{-t^2})^{i-j} dt,
// equal to the alternating sum but free of cancellation for large i-j.
inline ComplexMatrix cesaro_root_closed(std::size_t n, int global_sign) {
  if (n < 1) throw std::invalid_argument("cesaro_root_closed: n must be >= 1");
  if (global_sign != 1 && global_sign != -1)
    throw std::invalid_argument("cesaro_root_closed: sign must be +1 or -1");
  const GridMesh mesh = detail::cesaro_entry_mesh();
  const std::size_t nk = mesh.nodes.size();

  // Power tables over the nodes: ebase[t]^d and (1-ebase[t])^d.
  std::vector<double> ebase(nk);
  for (std::size_t t = 0; t < nk; ++t) ebase[t] = std::exp(-mesh.nodes[t] * mesh.nodes[t]);
  std::vector<std::vector<double>> epow(n + 1, std::vector<double>(nk));
  std::vector<std::vector<double>> cpow(n, std::vector<double>(nk));
  for (std::size_t t = 0; t < nk; ++t) {
    epow[0][t] = 1.0;
    cpow[0][t] = 1.0;
  }
  for (std::size_t d = 1; d <= n; ++d)
    for (std::size_t t = 0; t < nk; ++t) epow[d][t] = epow[d - 1][t] * ebase[t];
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t t = 0; t < nk; ++t) cpow[d][t] = cpow[d - 1][t] * (1.0 - ebase[t]);

  const double scale = double(global_sign) * 2.0 / std::sqrt(std::numbers::pi);
  ComplexMatrix a(n, n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double integral = 0.0;
      const std::vector<double>& ej = epow[j + 1];
      const std::vector<double>& ci = cpow[i - j];
      for (std::size_t t = 0; t < nk; ++t) integral += mesh.weights[t] * ej[t] * ci[t];
      a(i, j) = scale * detail::binomial(i, j) * integral;
    }
  });
  return a;
}

// Partial sums of +/- (I - (1/2)(I-C) - (1/8)(I-C)^2 - ...), the sqrt(1-z)
// Taylor coefficients applied to I - C.
inline ComplexMatrix cesaro_root_series(std::size_t n, std::size_t terms) {
  if (n < 1) throw std::invalid_argument("cesaro_root_series: n must be >= 1");
  if (terms < 1) throw std::invalid_argument("cesaro_root_series: terms must be >= 1");
  const PowerSeries coeff = binomial_series(0.5, terms - 1);
  const ComplexMatrix imc = mat_sub(ComplexMatrix::identity(n), cesaro_matrix(n));
  ComplexMatrix acc = mat_scale(ComplexMatrix::identity(n), coeff[0]);
  ComplexMatrix power = ComplexMatrix::identity(n);
  for (std::size_t kk = 1; kk < terms; ++kk) {
    power = mat_product(power, imc);
    acc = mat_add(acc, mat_scale(power, coeff[kk]));
  }
  return acc;
}

// Sign assignment for the factored root's diagonal, indexed from 1.
class SignPattern {
 public:
  static SignPattern constant(int s) {
    SignPattern p;
    p.base_ = check(s);
    return p;
  }

  SignPattern& set(std::size_t index, int s) {
    if (index < 1) throw std::invalid_argument("SignPattern: indices start at 1");
    overrides_[index] = check(s);
    return *this;
  }

  int at(std::size_t index) const {
    auto it = overrides_.find(index);
    return it == overrides_.end() ? base_ : it->second;
  }

 private:
  static int check(int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("SignPattern: values must be +1 or -1");
    return s;
  }
  int base_ = 1;
  std::map<std::size_t, int> overrides_;
};

// B diag(sigma(i+1)/sqrt(i+1)) B with B the binomial involution. The entry
// sums alternate with terms up to C(i,k) C(k,j), so they are accumulated in
// extended precision; past N of about 40 the cancellation swamps any machine
// format and the closed-form route is the one to trust.
inline ComplexMatrix cesaro_root_factored(std::size_t n, const SignPattern& sigma) {
  if (n < 1) throw std::invalid_argument("cesaro_root_factored: n must be >= 1");
  std::vector<long double> diag(n);
  for (std::size_t k = 0; k < n; ++k)
    diag[k] = static_cast<long double>(sigma.at(k + 1)) /
              std::sqrt(static_cast<long double>(k) + 1.0L);
  ComplexMatrix a(n, n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      long double acc = 0.0L;
      for (std::size_t k = j; k <= i; ++k) {
        const long double term =
            detail::binomial_ld(i, k) * detail::binomial_ld(k, j) * diag[k];
        acc += ((k + j) % 2 == 0) ? term : -term;
      }
      a(i, j) = static_cast<double>(acc);
    }
  });
  return a;
}

}  // namespace oproot
