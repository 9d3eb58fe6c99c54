#pragma once

// Truncated power series: arithmetic, Newton square root, the atomic inner
// function, binomial series, even/odd splitting and analytic multiplier
// matrices. Every bounded-symbol construction in the root builders goes
// through here.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oproot/matrix.hpp"

namespace oproot {

class PowerSeries {
 public:
  // Zero series of the given truncation degree.
  explicit PowerSeries(std::size_t order) : c_(order + 1, cplx(0.0, 0.0)) {}

  explicit PowerSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
    check_finite();
  }

  static PowerSeries constant(cplx value, std::size_t order) {
    PowerSeries f(order);
    f.c_[0] = value;
    return f;
  }

  static PowerSeries monomial(std::size_t power, std::size_t order, cplx coeff = 1.0) {
    if (power > order) throw std::invalid_argument("PowerSeries::monomial: power > order");
    PowerSeries f(order);
    f.c_[power] = coeff;
    return f;
  }

  std::size_t order() const { return c_.size() - 1; }

  // Coefficient read; indices past the truncation degree read as zero.
  cplx operator[](std::size_t k) const { return k < c_.size() ? c_[k] : cplx(0.0, 0.0); }

  cplx& at(std::size_t k) { return c_.at(k); }
  const std::vector<cplx>& coeffs() const { return c_; }

  void check_finite() const {
    for (const cplx& v : c_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("PowerSeries: non-finite coefficient");
  }

 private:
  std::vector<cplx> c_;
};

// Cauchy product truncated at degree k.
inline PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g, std::size_t k) {
  PowerSeries h(k);
  const std::size_t fo = f.order(), go = g.order();
  for (std::size_t n = 0; n <= k; ++n) {
    cplx acc(0.0, 0.0);
    const std::size_t lo = n > go ? n - go : 0;
    const std::size_t hi = std::min(n, fo);
    for (std::size_t i = lo; i <= hi; ++i) acc += f[i] * g[n - i];
    h.at(n) = acc;
  }
  return h;
}

inline PowerSeries series_add(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t k = std::max(f.order(), g.order());
  PowerSeries h(k);
  for (std::size_t n = 0; n <= k; ++n) h.at(n) = f[n] + g[n];
  return h;
}

inline PowerSeries series_sub(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t k = std::max(f.order(), g.order());
  PowerSeries h(k);
  for (std::size_t n = 0; n <= k; ++n) h.at(n) = f[n] - g[n];
  return h;
}

inline PowerSeries series_scale(const PowerSeries& f, cplx s) {
  PowerSeries h(f.order());
  for (std::size_t n = 0; n <= f.order(); ++n) h.at(n) = s * f[n];
  return h;
}

// Multiplication by z^p at unchanged truncation degree.
inline PowerSeries shift_up(const PowerSeries& f, std::size_t p = 1) {
  PowerSeries h(f.order());
  for (std::size_t n = p; n <= f.order(); ++n) h.at(n) = f[n - p];
  return h;
}

// Quotient f/g through degree k; requires g(0) != 0.
inline PowerSeries series_div(const PowerSeries& f, const PowerSeries& g, std::size_t k) {
  const cplx g0 = g[0];
  if (g0 == cplx(0.0, 0.0))
    throw std::domain_error("series_div: divisor has vanishing constant term");
  PowerSeries q(k);
  for (std::size_t n = 0; n <= k; ++n) {
    cplx acc = f[n];
    const std::size_t hi = std::min(n, g.order());
    for (std::size_t i = 1; i <= hi; ++i) acc -= g[i] * q[n - i];
    q.at(n) = acc / g0;
  }
  return q;
}

// Square root with g(0) the principal root of f(0), by Newton iteration
// g <- (g + f/g)/2 in truncated arithmetic. ceil(log2(k+1)) iterations reach
// full degree; two extra polish rounding.
inline PowerSeries series_sqrt(const PowerSeries& f, std::size_t k) {
  const cplx f0 = f[0];
  if (f0 == cplx(0.0, 0.0))
    throw std::domain_error("series_sqrt: vanishing constant term, no analytic root at 0");
  int its = 2;
  for (std::size_t reach = 1; reach < k + 1; reach *= 2) ++its;
  PowerSeries g = PowerSeries::constant(std::sqrt(f0), k);
  for (int i = 0; i < its; ++i) {
    PowerSeries q = series_div(f, g, k);
    for (std::size_t n = 0; n <= k; ++n) g.at(n) = 0.5 * (g[n] + q[n]);
  }
  return g;
}

// Taylor coefficients of the atomic inner function exp((z+1)/(z-1)).
// With g = (z+1)/(z-1) = -1 - 2z - 2z^2 - ..., the coefficients follow the
// first-order recurrence of Theta' = g' Theta from Theta(0) = 1/e.
inline PowerSeries theta_coeffs(std::size_t k) {
  PowerSeries t(k);
  t.at(0) = std::exp(-1.0);
  for (std::size_t n = 0; n + 1 <= k; ++n) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j <= n; ++j) {
      const double gp = -2.0 * (double(j) + 1.0);  // coefficient j of g'
      acc += gp * t[n - j];
    }
    t.at(n + 1) = acc / (double(n) + 1.0);
  }
  return t;
}

// Coefficients of (1-z)^alpha, principal branch:
// c_0 = 1, c_{n+1} = c_n (n - alpha) / (n + 1).
inline PowerSeries binomial_series(double alpha, std::size_t k) {
  PowerSeries c(k);
  c.at(0) = 1.0;
  for (std::size_t n = 0; n + 1 <= k; ++n)
    c.at(n + 1) = c[n] * ((double(n) - alpha) / (double(n) + 1.0));
  return c;
}

// Even/odd coefficient split; recombination is the identity by construction.
inline std::pair<PowerSeries, PowerSeries> even_odd_split(const PowerSeries& g) {
  PowerSeries ge(g.order()), go(g.order());
  for (std::size_t n = 0; n <= g.order(); ++n) {
    if (n % 2 == 0)
      ge.at(n) = g[n];
    else
      go.at(n) = g[n];
  }
  return {ge, go};
}

// n x n lower-triangular Toeplitz matrix of multiplication by f on the
// truncated coefficient space: M[i][j] = f[i-j] for i >= j.
inline ComplexMatrix analytic_multiplier_matrix(const PowerSeries& f, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = f[i - j];
  return m;
}

// Smallest n with |coeff_n| > tol; order+1 when every coefficient is below.
inline std::size_t order_of_zero(const PowerSeries& f, double tol = 1e-9) {
  for (std::size_t n = 0; n <= f.order(); ++n)
    if (std::abs(f[n]) > tol) return n;
  return f.order() + 1;
}

inline cplx eval_at(const PowerSeries& f, cplx z) {
  cplx acc = f[f.order()];
  for (std::size_t n = f.order(); n-- > 0;) acc = acc * z + f[n];
  return acc;
}

// Horner evaluation at points of the open unit disc.
inline std::vector<cplx> eval_disc_grid(const PowerSeries& f, const std::vector<cplx>& points) {
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const cplx& z : points) {
    if (std::abs(z) >= 1.0)
      throw std::domain_error("eval_disc_grid: point outside open unit disc");
    out.push_back(eval_at(f, z));
  }
  return out;
}

inline PowerSeries series_derivative(const PowerSeries& f) {
  if (f.order() == 0) return PowerSeries(std::size_t{0});
  PowerSeries d(f.order() - 1);
  for (std::size_t n = 1; n <= f.order(); ++n) d.at(n - 1) = double(n) * f[n];
  return d;
}

}  // namespace oproot
