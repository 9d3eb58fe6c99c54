#pragma once

// Orthogonal polynomial recurrences and the modified Bessel function of
// imaginary order, K_{i tau}(x) = int_0^inf exp(-x cosh t) cos(tau t) dt.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "oproot/parallel.hpp"
#include "oproot/quadrature.hpp"

namespace oproot {

// Laguerre values L_0(x) .. L_nmax(x); orthonormal for exp(-x) dx on (0,inf).
inline std::vector<double> laguerre_values(std::size_t n_max, double x) {
  std::vector<double> l(n_max + 1);
  l[0] = 1.0;
  if (n_max >= 1) l[1] = 1.0 - x;
  for (std::size_t k = 1; k < n_max; ++k)
    l[k + 1] = ((2.0 * double(k) + 1.0 - x) * l[k] - double(k) * l[k - 1]) / (double(k) + 1.0);
  return l;
}

// Chebyshev second kind u_0(x) .. u_nmax(x).
inline std::vector<double> chebyshev_u_values(std::size_t n_max, double x) {
  std::vector<double> u(n_max + 1);
  u[0] = 1.0;
  if (n_max >= 1) u[1] = 2.0 * x;
  for (std::size_t k = 1; k < n_max; ++k) u[k + 1] = 2.0 * x * u[k] - u[k - 1];
  return u;
}

// Cutoff with exp(-x cosh t_max) below 1e-16 and a unit margin.
inline double bessel_k_imag_default_tmax(double x) {
  if (x <= 0.0) throw std::domain_error("bessel_k_imag_default_tmax: x must be positive");
  return std::acosh(std::max(3.0, 38.0 / x)) + 1.0;
}

namespace detail {

// Panels of width <= 1/2 resolve cos(tau t) for tau <= 12 at the orders used.
inline GridMesh bessel_t_mesh(double t_max, std::size_t nodes) {
  const std::size_t panels = std::max<std::size_t>(1, std::size_t(std::ceil(t_max / 0.5)));
  const std::size_t q = std::max<std::size_t>(6, nodes / panels);
  return composite_gauss(0.0, t_max, panels, q);
}

}  // namespace detail

inline double bessel_k_imag(double tau, double x, double t_max, std::size_t nodes) {
  if (x <= 0.0) throw std::domain_error("bessel_k_imag: x must be positive");
  const GridMesh m = detail::bessel_t_mesh(t_max, nodes);
  double acc = 0.0;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    const double t = m.nodes[i];
    acc += m.weights[i] * std::exp(-x * std::cosh(t)) * std::cos(tau * t);
  }
  return acc;
}

// K_{i tau}(x) for a whole tau list at one x: the exponential factor is
// shared, only the cosine changes.
inline std::vector<double> bessel_k_imag_many(const std::vector<double>& taus, double x,
                                              double t_max, std::size_t nodes) {
  if (x <= 0.0) throw std::domain_error("bessel_k_imag_many: x must be positive");
  const GridMesh m = detail::bessel_t_mesh(t_max, nodes);
  const std::size_t nt = m.nodes.size();
  std::vector<double> damp(nt);
  for (std::size_t i = 0; i < nt; ++i)
    damp[i] = m.weights[i] * std::exp(-x * std::cosh(m.nodes[i]));
  std::vector<double> out(taus.size(), 0.0);
  parallel_for(taus.size(), [&](std::size_t k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nt; ++i) acc += damp[i] * std::cos(taus[k] * m.nodes[i]);
    out[k] = acc;
  });
  return out;
}

}  // namespace oproot
