#pragma once

// Lebedev-transform images of the Laguerre basis and the resulting square
// roots of the Hilbert matrix:
//   w_n(tau) = int_0^inf sqrt(2 tau sinh(pi tau))/(pi sqrt(x))
//              K_{i tau}(x/2) e^{-x/2} L_n(x) dx,
//   T[m][n]  = int_0^inf g(tau) w_m(tau) w_n(tau) dtau with g^2 = pi/cosh(pi tau).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oproot/matrix.hpp"
#include "oproot/parallel.hpp"
#include "oproot/quadrature.hpp"
#include "oproot/special.hpp"

namespace oproot {

struct LebedevBasis {
  GridMesh tau_mesh;
  std::vector<std::vector<double>> samples;  // samples[n][k] = w_n(tau_k)
  std::size_t n_max = 0;

  double gram(std::size_t m, std::size_t n) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < tau_mesh.nodes.size(); ++k)
      acc += tau_mesh.weights[k] * samples[m][k] * samples[n][k];
    return acc;
  }

  // <M_f w_m, w_n> for a pointwise weight on the tau axis.
  template <typename F>
  double weighted_gram(std::size_t m, std::size_t n, F&& f) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < tau_mesh.nodes.size(); ++k)
      acc += tau_mesh.weights[k] * f(tau_mesh.nodes[k]) * samples[m][k] * samples[n][k];
    return acc;
  }
};

// The weighted identities see nothing past tau = 11 (pi/cosh(pi tau) drops
// under 1e-15 there), but the raw Gram of w_4 still carries about 1e-3 of its
// mass beyond tau = 12, so the default mesh reaches 16.
inline GridMesh lebedev_tau_mesh_default() {
  GridMesh m = composite_gauss(1e-3, 16.0, 40, 20);
  m.kind = MeshKind::tau_halfline;
  return m;
}

inline LebedevBasis lebedev_basis(std::size_t n_max, const GridMesh& tau_mesh,
                                  std::size_t x_nodes, double gram_tol = 1e-2) {
  if (n_max > 8) throw std::invalid_argument("lebedev_basis: n_max must be <= 8 (desk scale)");
  tau_mesh.validate();

  // x = s^2 removes the 1/sqrt(x) endpoint factor; K_{i tau}(s^2/2) still
  // oscillates in log s near 0, which the geometric grading resolves.
  const double s_max = std::sqrt(40.0);
  const std::size_t levels = 24;
  const std::size_t q = std::max<std::size_t>(8, x_nodes / (levels + 2));
  const GridMesh smesh = composite_graded(0.0, s_max, levels, q, true, false);
  const std::size_t ns = smesh.nodes.size();
  const std::size_t ntau = tau_mesh.nodes.size();

  // K_{i tau_k}(s^2/2) for every (s, tau) pair; the t-quadrature transform
  // weight is shared across tau.
  std::vector<std::vector<double>> kmat(ns);
  parallel_for(ns, [&](std::size_t is) {
    const double y = 0.5 * smesh.nodes[is] * smesh.nodes[is];
    const double tmax = bessel_k_imag_default_tmax(y);
    const std::size_t tnodes = std::size_t(40.0 * std::ceil(tmax / 0.5));
    kmat[is] = bessel_k_imag_many(tau_mesh.nodes, y, tmax, tnodes);
  });

  LebedevBasis basis;
  basis.tau_mesh = tau_mesh;
  basis.n_max = n_max;
  basis.samples.assign(n_max + 1, std::vector<double>(ntau, 0.0));

  // Laguerre values at x = s^2 with the Gaussian factor folded in.
  std::vector<std::vector<double>> lag(n_max + 1, std::vector<double>(ns));
  for (std::size_t is = 0; is < ns; ++is) {
    const double x = smesh.nodes[is] * smesh.nodes[is];
    const std::vector<double> lv = laguerre_values(n_max, x);
    const double damp = std::exp(-0.5 * x) * smesh.weights[is];
    for (std::size_t nn = 0; nn <= n_max; ++nn) lag[nn][is] = lv[nn] * damp;
  }

  parallel_for(ntau, [&](std::size_t k) {
    const double tau = tau_mesh.nodes[k];
    const double front =
        (2.0 / std::numbers::pi) * std::sqrt(2.0 * tau * std::sinh(std::numbers::pi * tau));
    for (std::size_t nn = 0; nn <= n_max; ++nn) {
      double acc = 0.0;
      for (std::size_t is = 0; is < ns; ++is) acc += kmat[is][k] * lag[nn][is];
      basis.samples[nn][k] = front * acc;
    }
  });

  for (std::size_t m = 0; m <= n_max; ++m)
    for (std::size_t n = m; n <= n_max; ++n) {
      const double want = m == n ? 1.0 : 0.0;
      const double got = basis.gram(m, n);
      if (std::abs(got - want) > gram_tol)
        throw std::runtime_error("lebedev_basis: Gram deviation at (" + std::to_string(m) +
                                 "," + std::to_string(n) + "): " + std::to_string(got));
    }
  return basis;
}

// Square root of the Hilbert matrix from a symbol g with g^2 = pi/cosh(pi tau).
// A sign flip above a threshold exhibits a second, equally valid root.
inline ComplexMatrix hilbert_root(const LebedevBasis& basis,
                                  std::optional<double> sign_flip_above = std::nullopt) {
  const std::size_t n = basis.n_max + 1;
  auto g = [&](double tau) {
    double v = std::sqrt(std::numbers::pi / std::cosh(std::numbers::pi * tau));
    if (sign_flip_above && tau > *sign_flip_above) v = -v;
    return v;
  };
  ComplexMatrix t(n, n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t nn = m; nn < n; ++nn) {
      const double v = basis.weighted_gram(m, nn, g);
      t(m, nn) = v;
      t(nn, m) = v;
    }
  return t;
}

}  // namespace oproot
