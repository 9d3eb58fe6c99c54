#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oproot/lebedev.hpp"
#include "oproot/operators.hpp"

using namespace oproot;

namespace {

// One basis shared across the cases; construction is the expensive part.
const LebedevBasis& shared_basis() {
  static const LebedevBasis basis = lebedev_basis(6, lebedev_tau_mesh_default(), 480);
  return basis;
}

}  // namespace

TEST_SUITE("lebedev") {

TEST_CASE("w_0 matches its closed form sqrt(2 pi tau sinh(pi tau)) / cosh(pi tau)") {
  const LebedevBasis& b = shared_basis();
  double worst_abs = 0.0, worst_rel = 0.0;
  for (std::size_t k = 0; k < b.tau_mesh.nodes.size(); ++k) {
    const double tau = b.tau_mesh.nodes[k];
    const double ref =
        std::sqrt(2.0 * std::numbers::pi * tau * std::sinh(std::numbers::pi * tau)) /
        std::cosh(std::numbers::pi * tau);
    worst_abs = std::max(worst_abs, std::abs(b.samples[0][k] - ref));
    if (tau <= 8.0) worst_rel = std::max(worst_rel, std::abs(b.samples[0][k] - ref));
  }
  CHECK(worst_abs <= 1e-4);
  CHECK(worst_rel <= 1e-6);
}

TEST_CASE("basis is orthonormal on the tau mesh") {
  const LebedevBasis& b = shared_basis();
  CHECK(std::abs(b.gram(0, 0) - 1.0) <= 1e-3);
  CHECK(std::abs(b.gram(0, 1)) <= 1e-3);
  double worst = 0.0;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n)
      worst = std::max(worst, std::abs(b.gram(m, n) - (m == n ? 1.0 : 0.0)));
  CHECK(worst <= 1e-3);
}

TEST_CASE("the weighted gram reproduces the hilbert entries") {
  const LebedevBasis& b = shared_basis();
  auto h = [](double tau) { return std::numbers::pi / std::cosh(std::numbers::pi * tau); };
  double worst = 0.0;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n)
      worst = std::max(worst, std::abs(b.weighted_gram(m, n, h) - 1.0 / double(m + n + 1)));
  CHECK(worst <= 1e-3);
}

TEST_CASE("hilbert root sections: symmetry, realness, shrinking defect") {
  const LebedevBasis& b = shared_basis();
  const ComplexMatrix t = hilbert_root(b);
  CHECK(max_abs_diff(t, t.transpose()) == 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) CHECK(t(i, j).imag() == 0.0);

  // The finite section of the root squares to H only up to the projection
  // defect, which shrinks as the section grows.
  const LebedevBasis small = lebedev_basis(4, lebedev_tau_mesh_default(), 480);
  const ComplexMatrix ts = hilbert_root(small);
  const double res_small =
      window_residual(mat_product(ts, ts), hilbert_matrix(5), Window{4});
  const double res_big = window_residual(mat_product(t, t), hilbert_matrix(7), Window{4});
  CHECK(res_big < res_small);
  CHECK(res_big <= 0.15);
}

TEST_CASE("sign-flipped symbol yields a distinct section with the same defect scale") {
  const LebedevBasis& b = shared_basis();
  const ComplexMatrix t = hilbert_root(b);
  const ComplexMatrix tf = hilbert_root(b, 1.0);
  CHECK(max_abs_diff(t, tf) > 1e-3);
  const double res = window_residual(mat_product(tf, tf), hilbert_matrix(7), Window{4});
  CHECK(res <= 0.5);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(lebedev_basis(9, lebedev_tau_mesh_default(), 480), std::invalid_argument);
  // an unreachable gram tolerance reports the offending pair
  CHECK_THROWS_WITH_AS(lebedev_basis(2, lebedev_tau_mesh_default(), 480, 1e-14),
                       doctest::Contains("Gram deviation"), std::runtime_error);
}

}  // TEST_SUITE
