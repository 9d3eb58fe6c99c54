#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oproot/operators.hpp"
#include "oproot/roots.hpp"

using namespace oproot;

TEST_SUITE("roots.volterra") {

TEST_CASE("abel root applied to the constant is exact on the nodes") {
  const std::size_t m = 128;
  const double h = 1.0 / double(m);
  const ComplexMatrix y = volterra_abel_root(m);
  std::vector<cplx> ones(m, cplx(1.0, 0.0));
  const std::vector<cplx> y1 = mat_vec(y, ones);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = (double(i) + 0.5) * h;
    // telescoping weights integrate the kernel of a constant exactly
    CHECK(std::abs(y1[i] - cplx(2.0 / std::sqrt(std::numbers::pi) * std::sqrt(x), 0.0)) <=
          1e-13);
  }
  CHECK(y(5, 5).real() == doctest::Approx(2.0 / std::sqrt(std::numbers::pi) *
                                          std::sqrt(0.5 * h)));
}

TEST_CASE("squared root tracks the integral of 1 up to the scheme error") {
  const std::size_t m = 256;
  const ComplexMatrix y = volterra_abel_root(m);
  std::vector<cplx> ones(m, cplx(1.0, 0.0));
  const std::vector<cplx> y2 = mat_vec(y, mat_vec(y, ones));
  double sup = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = (double(i) + 0.5) / double(m);
    sup = std::max(sup, std::abs(y2[i] - cplx(x, 0.0)));
  }
  CHECK(sup <= 2e-2);
}

TEST_CASE("residual to the volterra matrix decreases with refinement") {
  double prev = 1e300;
  for (std::size_t m : {64ul, 128ul, 256ul}) {
    const ComplexMatrix y = volterra_abel_root(m);
    const double res = op_norm_est(mat_sub(mat_product(y, y), volterra_matrix(m)));
    CHECK(res < prev);
    CHECK(res <= 3e-2);
    prev = res;
  }
}

TEST_CASE("compressed-shift symbol starts at exp(-1/2)") {
  const PowerSeries psi = compressed_shift_symbol(64);
  CHECK(psi[0].real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(psi[0].imag() == doctest::Approx(0.0).epsilon(1e-14));

  // psi^2 reproduces z + Theta (1-z)^{1/5} through the truncation
  const PowerSeries f = series_add(
      PowerSeries::monomial(1, 64), series_mul(theta_coeffs(64), binomial_series(0.2, 64), 64));
  const PowerSeries sq = series_mul(psi, psi, 64);
  for (std::size_t n = 0; n <= 62; ++n) CHECK(std::abs(sq[n] - f[n]) <= 1e-10);
}

TEST_CASE("compressed-shift root on the zero matrix is exp(-1/2) I") {
  const ComplexMatrix r = compressed_shift_root(ComplexMatrix(8, 8), 32);
  CHECK(max_abs_diff(r, mat_scale(ComplexMatrix::identity(8), std::exp(-0.5))) <= 1e-12);
}

TEST_CASE("compressed-shift residual shrinks with the series degree") {
  const ComplexMatrix mc = cayley_volterra(volterra_matrix(64));
  double prev = 1e300;
  for (std::size_t k : {32ul, 128ul, 512ul}) {
    const ComplexMatrix r = compressed_shift_root(mc, k);
    const double res = op_norm_est(mat_sub(mat_product(r, r), mc));
    CHECK(res < prev);
    prev = res;
  }
}

TEST_CASE("cesaro averaging beats plain partial sums at the convergence edge") {
  const ComplexMatrix mc = cayley_volterra(volterra_matrix(64));
  const ComplexMatrix avg = compressed_shift_root(mc, 64, true);
  const ComplexMatrix plain = compressed_shift_root(mc, 64, false);
  const double res_avg = op_norm_est(mat_sub(mat_product(avg, avg), mc));
  const double res_plain = op_norm_est(mat_sub(mat_product(plain, plain), mc));
  CHECK(res_avg < res_plain);
}

TEST_CASE("compressed-shift rejects expansive matrices") {
  CHECK_THROWS_AS(compressed_shift_root(mat_scale(ComplexMatrix::identity(4), 2.0), 16),
                  std::invalid_argument);
}

}  // TEST_SUITE
