#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oproot/series.hpp"
#include "oproot/special.hpp"
#include "support/oracles.hpp"

using namespace oproot;
using testsupport::Rng;

namespace {

PowerSeries one_minus_z(std::size_t k) {
  PowerSeries f(k);
  f.at(0) = 1.0;
  f.at(1) = -1.0;
  return f;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("mul: (1-z)(1+z) = 1 - z^2, f*1 = f") {
  PowerSeries p(4), q(4);
  p.at(0) = 1.0;
  p.at(1) = -1.0;
  q.at(0) = 1.0;
  q.at(1) = 1.0;
  const PowerSeries r = series_mul(p, q, 4);
  CHECK(r[0] == cplx(1.0));
  CHECK(r[1] == cplx(0.0));
  CHECK(r[2] == cplx(-1.0));
  CHECK(r[3] == cplx(0.0));

  Rng rng(21);
  const PowerSeries f = testsupport::random_series(rng, 9);
  const PowerSeries fid = series_mul(f, PowerSeries::constant(1.0, 9), 9);
  for (std::size_t k = 0; k <= 9; ++k) CHECK(fid[k] == f[k]);
}

TEST_CASE("sqrt of 1-z reproduces the displayed coefficients") {
  const PowerSeries g = series_sqrt(one_minus_z(40), 40);
  CHECK(g[0].real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g[1].real() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(g[2].real() == doctest::Approx(-0.125).epsilon(1e-13));
  CHECK(g[3].real() == doctest::Approx(-0.0625).epsilon(1e-13));
  CHECK(g[4].real() == doctest::Approx(-5.0 / 128.0).epsilon(1e-13));

  const PowerSeries sq = series_mul(g, g, 40);
  for (std::size_t k = 0; k <= 40; ++k)
    CHECK(std::abs(sq[k] - one_minus_z(40)[k]) <= 1e-12);
}

TEST_CASE("sqrt: constants, perfect squares, and the vanishing-term error") {
  const PowerSeries one = series_sqrt(PowerSeries::constant(1.0, 8), 8);
  for (std::size_t k = 0; k <= 8; ++k) CHECK(std::abs(one[k] - (k == 0 ? 1.0 : 0.0)) <= 1e-15);

  PowerSeries sq(8);
  sq.at(0) = 1.0;
  sq.at(1) = 2.0;
  sq.at(2) = 1.0;  // (1+z)^2
  const PowerSeries r = series_sqrt(sq, 8);
  CHECK(std::abs(r[0] - 1.0) <= 1e-14);
  CHECK(std::abs(r[1] - 1.0) <= 1e-14);
  for (std::size_t k = 2; k <= 8; ++k) CHECK(std::abs(r[k]) <= 1e-13);

  CHECK_THROWS_AS(series_sqrt(PowerSeries::monomial(1, 4), 4), std::domain_error);
}

TEST_CASE("sqrt squares back for random zero-free symbols with |f(0)| >= 1/2") {
  // Tails decay so the symbol stays zero-free on the closed disc; for wild
  // O(1) tails the root coefficients grow geometrically and no floating
  // format can hold an absolute 1e-10 at degree 60.
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 8 + std::size_t(rng.uniform(0, 56));
    PowerSeries f(k);
    f.at(0) = cplx(rng.uniform(0.5, 2.0) * (rng.uniform(0, 1) < 0.5 ? -1.0 : 1.0),
                   rng.uniform(-1.0, 1.0));
    double scale = 0.2;
    for (std::size_t d = 1; d <= k; ++d) {
      f.at(d) = rng.complex_in(scale);
      scale *= 0.55;
    }
    const PowerSeries g = series_sqrt(f, k);
    const PowerSeries sq = series_mul(g, g, k);
    for (std::size_t d = 0; d + 2 <= k; ++d) CHECK(std::abs(sq[d] - f[d]) <= 1e-10);
  }
}

TEST_CASE("theta coefficients: leading values and the Laguerre route") {
  const PowerSeries t = theta_coeffs(60);
  const double e1 = std::exp(-1.0);
  CHECK(t[0].real() == doctest::Approx(e1).epsilon(1e-15));
  CHECK(t[1].real() == doctest::Approx(-2.0 * e1).epsilon(1e-14));

  // Theta = e^{-1} (1-z) sum L_n(2) z^n, so theta_n = e^{-1}(L_n(2) - L_{n-1}(2)).
  const std::vector<double> lag = laguerre_values(60, 2.0);
  for (std::size_t n = 1; n <= 50; ++n)
    CHECK(std::abs(t[n].real() - e1 * (lag[n] - lag[n - 1])) <= 1e-11);
}

TEST_CASE("theta partial sums stay inner up to truncation slack") {
  const PowerSeries t = theta_coeffs(200);
  double worst = 0.0;
  for (int j = 0; j < 360; ++j) {
    const double ang = 2.0 * std::numbers::pi * j / 360.0;
    worst = std::max(worst, std::abs(eval_at(t, std::polar(0.9, ang))));
  }
  CHECK(worst <= 1.0 + 1e-3);
}

TEST_CASE("binomial series: integer cases and the half-power match") {
  const PowerSeries lin = binomial_series(1.0, 10);
  CHECK(lin[0] == cplx(1.0));
  CHECK(lin[1] == cplx(-1.0));
  for (std::size_t k = 2; k <= 10; ++k) CHECK(lin[k] == cplx(0.0));

  const PowerSeries half = binomial_series(0.5, 30);
  const PowerSeries root = series_sqrt(one_minus_z(30), 30);
  for (std::size_t k = 0; k <= 30; ++k) CHECK(std::abs(half[k] - root[k]) <= 1e-14);

  const PowerSeries nine = binomial_series(9.0, 12);
  const auto row9 = testsupport::pascal_row(9);
  for (std::size_t k = 0; k <= 9; ++k) {
    const double expect = (k % 2 == 0 ? 1.0 : -1.0) * double(row9[k]);
    CHECK(nine[k].real() == doctest::Approx(expect).epsilon(1e-13));
  }
  CHECK(nine[9].real() == doctest::Approx(-1.0).epsilon(1e-13));
  for (std::size_t k = 10; k <= 12; ++k) CHECK(std::abs(nine[k]) <= 1e-12);
}

TEST_CASE("binomial series multiply like powers") {
  const double alphas[] = {0.2, 0.5, 1.0, 9.0};
  const std::size_t k = 24;
  for (double a : alphas)
    for (double b : alphas) {
      const PowerSeries lhs = series_mul(binomial_series(a, k), binomial_series(b, k), k);
      const PowerSeries rhs = binomial_series(a + b, k);
      for (std::size_t d = 0; d + 1 <= k; ++d) CHECK(std::abs(lhs[d] - rhs[d]) <= 1e-10);
    }
}

TEST_CASE("even/odd split recombines exactly") {
  PowerSeries z = PowerSeries::monomial(1, 3);
  auto [ze, zo] = even_odd_split(z);
  CHECK(order_of_zero(ze) == 4);  // zero series sentinel
  CHECK(zo[1] == cplx(1.0));

  PowerSeries p(2);
  p.at(0) = 1.0;
  p.at(1) = 1.0;
  p.at(2) = 1.0;
  auto [pe, po] = even_odd_split(p);
  CHECK(pe[0] == cplx(1.0));
  CHECK(pe[2] == cplx(1.0));
  CHECK(pe[1] == cplx(0.0));
  CHECK(po[1] == cplx(1.0));

  Rng rng(23);
  const PowerSeries f = testsupport::random_series(rng, 7);
  auto [fe, fo] = even_odd_split(f);
  for (std::size_t k = 0; k <= 7; ++k) CHECK(fe[k] + fo[k] == f[k]);
}

TEST_CASE("analytic multiplier matrices") {
  CHECK(max_abs_diff(analytic_multiplier_matrix(PowerSeries::constant(1.0, 4), 5),
                     ComplexMatrix::identity(5)) == 0.0);

  const ComplexMatrix mz = analytic_multiplier_matrix(PowerSeries::monomial(1, 4), 5);
  for (std::size_t i = 1; i < 5; ++i) CHECK(mz(i, i - 1) == cplx(1.0));
  CHECK(mz(0, 0) == cplx(0.0));

  PowerSeries p(4);
  p.at(0) = 1.0;
  p.at(1) = 1.0;
  const ComplexMatrix mp = analytic_multiplier_matrix(p, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(mp(i, i) == cplx(1.0));
    if (i) CHECK(mp(i, i - 1) == cplx(1.0));
  }
}

TEST_CASE("multiplier matrices are multiplicative on the full block") {
  Rng rng(24);
  const std::size_t n = 12;
  const PowerSeries f = testsupport::random_series(rng, n);
  const PowerSeries g = testsupport::random_series(rng, n);
  const ComplexMatrix lhs = analytic_multiplier_matrix(series_mul(f, g, n), n);
  const ComplexMatrix rhs =
      mat_product(analytic_multiplier_matrix(f, n), analytic_multiplier_matrix(g, n));
  CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
}

TEST_CASE("order_of_zero") {
  CHECK(order_of_zero(PowerSeries::monomial(2, 5)) == 2);
  PowerSeries f(3);
  f.at(0) = 1.0;
  f.at(1) = -1.0;
  CHECK(order_of_zero(f) == 0);

  Rng rng(25);
  for (int trial = 0; trial < 8; ++trial) {
    const PowerSeries h = testsupport::random_series(rng, 6);
    PowerSeries s = series_add(PowerSeries::monomial(1, 8),
                               series_mul(PowerSeries::monomial(2, 8), h, 8));
    CHECK(order_of_zero(s) == 1);
  }
  CHECK(order_of_zero(PowerSeries(5)) == 6);
}

TEST_CASE("disc evaluation") {
  const PowerSeries z = PowerSeries::monomial(1, 3);
  const auto vals = eval_disc_grid(z, {cplx(0.0, 0.5)});
  CHECK(vals[0] == cplx(0.0, 0.5));

  PowerSeries f(2);
  f.at(0) = 1.0;
  f.at(1) = -1.0;
  CHECK(eval_disc_grid(f, {cplx(0.0, 0.0)})[0] == cplx(1.0));

  const PowerSeries t = theta_coeffs(40);
  CHECK(eval_disc_grid(t, {cplx(0.0, 0.0)})[0].real() ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  CHECK_THROWS_AS(eval_disc_grid(f, {cplx(1.0, 0.0)}), std::domain_error);
}

}  // TEST_SUITE
