#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oproot/special.hpp"

using namespace oproot;

TEST_SUITE("special") {

TEST_CASE("laguerre recurrence spot values") {
  // L_2(x) = 1 - 2x + x^2/2
  const std::vector<double> l = laguerre_values(4, 0.5);
  CHECK(l[0] == 1.0);
  CHECK(l[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(l[2] == doctest::Approx(1.0 - 1.0 + 0.125).epsilon(1e-14));
}

TEST_CASE("chebyshev u recurrence vs the sine form") {
  for (double theta : {0.3, 1.1, 2.7}) {
    const double x = std::cos(theta);
    const std::vector<double> u = chebyshev_u_values(9, x);
    for (std::size_t n = 0; n <= 9; ++n)
      CHECK(u[n] ==
            doctest::Approx(std::sin(double(n + 1) * theta) / std::sin(theta)).epsilon(1e-12));
  }
}

TEST_CASE("bessel k at order zero matches the classical value") {
  const double tmax = bessel_k_imag_default_tmax(1.0);
  const double v = bessel_k_imag(0.0, 1.0, tmax, 400);
  CHECK(v == doctest::Approx(0.42102443824070834).epsilon(1e-10));
}

TEST_CASE("bessel k: doubled-node self consistency") {
  for (double tau : {0.0, 2.5, 8.0}) {
    for (double x : {0.05, 1.0, 6.0}) {
      const double tmax = bessel_k_imag_default_tmax(x);
      const double coarse = bessel_k_imag(tau, x, tmax, 600);
      const double fine = bessel_k_imag(tau, x, tmax, 1200);
      CHECK(std::abs(coarse - fine) <= 1e-8);
    }
  }
}

TEST_CASE("bessel k large-argument asymptotics") {
  const double x = 20.0;
  const double v = bessel_k_imag(0.0, x, bessel_k_imag_default_tmax(x), 600);
  const double leading = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
  CHECK(std::abs(v / leading - 1.0) <= 0.02);
}

TEST_CASE("bessel k rejects nonpositive arguments") {
  CHECK_THROWS_AS(bessel_k_imag(1.0, 0.0, 1.0, 32), std::domain_error);
  CHECK_THROWS_AS(bessel_k_imag_default_tmax(-1.0), std::domain_error);
}

TEST_CASE("bessel k many matches the scalar path") {
  const std::vector<double> taus{0.0, 0.7, 3.0, 11.5};
  const double x = 0.8;
  const double tmax = bessel_k_imag_default_tmax(x);
  const std::vector<double> many = bessel_k_imag_many(taus, x, tmax, 800);
  for (std::size_t k = 0; k < taus.size(); ++k)
    CHECK(many[k] == doctest::Approx(bessel_k_imag(taus[k], x, tmax, 800)).epsilon(1e-14));
}

}  // TEST_SUITE
