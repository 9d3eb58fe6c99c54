#include <doctest.h>

#include <cmath>

#include "oproot/operators.hpp"
#include "oproot/roots.hpp"

using namespace oproot;

TEST_SUITE("roots.cesaro") {

TEST_CASE("closed form: diagonal, first column entry, triangularity") {
  const ComplexMatrix a = cesaro_root_closed(32, +1);
  for (std::size_t i = 0; i < 32; ++i) {
    CHECK(a(i, i).real() == doctest::Approx(1.0 / std::sqrt(double(i) + 1.0)).epsilon(1e-13));
    for (std::size_t j = i + 1; j < 32; ++j) CHECK(a(i, j) == cplx(0.0));
  }
  CHECK(a(1, 0).real() == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("closed form squares to the cesaro matrix") {
  const ComplexMatrix a = cesaro_root_closed(32, +1);
  CHECK(window_residual(mat_product(a, a), cesaro_matrix(32), Window{32}) <= 1e-8);
  const ComplexMatrix am = cesaro_root_closed(32, -1);
  CHECK(max_abs_diff(mat_scale(am, -1.0), a) == 0.0);
}

TEST_CASE("closed form agrees with the alternating sum on the stable band") {
  const ComplexMatrix a = cesaro_root_closed(24, +1);
  double worst = 0.0;
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (i - j <= 20)
        worst = std::max(worst, std::abs(a(i, j).real() - cesaro_entry_alternating(i, j)));
  CHECK(worst <= 1e-6);
}

TEST_CASE("series route: first term and diagonal tail bound") {
  CHECK(max_abs_diff(cesaro_root_series(8, 1), ComplexMatrix::identity(8)) == 0.0);

  const std::size_t terms = 10000;
  const ComplexMatrix s = cesaro_root_series(16, terms);
  const double tail = 2.0 / std::sqrt(double(terms));
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(std::abs(s(i, i).real() - 1.0 / std::sqrt(double(i) + 1.0)) <= tail);

  CHECK(max_abs_diff(s, cesaro_root_closed(16, +1)) <= tail);
}

TEST_CASE("factored route matches the closed form and squares back") {
  const ComplexMatrix f = cesaro_root_factored(24, SignPattern::constant(1));
  CHECK(max_abs_diff(f, cesaro_root_closed(24, +1)) <= 1e-8);

  // Flips at low indices keep the binomial products small enough for the
  // square to be checked in doubles; central flips are exact-arithmetic
  // identities that no machine format can confirm at this tolerance.
  SignPattern sigma = SignPattern::constant(1);
  sigma.set(1, -1).set(3, -1).set(5, -1);
  const ComplexMatrix mixed = cesaro_root_factored(24, sigma);
  CHECK(max_abs_diff(mat_product(mixed, mixed), cesaro_matrix(24)) <= 1e-6);

  SignPattern tail_flip = SignPattern::constant(1);
  tail_flip.set(2, -1).set(4, -1);
  const ComplexMatrix mixed2 = cesaro_root_factored(24, tail_flip);
  CHECK(max_abs_diff(mat_product(mixed2, mixed2), cesaro_matrix(24)) <= 1e-6);

  const ComplexMatrix plus = cesaro_root_factored(12, SignPattern::constant(1));
  const ComplexMatrix minus = cesaro_root_factored(12, SignPattern::constant(-1));
  CHECK(max_abs_diff(mat_scale(minus, -1.0), plus) == 0.0);
}

TEST_CASE("first-flip root equals the bounded root minus the rank-one ones column") {
  const std::size_t n = 24;
  SignPattern first = SignPattern::constant(1);
  first.set(1, -1);
  const ComplexMatrix mixed = cesaro_root_factored(n, first);
  const ComplexMatrix plus = cesaro_root_closed(n, +1);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cplx expect = plus(i, j) - (j == 0 ? cplx(2.0, 0.0) : cplx(0.0, 0.0));
      worst = std::max(worst, std::abs(mixed(i, j) - expect));
    }
  CHECK(worst <= 1e-8);
}

TEST_CASE("sign pattern validation") {
  CHECK_THROWS_AS(SignPattern::constant(0), std::invalid_argument);
  SignPattern p = SignPattern::constant(1);
  CHECK_THROWS_AS(p.set(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(p.set(3, 2), std::invalid_argument);
  p.set(3, -1);
  CHECK(p.at(3) == -1);
  CHECK(p.at(4) == 1);
}

}  // TEST_SUITE
