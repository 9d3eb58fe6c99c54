#include <doctest.h>

#include <cmath>

#include "oproot/roots.hpp"

using namespace oproot;

namespace {

double root_residual(const std::vector<cplx>& zeros, cplx lead, std::size_t k) {
  const auto psi = toeplitz_root_decide(zeros, lead, k);
  REQUIRE(psi.has_value());
  const PowerSeries phi = poly_from_roots(zeros, lead, k);
  const PowerSeries sq = series_mul(*psi, *psi, k);
  double worst = 0.0;
  for (std::size_t n = 0; n + 2 <= k; ++n) worst = std::max(worst, std::abs(sq[n] - phi[n]));
  return worst;
}

}  // namespace

TEST_SUITE("roots.toeplitz") {

TEST_CASE("the shift symbol has no root") {
  CHECK_FALSE(toeplitz_root_decide({cplx(0.0, 0.0)}, 1.0, 30).has_value());
}

TEST_CASE("z^2 yields psi = z") {
  const auto psi = toeplitz_root_decide({cplx(0.0, 0.0), cplx(0.0, 0.0)}, 1.0, 30);
  REQUIRE(psi.has_value());
  CHECK(std::abs((*psi)[1] - cplx(1.0)) <= 1e-14);
  for (std::size_t n : {0ul, 2ul, 3ul, 10ul}) CHECK(std::abs((*psi)[n]) <= 1e-14);
}

TEST_CASE("paired interior zeros with an exterior factor") {
  // (z - 1/2)^2 (2 - z)
  CHECK(root_residual({cplx(0.5, 0.0), cplx(0.5, 0.0), cplx(2.0, 0.0)}, -1.0, 40) <= 1e-10);
}

TEST_CASE("boundary zero goes through the series root") {
  CHECK(root_residual({cplx(1.0, 0.0)}, -1.0, 40) <= 1e-10);  // 1 - z
}

TEST_CASE("odd interior multiplicity blocks the root") {
  CHECK_FALSE(
      toeplitz_root_decide({cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(0.5, 0.0)}, 1.0, 30)
          .has_value());
  CHECK_FALSE(toeplitz_root_decide({cplx(0.5, 0.0), cplx(0.5, 0.0), cplx(0.5, 0.0)}, 1.0, 30)
                  .has_value());
}

TEST_CASE("complex zeros pair by value, not by modulus") {
  CHECK(root_residual({cplx(0.0, 0.5), cplx(0.0, 0.5)}, 1.0, 40) <= 1e-10);
  CHECK_FALSE(toeplitz_root_decide({cplx(0.0, 0.5), cplx(0.0, -0.5)}, 1.0, 30).has_value());
}

TEST_CASE("decision over a small root lattice") {
  const std::vector<cplx> lattice{cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(-0.5, 0.0),
                                  cplx(1.0, 0.0), cplx(2.0, 0.0)};
  const std::size_t L = lattice.size();
  for (std::size_t a = 0; a <= L; ++a)
    for (std::size_t b = a; b <= L; ++b)
      for (std::size_t c = b; c <= L; ++c) {
        std::vector<cplx> zeros;
        for (std::size_t idx : {a, b, c})
          if (idx < L) zeros.push_back(lattice[idx]);
        bool expect_present = true;
        for (const cplx& z : zeros) {
          if (std::abs(z) >= 1.0) continue;
          std::size_t mult = 0;
          for (const cplx& y : zeros)
            if (std::abs(y - z) < 1e-12 && std::abs(y) < 1.0) ++mult;
          if (mult % 2 != 0) expect_present = false;
        }
        const auto psi = toeplitz_root_decide(zeros, 1.0, 36);
        CHECK(psi.has_value() == expect_present);
        if (psi) CHECK(root_residual(zeros, 1.0, 36) <= 1e-10);
      }
}

TEST_CASE("zero leading coefficient is rejected") {
  CHECK_THROWS_AS(toeplitz_root_decide({cplx(0.5, 0.0)}, 0.0, 16), std::invalid_argument);
}

}  // TEST_SUITE
