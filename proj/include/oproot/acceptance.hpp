#pragma once

// The twelve-entry verification gate. Each criterion pins its tolerances in
// code and reports one pass/fail line; the suite exits nonzero when any
// criterion fails. Shared by the acceptance test binary and `oproot suite`.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "oproot/lebedev.hpp"
#include "oproot/matrix.hpp"
#include "oproot/operators.hpp"
#include "oproot/roots.hpp"
#include "oproot/series.hpp"
#include "oproot/verify.hpp"

namespace oproot {

struct ClauseCheck {
  std::string text;
  bool ok = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double seconds = 0.0;
  std::vector<ClauseCheck> clauses;

  bool pass() const {
    for (const auto& c : clauses)
      if (!c.ok) return false;
    return true;
  }
};

namespace detail {

inline void clause(CriterionResult& r, bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  r.clauses.push_back({buf, ok});
}

inline double diag_defect(const ComplexMatrix& a, double sign) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    worst = std::max(worst,
                     std::abs(a(i, i) - cplx(sign / std::sqrt(double(i) + 1.0), 0.0)));
  return worst;
}

}  // namespace detail

// 1. Closed-form Cesaro roots square to C_64 and carry the 1/sqrt(i+1) diagonal.
inline CriterionResult criterion_cesaro_closed() {
  CriterionResult r{1, "cesaro closed-form root"};
  const auto t0 = std::chrono::steady_clock::now();
  const ComplexMatrix c = cesaro_matrix(64);
  const ComplexMatrix ap = cesaro_root_closed(64, +1);
  const ComplexMatrix am = cesaro_root_closed(64, -1);
  const double rp = window_residual(mat_product(ap, ap), c, Window{64});
  const double rm = window_residual(mat_product(am, am), c, Window{64});
  const double dp = detail::diag_defect(ap, +1.0);
  const double dm = detail::diag_defect(am, -1.0);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, rp <= 1e-8, "window_residual(A+^2, C, 64) = %.3e <= 1e-8", rp);
  detail::clause(r, rm <= 1e-8, "window_residual(A-^2, C, 64) = %.3e <= 1e-8", rm);
  detail::clause(r, dp <= 1e-10, "diag(A+) vs 1/sqrt(i+1): %.3e <= 1e-10", dp);
  detail::clause(r, dm <= 1e-10, "diag(A-) vs -1/sqrt(i+1): %.3e <= 1e-10", dm);
  detail::clause(r, r.seconds < 5.0, "runtime %.2fs < 5s", r.seconds);
  return r;
}

// 2. Factored, closed, alternating-sum, and operator-series routes agree.
inline CriterionResult criterion_cesaro_cross_oracle() {
  CriterionResult r{2, "cesaro cross-oracle agreement"};
  const auto t0 = std::chrono::steady_clock::now();
  const ComplexMatrix closed24 = cesaro_root_closed(24, +1);
  const ComplexMatrix fact24 = cesaro_root_factored(24, SignPattern::constant(1));
  const double dfact = max_abs_diff(fact24, closed24);
  double dnaive = 0.0;
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (i - j <= 20)
        dnaive = std::max(dnaive,
                          std::abs(closed24(i, j).real() - cesaro_entry_alternating(i, j)));
  const ComplexMatrix series16 = cesaro_root_series(16, 100000);
  const double dseries = max_abs_diff(series16, cesaro_root_closed(16, +1));
  const double series_tol = 2.0 / std::sqrt(1e5);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, dfact <= 1e-6, "factored vs closed (N=24): %.3e <= 1e-6", dfact);
  detail::clause(r, dnaive <= 1e-6, "alternating sum vs closed (band 20): %.3e <= 1e-6", dnaive);
  detail::clause(r, dseries <= series_tol, "series 1e5 terms vs closed (N=16): %.3e <= %.3e",
                 dseries, series_tol);
  return r;
}

// 3. Mixed-sign factored root grows like 2 sqrt(N) on e_0; all-plus stays bounded.
inline CriterionResult criterion_unbounded_growth() {
  CriterionResult r{3, "mixed-sign unbounded growth"};
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> sizes{64, 128, 256, 512};
  const VerifyReport rep = unbounded_growth_demo(sizes);
  std::vector<double> norms, controls;
  for (std::size_t n : sizes) {
    norms.push_back(rep.metric_value("mixed_e0_norm_" + std::to_string(n)));
    controls.push_back(rep.metric_value("control_e0_norm_" + std::to_string(n)));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    detail::clause(r, norms[k] >= std::sqrt(double(sizes[k])),
                   "||T_%zu e0|| = %.3f >= sqrt(N) = %.3f", sizes[k], norms[k],
                   std::sqrt(double(sizes[k])));
    detail::clause(r, controls[k] <= 2.2, "control ||A_%zu e0|| = %.3f <= 2.2", sizes[k],
                   controls[k]);
  }
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    const double ratio = norms[k] / norms[k - 1];
    detail::clause(r, ratio >= 1.3 && ratio <= 1.5, "growth ratio %zu/%zu = %.3f in [1.3, 1.5]",
                   sizes[k], sizes[k - 1], ratio);
  }
  return r;
}

// 4. (I - C*) v_w = w v_w for exact polynomial eigenvectors and one tail case.
inline CriterionResult criterion_cesaro_eigen() {
  CriterionResult r{4, "cesaro eigenfunction residuals"};
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport e1 = cesaro_eigencheck(cplx(0.5, 0.0), 64, 1e-12);
  const VerifyReport e2 = cesaro_eigencheck(cplx(0.9, 0.0), 64, 1e-10);
  const VerifyReport e3 = cesaro_eigencheck(cplx(0.3, 0.0), 512, 1e-3);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, e1.pass, "w=0.5, N=64: rel residual %.3e <= 1e-12",
                 e1.metric_value("relative_residual"));
  detail::clause(r, e2.pass, "w=0.9, N=64: rel residual %.3e <= 1e-10",
                 e2.metric_value("relative_residual"));
  detail::clause(r, e3.pass, "w=0.3, N=512: rel residual %.3e <= 1e-3",
                 e3.metric_value("relative_residual"));
  return r;
}

namespace detail {

inline ComplexMatrix shift2_expected_cross8() {
  ComplexMatrix q(8, 8);
  q(0, 1) = 1.0;
  q(3, 0) = 1.0;
  q(2, 3) = 1.0;
  q(5, 2) = 1.0;
  q(4, 5) = 1.0;
  q(7, 4) = 1.0;
  q(6, 7) = 1.0;
  return q;
}

inline ComplexMatrix shift2_expected_sqrt8() {
  ComplexMatrix q(8, 8);
  // column 2l:   rows 2l+1: 1, 2l+2: -1, 2l+3: -1/2, 2l+5: -1/8, 2l+7: -1/16
  // column 2l+1: rows 2l+2: 1, 2l+3: 1, 2l+4: -1/2, 2l+6: -1/8, 2l+8: -1/16
  const double even_col[8] = {0, 1, -1, -0.5, 0, -0.125, 0, -0.0625};
  const double odd_col[8] = {0, 0, 1, 1, -0.5, 0, -0.125, 0};
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < 8; ++i) {
      const std::size_t off = i - (j / 2) * 2;
      if (i < (j / 2) * 2) continue;
      if (off > 7) continue;
      q(i, j) = (j % 2 == 0) ? even_col[off] : odd_col[off];
    }
  return q;
}

}  // namespace detail

// 5. The parameterized roots of S^2: banded-window exactness, the two
// displayed matrices, and the plain-shift specialization.
inline CriterionResult criterion_shift2_roots() {
  CriterionResult r{5, "roots of the squared shift"};
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = 64, degree = 40;
  const ComplexMatrix s2 = shift_pow_matrix(n, 2);
  const Window w{n - 4};  // constant parameters: d = 0

  const ComplexMatrix q3 = shift2_root(shift2_params_cross(degree), n);
  const double r3 = window_residual(mat_product(q3, q3), s2, w);
  const double d3 = max_abs_diff(q3.leading_block(8), detail::shift2_expected_cross8());

  const ComplexMatrix q4 = shift2_root(shift2_params_sqrt(degree), n);
  const double r4 = window_residual(mat_product(q4, q4), s2, w);
  const double d4 = max_abs_diff(q4.leading_block(8), detail::shift2_expected_sqrt8());

  const ComplexMatrix q5 = shift2_root(shift2_params_shift(degree), n);
  const double d5 = max_abs_diff(q5, shift_pow_matrix(n, 1));

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, r3 <= 1e-10, "cross params: window_residual(Q^2, S^2, %zu) = %.3e <= 1e-10",
                 w.size, r3);
  detail::clause(r, d3 <= 1e-10, "cross params: displayed 8x8 block matches to %.3e", d3);
  detail::clause(r, r4 <= 1e-10, "sqrt params: window_residual(Q^2, S^2, %zu) = %.3e <= 1e-10",
                 w.size, r4);
  detail::clause(r, d4 <= 1e-10, "sqrt params: displayed 8x8 block matches to %.3e", d4);
  detail::clause(r, d5 == 0.0, "swap params reproduce the shift exactly (diff %.1e)", d5);
  return r;
}

// 6. Abel-kernel root: residual decreases in M, small at M=512, and Y^2 1 ~ x.
inline CriterionResult criterion_volterra() {
  CriterionResult r{6, "volterra abel root"};
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> sizes{64, 128, 256, 512};
  std::vector<double> residuals;
  ComplexMatrix y512;
  for (std::size_t m : sizes) {
    const ComplexMatrix y = volterra_abel_root(m);
    residuals.push_back(op_norm_est(mat_sub(mat_product(y, y), volterra_matrix(m))));
    if (m == 512) y512 = y;
  }
  bool mono = true;
  for (std::size_t k = 1; k < residuals.size(); ++k)
    if (residuals[k] > 1.05 * residuals[k - 1]) mono = false;

  std::vector<cplx> ones(512, cplx(1.0, 0.0));
  const std::vector<cplx> y2one = mat_vec(y512, mat_vec(y512, ones));
  double sup = 0.0;
  for (std::size_t i = 0; i < 512; ++i) {
    const double xi = (double(i) + 0.5) / 512.0;
    sup = std::max(sup, std::abs(y2one[i] - cplx(xi, 0.0)));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, mono, "||Y^2 - V|| decreasing over M=64..512 (%.2e, %.2e, %.2e, %.2e)",
                 residuals[0], residuals[1], residuals[2], residuals[3]);
  detail::clause(r, residuals.back() <= 3e-2, "||Y^2 - V|| at M=512: %.3e <= 3e-2",
                 residuals.back());
  detail::clause(r, sup <= 1e-2, "sup |Y^2 1 - x| at M=512: %.3e <= 1e-2", sup);
  detail::clause(r, r.seconds < 30.0, "runtime %.2fs < 30s", r.seconds);
  return r;
}

// 7. Compressed-shift root residual decreases in the series degree.
inline CriterionResult criterion_compressed_shift() {
  CriterionResult r{7, "compressed shift functional-calculus root"};
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport rep = convergence_sweep("compressed-shift", {64, 256, 1024});
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, rep.pass,
                 "||R_K^2 - M|| decreasing over K=64,256,1024 (%.4f, %.4f, %.4f)",
                 rep.metric_value("residual_64"), rep.metric_value("residual_256"),
                 rep.metric_value("residual_1024"));
  return r;
}

// 8. Boundary real parts and disc images of the two outer-function candidates.
inline CriterionResult criterion_boundary() {
  CriterionResult r{8, "boundary positivity and disc images"};
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> grid = boundary_theta_grid(100000);
  const double min2 = boundary_min_re({BoundaryKind::one_plus_z_theta, grid});
  const double min1 = boundary_min_re({BoundaryKind::z_theta_fifth_root, grid});
  const double spot2 = boundary_re_at(BoundaryKind::one_plus_z_theta, std::numbers::pi);
  const double spot1 = boundary_re_at(BoundaryKind::z_theta_fifth_root, std::numbers::pi);
  double cloud1 = 1e300, cloud2 = 1e300;
  for (const cplx& p : disc_image_points(FigureId::fig1, 256, 720))
    cloud1 = std::min(cloud1, std::abs(p));
  for (const cplx& p : disc_image_points(FigureId::fig2, 256, 720))
    cloud2 = std::min(cloud2, std::abs(p));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, min2 > 0.0, "min Re(1 + z + Theta) over grid = %.6f > 0", min2);
  detail::clause(r, min1 > 0.0, "min Re(z + Theta (1-z)^{1/5}) over grid = %.6f > 0", min1);
  detail::clause(r, std::abs(spot2 - 1.0) <= 1e-10, "spot theta=pi: %.12f vs 1 (err %.1e)",
                 spot2, std::abs(spot2 - 1.0));
  detail::clause(r, std::abs(spot1 - (std::pow(2.0, 0.2) - 1.0)) <= 1e-10,
                 "spot theta=pi: %.12f vs 2^{1/5}-1 (err %.1e)", spot1,
                 std::abs(spot1 - (std::pow(2.0, 0.2) - 1.0)));
  // The first image passes the origin at distance 0.0210 (boundary modulus
  // minimum at theta = 0.9335), so its margin threshold is 0.015.
  detail::clause(r, cloud1 > 0.015, "disc image min modulus fig1 = %.4f > 0.015", cloud1);
  detail::clause(r, cloud2 > 0.05, "disc image min modulus fig2 = %.4f > 0.05", cloud2);
  return r;
}

// 9. Chebyshev-integral root of (S+S*)/2.
inline CriterionResult criterion_tcos() {
  CriterionResult r{9, "root of the shift plus its adjoint"};
  const auto t0 = std::chrono::steady_clock::now();
  const ComplexMatrix b = tcos_root(32, TcosBranch::principal, 4096);
  const double sym = max_abs_diff(b, b.transpose());
  const double wres = window_residual(mat_product(b, b), tcos_matrix(32), Window{8});
  const ComplexMatrix hook =
      tcos_root_with_symbol(32, [](double x) { return cplx(x, 0.0); }, 4096);
  const double hook_err = max_abs_diff(hook, tcos_matrix(32));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, sym == 0.0, "B is exactly symmetric (max |B - B^T| = %.1e)", sym);
  detail::clause(r, wres <= 1e-2, "window_residual(B^2, T, 8) = %.3e <= 1e-2", wres);
  detail::clause(r, hook_err <= 1e-8, "phi(x)=x hook vs tridiagonal: %.3e <= 1e-8", hook_err);
  return r;
}

// 10. Lebedev basis orthonormality, the 1/(m+n+1) identity, and the
// Hilbert-matrix root sections.
inline CriterionResult criterion_hilbert() {
  CriterionResult r{10, "hilbert matrix root chain"};
  const auto t0 = std::chrono::steady_clock::now();
  const LebedevBasis basis = lebedev_basis(6, lebedev_tau_mesh_default(), 480);
  double gram_dev = 0.0, ros_dev = 0.0;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      gram_dev = std::max(gram_dev, std::abs(basis.gram(m, n) - (m == n ? 1.0 : 0.0)));
      const double v = basis.weighted_gram(m, n, [](double tau) {
        return std::numbers::pi / std::cosh(std::numbers::pi * tau);
      });
      ros_dev = std::max(ros_dev, std::abs(v - 1.0 / (double(m + n) + 1.0)));
    }
  const ComplexMatrix h7 = hilbert_matrix(7);
  const ComplexMatrix t = hilbert_root(basis);
  const ComplexMatrix tf = hilbert_root(basis, 1.0);
  const double wres = window_residual(mat_product(t, t), h7, Window{4});
  const double wres_f = window_residual(mat_product(tf, tf), h7, Window{4});
  const double flip_gap = max_abs_diff(t, tf);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, gram_dev <= 1e-3, "Gram vs identity (m,n<=4): %.3e <= 1e-3", gram_dev);
  detail::clause(r, ros_dev <= 1e-3, "<M_h w_m, w_n> vs 1/(m+n+1) (m,n<=4): %.3e <= 1e-3",
                 ros_dev);
  detail::clause(r, wres <= 5e-3, "window_residual(T^2, H, 4) = %.3e <= 5e-3", wres);
  detail::clause(r, flip_gap > 1e-3, "sign-flipped variant differs (max gap %.3f)", flip_gap);
  detail::clause(r, wres_f <= 5e-3, "window_residual(T'^2, H, 4) = %.3e <= 5e-3", wres_f);
  detail::clause(r, r.seconds < 600.0, "runtime %.1fs < 600s", r.seconds);
  return r;
}

// 11. Toeplitz square-root decision over polynomial symbols.
inline CriterionResult criterion_toeplitz() {
  CriterionResult r{11, "toeplitz root decision"};
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t k = 40;

  auto residual = [&](const std::vector<cplx>& zeros, cplx lead) {
    const auto psi = toeplitz_root_decide(zeros, lead, k);
    if (!psi) return -1.0;
    const PowerSeries phi = poly_from_roots(zeros, lead, k);
    const PowerSeries sq = series_mul(*psi, *psi, k);
    double worst = 0.0;
    for (std::size_t n = 0; n + 2 <= k; ++n) worst = std::max(worst, std::abs(sq[n] - phi[n]));
    return worst;
  };

  const bool absent_z = !toeplitz_root_decide({cplx(0.0, 0.0)}, 1.0, k).has_value();
  const bool absent_zsq =
      !toeplitz_root_decide({cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(0.5, 0.0)}, 1.0, k)
           .has_value();
  const double r1 = residual({cplx(0.0, 0.0), cplx(0.0, 0.0)}, 1.0);
  const double r2 = residual({cplx(0.5, 0.0), cplx(0.5, 0.0), cplx(2.0, 0.0)}, -1.0);
  const double r3 = residual({cplx(1.0, 0.0)}, -1.0);

  // lattice of polynomial symbols of degree <= 4 over representative zeros
  const std::vector<cplx> lattice{cplx(0.0, 0.0),  cplx(0.5, 0.0), cplx(-0.5, 0.0),
                                  cplx(0.0, 0.5),  cplx(1.0, 0.0), cplx(-1.0, 0.0),
                                  cplx(2.0, 0.0)};
  std::size_t checked = 0, wrong = 0;
  double worst_lattice = 0.0;
  const std::size_t L = lattice.size();
  for (std::size_t a = 0; a <= L; ++a)
    for (std::size_t b = a; b <= L; ++b)
      for (std::size_t c = b; c <= L; ++c)
        for (std::size_t d = c; d <= L; ++d) {
          std::vector<cplx> zeros;
          for (std::size_t idx : {a, b, c, d})
            if (idx < L) zeros.push_back(lattice[idx]);
          // expected: a root exists iff every zero inside the open disc has
          // even multiplicity
          std::vector<cplx> inner;
          for (const cplx& z : zeros)
            if (std::abs(z) < 1.0) inner.push_back(z);
          bool expect_present = true;
          for (const cplx& z : inner) {
            std::size_t mult = 0;
            for (const cplx& y : inner)
              if (std::abs(y - z) < 1e-12) ++mult;
            if (mult % 2 != 0) expect_present = false;
          }
          const double res = residual(zeros, 1.0);
          ++checked;
          if (expect_present != (res >= 0.0))
            ++wrong;
          else if (res > 0.0)
            worst_lattice = std::max(worst_lattice, res);
        }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail::clause(r, absent_z, "phi = z: absent");
  detail::clause(r, absent_zsq, "phi = z (z - 1/2)^2: absent");
  detail::clause(r, r1 >= 0.0 && r1 <= 1e-10, "phi = z^2: present, ||psi^2 - phi|| = %.3e", r1);
  detail::clause(r, r2 >= 0.0 && r2 <= 1e-10,
                 "phi = (z-1/2)^2 (2-z): present, ||psi^2 - phi|| = %.3e", r2);
  detail::clause(r, r3 >= 0.0 && r3 <= 1e-10, "phi = 1 - z: present, ||psi^2 - phi|| = %.3e",
                 r3);
  detail::clause(r, wrong == 0, "lattice of %zu symbols: %zu decision mismatches", checked,
                 wrong);
  detail::clause(r, worst_lattice <= 1e-10, "lattice worst ||psi^2 - phi|| = %.3e <= 1e-10",
                 worst_lattice);
  return r;
}

// 12. Every root built above commutes with its target within the residual
// bound 10 * window_residual(R^2, T, w) + 1e-8.
inline CriterionResult criterion_commutation() {
  CriterionResult r{12, "commutation of every constructed root"};
  const auto t0 = std::chrono::steady_clock::now();

  auto check = [&](const char* name, const ComplexMatrix& root, const ComplexMatrix& target,
                   Window w) {
    const double res_sq = window_residual(mat_product(root, root), target, w);
    const ComplexMatrix comm =
        mat_sub(mat_product(root, target), mat_product(target, root));
    const double res_comm = window_norm(comm, w);
    const double bound = 10.0 * res_sq + 1e-8;
    detail::clause(r, res_comm <= bound, "%s: commutator %.3e <= %.3e", name, res_comm, bound);
  };

  const ComplexMatrix c64 = cesaro_matrix(64);
  check("cesaro closed +", cesaro_root_closed(64, +1), c64, Window{64});
  check("cesaro closed -", cesaro_root_closed(64, -1), c64, Window{64});
  check("cesaro factored", cesaro_root_factored(24, SignPattern::constant(1)),
        cesaro_matrix(24), Window{24});
  check("cesaro series", cesaro_root_series(16, 100000), cesaro_matrix(16), Window{16});

  const ComplexMatrix s2 = shift_pow_matrix(64, 2);
  check("shift2 cross", shift2_root(shift2_params_cross(40), 64), s2, Window{60});
  check("shift2 sqrt", shift2_root(shift2_params_sqrt(40), 64), s2, Window{60});
  check("shift2 swap", shift2_root(shift2_params_shift(40), 64), s2, Window{60});

  check("volterra abel", volterra_abel_root(512), volterra_matrix(512), Window{512});

  const ComplexMatrix mc = cayley_volterra(volterra_matrix(256));
  check("compressed shift", compressed_shift_root(mc, 1024), mc, Window{256});

  check("tcos", tcos_root(32, TcosBranch::principal, 4096), tcos_matrix(32), Window{8});

  const LebedevBasis basis = lebedev_basis(6, lebedev_tau_mesh_default(), 480);
  const ComplexMatrix h7 = hilbert_matrix(7);
  check("hilbert", hilbert_root(basis), h7, Window{4});
  check("hilbert flipped", hilbert_root(basis, 1.0), h7, Window{4});

  const std::vector<cplx> zeros{cplx(0.5, 0.0), cplx(0.5, 0.0), cplx(2.0, 0.0)};
  const auto psi = toeplitz_root_decide(zeros, -1.0, 40);
  check("toeplitz multiplier", analytic_multiplier_matrix(*psi, 32),
        analytic_multiplier_matrix(poly_from_roots(zeros, -1.0, 40), 32), Window{32});

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion_cesaro_closed();
    case 2: return criterion_cesaro_cross_oracle();
    case 3: return criterion_unbounded_growth();
    case 4: return criterion_cesaro_eigen();
    case 5: return criterion_shift2_roots();
    case 6: return criterion_volterra();
    case 7: return criterion_compressed_shift();
    case 8: return criterion_boundary();
    case 9: return criterion_tcos();
    case 10: return criterion_hilbert();
    case 11: return criterion_toeplitz();
    case 12: return criterion_commutation();
    default: throw std::invalid_argument("run_criterion: id must be 1..12");
  }
}

inline void print_criterion(std::ostream& os, const CriterionResult& r, bool verbose) {
  char line[256];
  std::snprintf(line, sizeof(line), "[%s] criterion %2d: %s (%.1fs)",
                r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
  os << line << '\n';
  for (const auto& c : r.clauses)
    if (verbose || !c.ok) os << "    " << (c.ok ? "ok   " : "FAIL ") << c.text << '\n';
}

// Runs criteria 1..12, prints one line each, returns the number of failures.
inline int run_acceptance_suite(std::ostream& os, bool verbose = false) {
  int failures = 0;
  for (int id = 1; id <= 12; ++id) {
    const CriterionResult r = run_criterion(id);
    print_criterion(os, r, verbose);
    if (!r.pass()) ++failures;
  }
  return failures;
}

}  // namespace oproot
