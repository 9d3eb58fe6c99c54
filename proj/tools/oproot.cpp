// oproot: builds classical operator truncations, constructs their square
// roots, runs the verification claims, and emits figure data.

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oproot/acceptance.hpp"
#include "oproot/io.hpp"
#include "oproot/lebedev.hpp"
#include "oproot/operators.hpp"
#include "oproot/roots.hpp"
#include "oproot/verify.hpp"

namespace {

using namespace oproot;

// Parsed command state; flags are validated per subcommand by CLI11 before
// any computation runs.
struct RunConfig {
  std::string name;
  std::size_t n = 32;
  std::size_t terms = 100000;
  std::size_t quad = 4096;
  std::size_t radial = 256;
  std::size_t angular = 720;
  std::size_t points = 100000;
  int sign = +1;
  int only = 0;
  double w = 0.5;
  double tol = 1e-3;
  double flip_above = 1.0;
  bool flip = false;
  bool verbose = false;
  std::string variant = "cross";
  std::string zeros;
  std::string output;
};

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.output.empty())
    std::cout << content;
  else
    write_file_atomic(cfg.output, content);
}

std::vector<cplx> parse_zero_list(const std::string& text) {
  std::vector<cplx> zeros;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    double re = 0.0, im = 0.0;
    char extra = 0;
    const int got = std::sscanf(item.c_str(), " %lf , %lf %c", &re, &im, &extra);
    if (got == 1) im = 0.0;
    else if (got != 2)
      throw CLI::ValidationError("--zeros", "expected 're,im' pairs separated by ';'");
    zeros.emplace_back(re, im);
  }
  return zeros;
}

int cmd_build(const RunConfig& cfg) {
  ComplexMatrix m;
  if (cfg.name == "shift2") m = shift_pow_matrix(cfg.n, 2);
  else if (cfg.name == "tcos") m = tcos_matrix(cfg.n);
  else if (cfg.name == "hilbert") m = hilbert_matrix(cfg.n);
  else if (cfg.name == "cesaro") m = cesaro_matrix(cfg.n);
  else if (cfg.name == "volterra") m = volterra_matrix(cfg.n);
  else if (cfg.name == "cayley") m = cayley_volterra(volterra_matrix(cfg.n));
  else {
    std::cerr << "unknown operator: " << cfg.name << '\n';
    return 2;
  }
  emit(cfg, matrix_csv(m));
  return 0;
}

int cmd_root(const RunConfig& cfg) {
  nlohmann::json sidecar;
  sidecar["schema"] = 1;
  sidecar["name"] = cfg.name;
  nlohmann::json params;
  params["n"] = cfg.n;
  nlohmann::json residuals = nlohmann::json::object();

  std::string body;
  if (cfg.name == "cesaro-closed") {
    params["sign"] = cfg.sign;
    const ComplexMatrix a = cesaro_root_closed(cfg.n, cfg.sign);
    residuals["square_window"] =
        window_residual(mat_product(a, a), cesaro_matrix(cfg.n), Window{cfg.n});
    body = matrix_csv(a);
  } else if (cfg.name == "cesaro-series") {
    params["terms"] = cfg.terms;
    const ComplexMatrix a = cesaro_root_series(cfg.n, cfg.terms);
    residuals["square_window"] =
        window_residual(mat_product(a, a), cesaro_matrix(cfg.n), Window{cfg.n});
    body = matrix_csv(a);
  } else if (cfg.name == "cesaro-factored") {
    params["sign"] = cfg.sign;
    params["flip_first"] = cfg.flip;
    SignPattern sigma = SignPattern::constant(cfg.sign);
    if (cfg.flip) sigma.set(1, -cfg.sign);
    const ComplexMatrix a = cesaro_root_factored(cfg.n, sigma);
    residuals["square_entrywise"] =
        max_abs_diff(mat_product(a, a), cesaro_matrix(cfg.n));
    body = matrix_csv(a);
  } else if (cfg.name == "shift2") {
    params["variant"] = cfg.variant;
    const std::size_t degree = cfg.n / 2 + 8;
    ShiftRootParams p = cfg.variant == "sqrt"    ? shift2_params_sqrt(degree)
                        : cfg.variant == "shift" ? shift2_params_shift(degree)
                                                 : shift2_params_cross(degree);
    if (cfg.variant != "sqrt" && cfg.variant != "shift" && cfg.variant != "cross") {
      std::cerr << "unknown variant: " << cfg.variant << " (cross|sqrt|shift)\n";
      return 2;
    }
    residuals["constraint"] = p.constraint_residual();
    residuals["unitarity"] = p.unitarity_defect();
    const ComplexMatrix q = shift2_root(p, cfg.n);
    residuals["square_window"] = window_residual(
        mat_product(q, q), shift_pow_matrix(cfg.n, 2), Window{cfg.n - 4});
    body = matrix_csv(q);
  } else if (cfg.name == "volterra-abel") {
    const ComplexMatrix y = volterra_abel_root(cfg.n);
    residuals["square_opnorm"] =
        op_norm_est(mat_sub(mat_product(y, y), volterra_matrix(cfg.n)));
    body = matrix_csv(y);
  } else if (cfg.name == "compressed-shift") {
    params["terms"] = cfg.terms;
    const ComplexMatrix mc = cayley_volterra(volterra_matrix(cfg.n));
    const ComplexMatrix root = compressed_shift_root(mc, cfg.terms);
    residuals["square_opnorm"] = op_norm_est(mat_sub(mat_product(root, root), mc));
    body = matrix_csv(root);
  } else if (cfg.name == "tcos") {
    params["quad"] = cfg.quad;
    params["flipped"] = cfg.flip;
    const ComplexMatrix b =
        tcos_root(cfg.n, cfg.flip ? TcosBranch::flipped : TcosBranch::principal, cfg.quad);
    residuals["square_window"] =
        window_residual(mat_product(b, b), tcos_matrix(cfg.n), Window{cfg.n / 4});
    body = matrix_csv(b);
  } else if (cfg.name == "hilbert") {
    params["flipped"] = cfg.flip;
    const LebedevBasis basis = lebedev_basis(6, lebedev_tau_mesh_default(), 480);
    const ComplexMatrix t = cfg.flip ? hilbert_root(basis, cfg.flip_above)
                                     : hilbert_root(basis);
    residuals["square_window"] =
        window_residual(mat_product(t, t), hilbert_matrix(7), Window{4});
    body = matrix_csv(t);
  } else if (cfg.name == "toeplitz") {
    params["zeros"] = cfg.zeros;
    const std::vector<cplx> zeros = parse_zero_list(cfg.zeros);
    const std::size_t k = std::max<std::size_t>(cfg.n, 8);
    const auto psi = toeplitz_root_decide(zeros, 1.0, k);
    sidecar["present"] = psi.has_value();
    if (psi) {
      const PowerSeries phi = poly_from_roots(zeros, 1.0, k);
      const PowerSeries sq = series_mul(*psi, *psi, k);
      double worst = 0.0;
      for (std::size_t d = 0; d + 2 <= k; ++d)
        worst = std::max(worst, std::abs(sq[d] - phi[d]));
      residuals["psi_sq_minus_phi"] = worst;
      body = series_csv(*psi);
    }
  } else {
    std::cerr << "unknown root: " << cfg.name << '\n';
    return 2;
  }

  sidecar["params"] = params;
  sidecar["constraint_residuals"] = residuals;
  if (!body.empty()) emit(cfg, body);
  if (!cfg.output.empty())
    write_file_atomic(cfg.output + ".json", sidecar.dump(2) + "\n");
  else if (body.empty())
    std::cout << sidecar.dump(2) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyReport rep;
  if (cfg.name == "cesaro-closed") {
    const ComplexMatrix a = cesaro_root_closed(cfg.n, cfg.sign);
    rep = square_residual_report(a, cesaro_matrix(cfg.n), Window{cfg.n}, 1e-8, "cesaro-closed");
  } else if (cfg.name == "cesaro-eigen") {
    rep = cesaro_eigencheck(cplx(cfg.w, 0.0), cfg.n, cfg.tol);
  } else if (cfg.name == "unbounded-growth") {
    rep = unbounded_growth_demo({64, 128, 256, 512});
  } else if (cfg.name == "volterra") {
    const ComplexMatrix y = volterra_abel_root(cfg.n);
    rep = square_residual_report(y, volterra_matrix(cfg.n), Window{cfg.n}, 3e-2, "volterra");
  } else if (cfg.name == "volterra-sweep") {
    rep = convergence_sweep("volterra-abel", {64, 128, 256, 512});
  } else if (cfg.name == "cesaro-series-sweep") {
    rep = convergence_sweep("cesaro-series", {1000, 10000, 100000});
  } else if (cfg.name == "compressed-shift-sweep") {
    rep = convergence_sweep("compressed-shift", {64, 256, 1024});
  } else if (cfg.name == "boundary-fig1" || cfg.name == "boundary-fig2") {
    const BoundaryKind kind = cfg.name == "boundary-fig1" ? BoundaryKind::z_theta_fifth_root
                                                          : BoundaryKind::one_plus_z_theta;
    const double mn = boundary_min_re({kind, boundary_theta_grid(cfg.points)});
    rep.claim_id = cfg.name;
    rep.param("points", double(cfg.points));
    rep.metric("min_re", mn);
    rep.tolerance = 0.0;
    rep.pass = mn > 0.0;
  } else if (cfg.name == "disc-fig1" || cfg.name == "disc-fig2") {
    const FigureId id = cfg.name == "disc-fig1" ? FigureId::fig1 : FigureId::fig2;
    double mn = 1e300;
    for (const cplx& p : disc_image_points(id, cfg.radial, cfg.angular))
      mn = std::min(mn, std::abs(p));
    rep.claim_id = cfg.name;
    rep.param("radial", double(cfg.radial));
    rep.param("angular", double(cfg.angular));
    rep.metric("min_modulus", mn);
    // fig1 skirts the origin at boundary distance 0.0210 near theta = 0.93
    rep.tolerance = id == FigureId::fig1 ? 0.015 : 0.05;
    rep.pass = mn > rep.tolerance;
  } else if (cfg.name == "tcos") {
    const ComplexMatrix b = tcos_root(cfg.n, TcosBranch::principal, cfg.quad);
    rep = square_residual_report(b, tcos_matrix(cfg.n), Window{cfg.n / 4}, 1e-2, "tcos");
  } else if (cfg.name == "hilbert-basis") {
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
    rep.claim_id = "hilbert-basis";
    rep.metric("gram_deviation", gram_dev);
    rep.metric("entry_identity_deviation", ros_dev);
    rep.tolerance = 1e-3;
    rep.pass = gram_dev <= 1e-3 && ros_dev <= 1e-3;
  } else if (cfg.name == "hilbert-root") {
    const LebedevBasis basis = lebedev_basis(6, lebedev_tau_mesh_default(), 480);
    rep = square_residual_report(hilbert_root(basis), hilbert_matrix(7), Window{4}, 5e-3,
                                 "hilbert-root");
  } else if (cfg.name == "no-root-double-zero") {
    const std::size_t k = 16;
    PowerSeries u = PowerSeries::monomial(2, k);
    std::vector<PowerSeries> hs;
    hs.push_back(PowerSeries::constant(1.0, k));
    PowerSeries h2(k);
    h2.at(0) = 1.0;
    h2.at(1) = 1.0;
    hs.push_back(h2);
    hs.push_back(PowerSeries(k));
    rep = no_root_double_zero_check(u, hs);
  } else {
    std::cerr << "unknown claim: " << cfg.name << '\n';
    return 2;
  }
  const std::string text = report_json(rep).dump(2) + "\n";
  if (cfg.output.empty())
    std::cout << text;
  else
    write_file_atomic(cfg.output, text);
  return rep.pass ? 0 : 1;
}

int cmd_figure(const RunConfig& cfg) {
  FigureId id;
  if (cfg.name == "fig1") id = FigureId::fig1;
  else if (cfg.name == "fig2") id = FigureId::fig2;
  else {
    std::cerr << "unknown figure: " << cfg.name << " (fig1|fig2)\n";
    return 2;
  }
  emit(cfg, points_csv(disc_image_points(id, cfg.radial, cfg.angular)));
  return 0;
}

int cmd_suite(const RunConfig& cfg) {
  if (cfg.only != 0) {
    const CriterionResult r = run_criterion(cfg.only);
    print_criterion(std::cout, r, true);
    return r.pass() ? 0 : 1;
  }
  const int failures = run_acceptance_suite(std::cout, cfg.verbose);
  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical square roots of classical operators"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* build = app.add_subcommand("build", "emit an operator truncation as CSV");
  build->add_option("name", cfg.name, "shift2|tcos|hilbert|cesaro|volterra|cayley")->required();
  build->add_option("--n", cfg.n, "truncation size");
  build->add_option("-o,--output", cfg.output, "output file (stdout if omitted)");

  CLI::App* root = app.add_subcommand("root", "construct a square root, emit CSV + JSON sidecar");
  root->add_option("name", cfg.name,
                   "cesaro-closed|cesaro-series|cesaro-factored|shift2|volterra-abel|"
                   "compressed-shift|tcos|hilbert|toeplitz")
      ->required();
  root->add_option("--n", cfg.n, "truncation size");
  root->add_option("--sign", cfg.sign, "global sign, +1 or -1");
  root->add_option("--terms", cfg.terms, "series length");
  root->add_option("--quad", cfg.quad, "quadrature node budget");
  root->add_option("--variant", cfg.variant, "shift2 parameter set: cross|sqrt|shift");
  root->add_option("--zeros", cfg.zeros, "toeplitz symbol zeros: 're,im;re,im;...'");
  root->add_option("--flip-above", cfg.flip_above, "hilbert: negate symbol above this tau");
  root->add_flag("--flip", cfg.flip, "use the sign-flipped branch/variant");
  root->add_option("-o,--output", cfg.output, "output file (stdout if omitted)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification claim, emit JSON report");
  verify->add_option("claim_id", cfg.name,
                     "cesaro-closed|cesaro-eigen|unbounded-growth|volterra|volterra-sweep|"
                     "cesaro-series-sweep|compressed-shift-sweep|boundary-fig1|boundary-fig2|"
                     "disc-fig1|disc-fig2|tcos|hilbert-basis|hilbert-root|no-root-double-zero")
      ->required();
  verify->add_option("--n", cfg.n, "truncation size");
  verify->add_option("--w", cfg.w, "eigenvalue parameter");
  verify->add_option("--tol", cfg.tol, "tolerance for the eigencheck");
  verify->add_option("--sign", cfg.sign, "global sign");
  verify->add_option("--quad", cfg.quad, "quadrature node budget");
  verify->add_option("--points", cfg.points, "boundary grid size");
  verify->add_option("--radial", cfg.radial, "radial grid count");
  verify->add_option("--angular", cfg.angular, "angular grid count");
  verify->add_option("-o,--output", cfg.output, "report file (stdout if omitted)");

  CLI::App* figure = app.add_subcommand("figure", "emit a disc image point cloud as CSV");
  figure->add_option("name", cfg.name, "fig1|fig2")->required();
  figure->add_option("--radial", cfg.radial, "radial grid count");
  figure->add_option("--angular", cfg.angular, "angular grid count");
  figure->add_option("-o,--output", cfg.output, "output file (stdout if omitted)");

  CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--only", cfg.only, "run a single criterion (1..12)");
  suite->add_flag("--verbose", cfg.verbose, "print every clause");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (root->parsed()) return cmd_root(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (figure->parsed()) return cmd_figure(cfg);
    if (suite->parsed()) return cmd_suite(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
