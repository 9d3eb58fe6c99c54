#pragma once

// Gauss-Legendre rules and composite meshes, with geometric grading toward
// integrable endpoint singularities.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oproot {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;  // positive, sum 2
};

// Nodes and weights by Newton iteration on P_q from Chebyshev guesses.
inline GaussRule gauss_legendre(std::size_t q) {
  if (q < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  GaussRule r;
  r.nodes.assign(q, 0.0);
  r.weights.assign(q, 0.0);
  const std::size_t m = (q + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(q) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t k = 0; k < q; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * double(k) + 1.0) * x * p1 - double(k) * p2) / (double(k) + 1.0);
      }
      pp = double(q) * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::abs(x) + 1e-300) break;
    }
    r.nodes[i] = -x;
    r.nodes[q - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[q - 1 - i] = w;
  }
  return r;
}

enum class MeshKind { uniform01, gauss_legendre, tau_halfline };

// Shared node/weight container for all discretized domains.
struct GridMesh {
  std::vector<double> nodes;
  std::vector<double> weights;
  MeshKind kind = MeshKind::gauss_legendre;

  void validate() const {
    if (nodes.size() != weights.size())
      throw std::invalid_argument("GridMesh: node/weight length mismatch");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (weights[i] <= 0.0) throw std::invalid_argument("GridMesh: nonpositive weight");
      if (i > 0 && nodes[i] <= nodes[i - 1])
        throw std::invalid_argument("GridMesh: nodes not strictly increasing");
    }
  }
};

inline void append_gauss_panel(GridMesh& m, const GaussRule& r, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    m.nodes.push_back(mid + half * r.nodes[i]);
    m.weights.push_back(half * r.weights[i]);
  }
}

inline GridMesh composite_gauss(double a, double b, std::size_t panels, std::size_t q) {
  if (panels < 1) throw std::invalid_argument("composite_gauss: panels must be >= 1");
  const GaussRule r = gauss_legendre(q);
  GridMesh m;
  m.nodes.reserve(panels * q);
  m.weights.reserve(panels * q);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + (b - a) * double(p) / double(panels);
    const double hi = a + (b - a) * double(p + 1) / double(panels);
    append_gauss_panel(m, r, lo, hi);
  }
  return m;
}

// Panel breakpoints refined geometrically (ratio 1/2) toward the flagged
// endpoints; `levels` halvings reach a 2^-levels fraction of the half-width.
inline std::vector<double> graded_breakpoints(double a, double b, bool toward_a,
                                              bool toward_b, std::size_t levels) {
  std::vector<double> bp;
  const double mid = 0.5 * (a + b);
  bp.push_back(a);
  if (toward_a)
    for (std::size_t k = levels; k >= 1; --k)
      bp.push_back(a + (mid - a) * std::ldexp(1.0, -int(k)));
  bp.push_back(mid);
  if (toward_b)
    for (std::size_t k = 1; k <= levels; ++k)
      bp.push_back(b - (b - mid) * std::ldexp(1.0, -int(k)));
  bp.push_back(b);
  return bp;
}

inline GridMesh composite_graded(double a, double b, std::size_t levels, std::size_t q,
                                 bool grade_left, bool grade_right) {
  const std::vector<double> bp = graded_breakpoints(a, b, grade_left, grade_right, levels);
  const GaussRule r = gauss_legendre(q);
  GridMesh m;
  for (std::size_t p = 0; p + 1 < bp.size(); ++p) append_gauss_panel(m, r, bp[p], bp[p + 1]);
  return m;
}

template <typename F>
inline double integrate(const GridMesh& m, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) acc += m.weights[i] * f(m.nodes[i]);
  return acc;
}

}  // namespace oproot
