#pragma once

// Finite truncations of the six classical operators, the midpoint
// discretization of the Volterra operator, and its Cayley transform (the
// computable stand-in for the compressed shift).

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "oproot/matrix.hpp"
#include "oproot/quadrature.hpp"

namespace oproot {

// S^p truncated to n x n: ones on the p-th subdiagonal.
inline ComplexMatrix shift_pow_matrix(std::size_t n, std::size_t p) {
  if (p < 1) throw std::invalid_argument("shift_pow_matrix: power must be >= 1");
  ComplexMatrix m(n, n);
  for (std::size_t i = p; i < n; ++i) m(i, i - p) = 1.0;
  return m;
}

// (S + S*)/2: symmetric tridiagonal with zero diagonal and 1/2 off it.
inline ComplexMatrix tcos_matrix(std::size_t n) {
  if (n < 2) throw std::invalid_argument("tcos_matrix: n must be >= 2");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 0.5;
    m(i + 1, i) = 0.5;
  }
  return m;
}

inline ComplexMatrix hilbert_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("hilbert_matrix: n must be >= 1");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1.0 / (double(i) + double(j) + 1.0);
  return m;
}

inline ComplexMatrix cesaro_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cesaro_matrix: n must be >= 1");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = 1.0 / (double(i) + 1.0);
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = v;
  }
  return m;
}

// Midpoint collocation grid for L^2[0,1]: x_i = (i + 1/2) h, h = 1/m.
inline GridMesh volterra_mesh(std::size_t m) {
  if (m < 2) throw std::invalid_argument("volterra_mesh: m must be >= 2");
  GridMesh g;
  g.kind = MeshKind::uniform01;
  const double h = 1.0 / double(m);
  for (std::size_t i = 0; i < m; ++i) {
    g.nodes.push_back((double(i) + 0.5) * h);
    g.weights.push_back(h);
  }
  return g;
}

// Midpoint product-integration matrix of integration from 0 to x: full cells
// weigh h, the cell containing the collocation point weighs h/2.
inline ComplexMatrix volterra_matrix(std::size_t m) {
  if (m < 2) throw std::invalid_argument("volterra_matrix: m must be >= 2");
  const double h = 1.0 / double(m);
  ComplexMatrix v(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) v(i, j) = h;
    v(i, i) = 0.5 * h;
  }
  return v;
}

// (I - V)(I + V)^{-1} by forward substitution; I + V is lower triangular.
inline ComplexMatrix cayley_volterra(const ComplexMatrix& v) {
  if (v.rows() != v.cols()) throw std::invalid_argument("cayley_volterra: square matrix required");
  const std::size_t n = v.rows();
  ComplexMatrix out(n, n);
  // Solve (I + V) x = (I - V) e_j column by column.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx rhs = (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0)) - v(i, j);
      for (std::size_t k = 0; k < i; ++k) rhs -= v(i, k) * out(k, j);
      const cplx diag = cplx(1.0, 0.0) + v(i, i);
      if (std::abs(diag) < 1e-14)
        throw std::runtime_error("cayley_volterra: singular solve");
      out(i, j) = rhs / diag;
    }
  }
  out.check_finite();
  return out;
}

}  // namespace oproot
