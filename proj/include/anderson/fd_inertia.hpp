#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "anderson/oscillation.hpp"
#include "anderson/piecewise.hpp"

namespace anderson::spectral {

// Negative eigenvalues of the second-order finite-difference matrix of
// -d^2/dx^2 + q on [0, X] with `mesh` interior nodes, step X / (mesh + 1),
// counted as negative pivots of the LDL^T factorization of the tridiagonal
// matrix (Sylvester inertia). A Neumann end adds the boundary node with a
// mirrored ghost point; its row is halved to keep the matrix symmetric,
// which does not change the inertia.
//
// An exactly zero pivot triggers one retry with q shifted by
// 1e-12 * max|q|; a second zero pivot throws NumericalFailure.
std::int64_t fd_inertia_count(const std::function<double(double)>& q, double extent, std::size_t mesh,
                              Boundary left, Boundary right);

inline std::int64_t fd_inertia_count(const std::function<double(double)>& q, double extent, std::size_t mesh,
                                     Boundary both) {
  return fd_inertia_count(q, extent, mesh, both, both);
}

// Same matrix with node values taken as exact cell averages of q over
// [x_i - step/2, x_i + step/2], which removes the first-order error from
// discontinuities falling between nodes.
std::int64_t fd_inertia_count(const PiecewisePotential& q, std::size_t mesh, Boundary left, Boundary right);

}  // namespace anderson::spectral
