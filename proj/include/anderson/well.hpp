#pragma once

#include <span>
#include <utility>

#include "anderson/oscillation.hpp"

namespace anderson::spectral {

// Symmetric well: V = 0 on [-L, L], V = h on the two edge layers of width l,
// with the boundary condition imposed at +-(L + l).
struct WellGeometry {
  double half_width;  // L
  double bump_width;  // l
  double height;      // h, may be +infinity
  Boundary bc = Boundary::Dirichlet;
};

// Right-hand side of the even-mode matching condition
//   k tan(kL) = s coth(s l)   (Dirichlet)
//   k tan(kL) = s tanh(s l)   (Neumann)
// with s = sqrt(h - k^2), continued through k^2 >= h.
double matching_rhs(const WellGeometry& geom, double k);

// Lowest eigenvalue k0^2 of the well, k0 the root of the matching condition
// in (0, pi / 2L), found by bisection down to adjacent doubles.
// Throws NumericalFailure when the bracket shows no sign change.
double well_ground_state(const WellGeometry& geom);

// B0 = 1 / (sqrt(h) coth(sqrt(h) l)) for Dirichlet and
// 1 / (sqrt(h) tanh(sqrt(h) l)) for Neumann: leading coefficient of
// cot(kL) = B0 k + O(k^3) at small k.
double leading_correction(const WellGeometry& geom);

// ((pi / 2L) (1 - B0 / L))^2, accurate to O(1/L^3) in the square root.
double well_ground_asymptotic(const WellGeometry& geom);

// Number of negative eigenvalues of decoupled hard-wall wells:
// sum of floor(sqrt(w_k) L_k / pi) over (w_k, L_k) pairs.
std::int64_t decoupled_count(std::span<const std::pair<double, double>> weights);

}  // namespace anderson::spectral
