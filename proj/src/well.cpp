#include "anderson/well.hpp"

#include <cmath>
#include <numbers>

#include "anderson/error.hpp"

namespace anderson::spectral {

namespace {

void check(const WellGeometry& g) {
  if (!(std::isfinite(g.half_width) && g.half_width > 0)) throw DomainError("well: L must be > 0");
  if (!(std::isfinite(g.bump_width) && g.bump_width > 0)) throw DomainError("well: l must be > 0");
  if (!(g.height > 0)) throw DomainError("well: h must be > 0");
}

}  // namespace

double matching_rhs(const WellGeometry& geom, double k) {
  const double l = geom.bump_width;
  if (std::isinf(geom.height)) return INFINITY;
  const double s2 = geom.height - k * k;
  const double z2 = s2 * l * l;
  if (std::abs(z2) < 1e-8) {
    // s coth(s l) = (1 + z^2/3 + ...) / l and s tanh(s l) = s^2 l (1 - z^2/3 + ...)
    return geom.bc == Boundary::Dirichlet ? (1.0 + z2 / 3.0) / l : s2 * l * (1.0 - z2 / 3.0);
  }
  if (s2 > 0) {
    const double s = std::sqrt(s2);
    return geom.bc == Boundary::Dirichlet ? s / std::tanh(s * l) : s * std::tanh(s * l);
  }
  // s = i sigma: s coth(s l) = sigma cot(sigma l), s tanh(s l) = -sigma tan(sigma l)
  const double sigma = std::sqrt(-s2);
  return geom.bc == Boundary::Dirichlet ? sigma / std::tan(sigma * l) : -sigma * std::tan(sigma * l);
}

double well_ground_state(const WellGeometry& geom) {
  check(geom);
  const double L = geom.half_width;
  const double k_top = std::numbers::pi / (2.0 * L);
  if (std::isinf(geom.height)) return k_top * k_top;
  auto g = [&](double k) { return k * std::tan(k * L) - matching_rhs(geom, k); };
  double lo = 1e-9 * k_top;
  double hi = k_top * (1.0 - 1e-12);
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (!(g_lo < 0 && g_hi > 0)) throw NumericalFailure("well_ground_state: no sign change in the bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  // Of the two final endpoints, keep the one with the smaller residual.
  const double k = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
  return k * k;
}

double leading_correction(const WellGeometry& geom) {
  check(geom);
  if (std::isinf(geom.height)) return 0.0;
  const double root_h = std::sqrt(geom.height);
  const double t = std::tanh(root_h * geom.bump_width);
  return geom.bc == Boundary::Dirichlet ? t / root_h : 1.0 / (root_h * t);
}

double well_ground_asymptotic(const WellGeometry& geom) {
  const double L = geom.half_width;
  const double root_mu = std::numbers::pi / (2.0 * L) * (1.0 - leading_correction(geom) / L);
  return root_mu * root_mu;
}

}  // namespace anderson::spectral
