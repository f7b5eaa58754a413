#include "anderson/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace anderson::spectral {

namespace {

// Angle of (u, v) reduced to [0, pi); zero exactly when u == 0.
double phase_mod_pi(double u, double v) {
  double a = std::atan2(u, v);
  if (a < 0) a += std::numbers::pi;
  if (a >= std::numbers::pi) a -= std::numbers::pi;
  if (u == 0) a = 0;
  return a;
}

bool crosses(double before, double after) {
  return before != 0 && (after == 0 || std::signbit(after) != std::signbit(before));
}

}  // namespace

std::string_view to_string(Boundary bc) noexcept { return bc == Boundary::Dirichlet ? "D" : "N"; }

std::string_view to_string(CountMethod m) noexcept {
  switch (m) {
    case CountMethod::PruferExact:
      return "prufer-exact";
    case CountMethod::FdInertia:
      return "fd-inertia";
    case CountMethod::BracketDN:
      return "bracket-DN";
    case CountMethod::Decoupled:
      return "decoupled";
  }
  return "unknown";
}

void write_certificate_csv_header(std::ostream& os) { os << "method,n_lo,n_hi\n"; }

void write_certificate_csv_row(std::ostream& os, const CountCertificate& cert) {
  os << to_string(cert.method) << ',' << cert.n_lo << ',' << cert.n_hi << '\n';
}

OscillationCounter::OscillationCounter(Boundary left)
    : u_(left == Boundary::Dirichlet ? 0.0 : 1.0), du_(left == Boundary::Dirichlet ? 1.0 : 0.0) {}

void OscillationCounter::advance(double length, double q) {
  if (!(length > 0)) return;
  if (std::isinf(q)) {
    committed_ += local_count(Boundary::Dirichlet);
    u_ = 0.0;
    du_ = 1.0;
    zeros_ = 0;
    return;
  }

  double u1 = 0.0;
  double du1 = 0.0;
  if (q > 0) {
    // u = a cosh(kt) + (b/k) sinh(kt), rescaled by 2 e^{-kt} > 0 so that
    // long barriers cannot overflow. At most one zero inside.
    const double kappa = std::sqrt(q);
    const double grow = u_ + du_ / kappa;
    const double decay = u_ - du_ / kappa;
    const double damp = std::exp(-2.0 * kappa * length);
    u1 = grow + decay * damp;
    du1 = kappa * (grow - decay * damp);
    if (crosses(u_, u1)) ++zeros_;
  } else if (q == 0) {
    u1 = u_ + du_ * length;
    du1 = du_;
    if (crosses(u_, u1)) ++zeros_;
  } else {
    // (u, u'/k) rotates rigidly by k*length; zeros are the multiples of pi
    // swept by the angle. Counting against the end state's own phase keeps
    // the zero count and the phase consistent under rounding.
    const double k = std::sqrt(-q);
    const double s0 = du_ / k;
    const double sweep = k * length;
    const double c = std::cos(sweep);
    const double sn = std::sin(sweep);
    u1 = u_ * c + s0 * sn;
    const double s1 = s0 * c - u_ * sn;
    const double rho0 = phase_mod_pi(u_, s0);
    const double rho1 = phase_mod_pi(u1, s1);
    zeros_ += std::llround((sweep - rho1 + rho0) / std::numbers::pi);
    du1 = s1 * k;
  }
  const double norm = std::hypot(u1, du1);
  u_ = u1 / norm;
  du_ = du1 / norm;
}

std::int64_t OscillationCounter::local_count(Boundary right) const {
  // Prufer angle theta = pi * zeros + phase, phase in [0, pi); the n-th
  // eigenvalue sits where theta reaches beta + n pi (beta = pi for
  // Dirichlet, pi/2 for Neumann).
  std::int64_t n = 0;
  if (right == Boundary::Dirichlet) {
    n = u_ != 0 ? zeros_ : zeros_ - 1;
  } else {
    n = zeros_ + (u_ * du_ < 0 ? 1 : 0);
  }
  return std::max<std::int64_t>(n, 0);
}

std::int64_t OscillationCounter::count(Boundary right) const { return committed_ + local_count(right); }

CountCertificate count_negative_exact(const PiecewisePotential& q, Boundary left, Boundary right, double energy) {
  OscillationCounter counter(left);
  for (std::size_t i = 0; i < q.size(); ++i) counter.advance(q.length(i), q.values()[i] - energy);
  CountCertificate cert;
  cert.n_lo = cert.n_hi = counter.count(right);
  cert.method = CountMethod::PruferExact;
  return cert;
}

}  // namespace anderson::spectral
