#include "anderson/bracket.hpp"

#include <algorithm>
#include <cmath>

#include "anderson/error.hpp"

namespace anderson::spectral {

namespace {

void check_policy(const RefinePolicy& p) {
  if (p.start < 1 || p.max < p.start) throw DomainError("refine policy: need 1 <= start <= max");
  if (p.tolerance < 0) throw DomainError("refine policy: tolerance must be >= 0");
}

// Visits the sub-pieces of the realization with m cuts per constant piece:
// f(begin, end, V, W(begin), W(end)).
template <class F>
void for_each_subpiece(const randpot::PotentialRealization& real, const randpot::Perturbation& W, std::size_t m,
                       F&& f) {
  randpot::for_each_piece(real, [&](double a, double b, double v) {
    double w_left = W(a);
    double left = a;
    for (std::size_t j = 1; j <= m; ++j) {
      const double right = j == m ? b : a + (b - a) * static_cast<double>(j) / static_cast<double>(m);
      const double w_right = W(right);
      if (right > left) f(left, right, v, w_left, w_right);
      left = right;
      w_left = w_right;
    }
  });
}

struct CheckpointPass {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  std::int64_t width() const {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) w = std::max(w, hi[i] - lo[i]);
    return w;
  }
};

CheckpointPass checkpoint_pass(const randpot::PotentialRealization& real, const randpot::Perturbation& W, Boundary bc,
                               std::span<const double> checkpoints, std::size_t m) {
  OscillationCounter lower(bc);
  OscillationCounter upper(bc);
  CheckpointPass out;
  out.lo.reserve(checkpoints.size());
  out.hi.reserve(checkpoints.size());
  std::size_t next = 0;
  for_each_subpiece(real, W, m, [&](double a, double b, double v, double w_left, double w_right) {
    const double q_lower = v - w_right;  // pointwise >= V - W: fewer eigenvalues
    const double q_upper = v - w_left;
    double cursor = a;
    while (next < checkpoints.size() && checkpoints[next] <= b) {
      const double len = checkpoints[next] - cursor;
      lower.advance(len, q_lower);
      upper.advance(len, q_upper);
      out.lo.push_back(lower.count(bc));
      out.hi.push_back(upper.count(bc));
      cursor = std::max(cursor, checkpoints[next]);
      ++next;
    }
    lower.advance(b - cursor, q_lower);
    upper.advance(b - cursor, q_upper);
  });
  return out;
}

}  // namespace

std::vector<CountCertificate> count_with_bracketed_W(const randpot::PotentialRealization& real,
                                                     const randpot::Perturbation& W, Boundary bc,
                                                     std::span<const double> checkpoints, RefinePolicy policy) {
  check_policy(policy);
  if (checkpoints.empty()) throw DomainError("count_with_bracketed_W: no checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (!(checkpoints[i] > 0 && checkpoints[i] <= real.extent)) {
      throw DomainError("count_with_bracketed_W: checkpoints must lie in (0, X]");
    }
    if (i > 0 && !(checkpoints[i] > checkpoints[i - 1])) {
      throw DomainError("count_with_bracketed_W: checkpoints must be increasing");
    }
  }
  std::size_t m = policy.start;
  CheckpointPass pass = checkpoint_pass(real, W, bc, checkpoints, m);
  while (pass.width() > policy.tolerance && m * 2 <= policy.max) {
    m *= 2;
    pass = checkpoint_pass(real, W, bc, checkpoints, m);
  }
  const bool open = pass.width() > policy.tolerance;
  std::vector<CountCertificate> certs(checkpoints.size());
  for (std::size_t i = 0; i < certs.size(); ++i) {
    certs[i].n_lo = pass.lo[i];
    certs[i].n_hi = pass.hi[i];
    certs[i].method = CountMethod::PruferExact;
    certs[i].refine = m;
    certs[i].open = open;
  }
  return certs;
}

CountCertificate count_with_bracketed_W(const randpot::PotentialRealization& real, const randpot::Perturbation& W,
                                        Boundary bc, RefinePolicy policy) {
  const double end[] = {real.extent};
  return count_with_bracketed_W(real, W, bc, end, policy).front();
}

CountCertificate DirichletNeumannCounts::certificate() const {
  CountCertificate c;
  c.n_lo = n_D;
  c.n_hi = n_N;
  c.method = CountMethod::BracketDN;
  c.refine = refine;
  c.open = open;
  return c;
}

namespace {

struct DNPass {
  DirichletNeumannCounts counts;
  std::int64_t width_D = 0;  // sum of Dirichlet bracket widths
  std::int64_t width_N = 0;
};

DNPass dn_pass(const randpot::PotentialRealization& real, const randpot::Perturbation& W, std::size_t m) {
  DNPass out;
  out.counts.refine = m;
  OscillationCounter d_lo(Boundary::Dirichlet), d_hi(Boundary::Dirichlet);
  OscillationCounter n_lo(Boundary::Neumann), n_hi(Boundary::Neumann);
  std::size_t interval = 0;
  bool touched = false;
  auto close = [&] {
    if (!touched) return;
    const auto dl = d_lo.count(Boundary::Dirichlet);
    const auto dh = d_hi.count(Boundary::Dirichlet);
    const auto nl = n_lo.count(Boundary::Neumann);
    const auto nh = n_hi.count(Boundary::Neumann);
    out.counts.n_D += dl;
    out.counts.n_N += nh;
    out.width_D += dh - dl;
    out.width_N += nh - nl;
    out.counts.per_interval.push_back({interval, dl, nh});
    d_lo = OscillationCounter(Boundary::Dirichlet);
    d_hi = OscillationCounter(Boundary::Dirichlet);
    n_lo = OscillationCounter(Boundary::Neumann);
    n_hi = OscillationCounter(Boundary::Neumann);
    touched = false;
  };
  const auto& centers = real.centers;
  std::size_t next_center = 0;
  for_each_subpiece(real, W, m, [&](double a, double b, double v, double w_left, double w_right) {
    // Centers are piece breakpoints, so an interval boundary is always the
    // start of some sub-piece.
    while (next_center < centers.size() && centers[next_center] <= a) {
      close();
      interval = next_center + 1;
      ++next_center;
    }
    const double len = b - a;
    d_lo.advance(len, v - w_right);
    n_lo.advance(len, v - w_right);
    d_hi.advance(len, v - w_left);
    n_hi.advance(len, v - w_left);
    touched = true;
  });
  close();
  return out;
}

}  // namespace

DirichletNeumannCounts bracket_counts_DN(const randpot::PotentialRealization& real, const randpot::Perturbation& W,
                                         RefinePolicy policy) {
  check_policy(policy);
  if (real.centers.empty()) throw DomainError("bracket_counts_DN: realization has no bump");
  std::size_t m = policy.start;
  DNPass pass = dn_pass(real, W, m);
  auto wide = [&] { return pass.width_D > policy.tolerance || pass.width_N > policy.tolerance; };
  while (wide() && m * 2 <= policy.max) {
    m *= 2;
    pass = dn_pass(real, W, m);
  }
  pass.counts.open = wide();
  return std::move(pass.counts);
}

}  // namespace anderson::spectral
