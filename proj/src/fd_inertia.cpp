#include "anderson/fd_inertia.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "anderson/error.hpp"

namespace anderson::spectral {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  double off;  // constant off-diagonal
};

// Number of negative pivots, or nullopt on an exactly zero pivot.
std::optional<std::int64_t> negative_pivots(const Tridiagonal& m) {
  std::int64_t negatives = 0;
  double pivot = 0.0;
  const double off2 = m.off * m.off;
  for (std::size_t i = 0; i < m.diag.size(); ++i) {
    pivot = m.diag[i] - (i == 0 ? 0.0 : off2 / pivot);
    if (pivot == 0.0) return std::nullopt;
    if (pivot < 0) ++negatives;
  }
  return negatives;
}

// Rows for nodes x_i = i * step; node 0 and node mesh+1 only on Neumann ends.
template <class NodeValue>
Tridiagonal assemble(double extent, std::size_t mesh, Boundary left, Boundary right, NodeValue&& node_value,
                     double& max_abs_q) {
  if (mesh < 10) throw DomainError("fd_inertia_count: mesh must be >= 10");
  if (!(std::isfinite(extent) && extent > 0)) throw DomainError("fd_inertia_count: X must be > 0");
  const double step = extent / static_cast<double>(mesh + 1);
  const double inv2 = 1.0 / (step * step);
  const std::size_t first = left == Boundary::Neumann ? 0 : 1;
  const std::size_t last = right == Boundary::Neumann ? mesh + 1 : mesh;
  Tridiagonal m;
  m.off = -inv2;
  m.diag.reserve(last - first + 1);
  max_abs_q = 0.0;
  for (std::size_t i = first; i <= last; ++i) {
    const bool boundary = i == 0 || i == mesh + 1;
    const double q = node_value(i, step);
    if (!std::isfinite(q)) throw DomainError("fd_inertia_count: q must be bounded");
    max_abs_q = std::max(max_abs_q, std::abs(q));
    m.diag.push_back(boundary ? inv2 + 0.5 * q : 2.0 * inv2 + q);
  }
  return m;
}

std::int64_t factor_with_retry(Tridiagonal& m, double max_abs_q, Boundary left, Boundary right) {
  if (auto n = negative_pivots(m)) return *n;
  const double delta = 1e-12 * (max_abs_q > 0 ? max_abs_q : 1.0);
  // A shift of q by delta is a shift of delta on interior rows and delta/2 on
  // halved boundary rows.
  const std::size_t n_rows = m.diag.size();
  for (std::size_t r = 0; r < n_rows; ++r) {
    const bool boundary = (r == 0 && left == Boundary::Neumann) || (r + 1 == n_rows && right == Boundary::Neumann);
    m.diag[r] += boundary ? 0.5 * delta : delta;
  }
  if (auto n = negative_pivots(m)) return *n;
  throw NumericalFailure("fd_inertia_count: zero pivot persisted after shift");
}

}  // namespace

std::int64_t fd_inertia_count(const std::function<double(double)>& q, double extent, std::size_t mesh,
                              Boundary left, Boundary right) {
  double max_abs_q = 0.0;
  auto m = assemble(
      extent, mesh, left, right, [&](std::size_t i, double step) { return q(static_cast<double>(i) * step); },
      max_abs_q);
  return factor_with_retry(m, max_abs_q, left, right);
}

std::int64_t fd_inertia_count(const PiecewisePotential& q, std::size_t mesh, Boundary left, Boundary right) {
  const double origin = q.start();
  const double extent = q.extent() - origin;
  double max_abs_q = 0.0;
  const auto& bp = q.breakpoints();
  const auto& values = q.values();
  // Nodes are visited left to right, so a moving piece index gives exact
  // cell averages in O(nodes + pieces).
  std::size_t piece = 0;
  auto cell_average = [&](double a, double b) {
    while (piece + 1 < values.size() && bp[piece + 1] <= a) ++piece;
    double sum = 0.0;
    double cursor = a;
    std::size_t j = piece;
    while (cursor < b) {
      const double end = j + 1 < values.size() ? std::min(bp[j + 1], b) : b;
      if (end > cursor) sum += values[j] * (end - cursor);
      cursor = std::max(cursor, end);
      ++j;
    }
    return sum / (b - a);
  };
  auto m = assemble(
      extent, mesh, left, right,
      [&](std::size_t i, double step) {
        const double x = origin + static_cast<double>(i) * step;
        const double a = std::max(origin, x - 0.5 * step);
        const double b = std::min(q.extent(), x + 0.5 * step);
        return cell_average(a, b);
      },
      max_abs_q);
  return factor_with_retry(m, max_abs_q, left, right);
}

}  // namespace anderson::spectral
