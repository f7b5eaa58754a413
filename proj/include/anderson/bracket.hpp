#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "anderson/oscillation.hpp"
#include "anderson/perturbation.hpp"
#include "anderson/realization.hpp"

namespace anderson::spectral {

// Sub-pieces per constant piece of V: start at `start`, double until the
// bracket width is at most `tolerance` or `max` is reached.
struct RefinePolicy {
  std::size_t start = 4;
  std::size_t max = 64;
  std::int64_t tolerance = 1;

  static RefinePolicy fixed(std::size_t pieces) { return {pieces, pieces, 0}; }
};

// Counts for -u'' + (V - W) u on [0, X] with `bc` at both ends. Every
// constant piece of V is cut into equal sub-pieces; on each, W decreasing
// gives W(right) <= W <= W(left), so the piecewise-constant potentials
// V - W(left) and V - W(right) bound the count from above and below.
// Doubling the sub-piece count nests the grids and never widens the bracket.
CountCertificate count_with_bracketed_W(const randpot::PotentialRealization& real, const randpot::Perturbation& W,
                                        Boundary bc, RefinePolicy policy = {});

// Same bracket evaluated with a Dirichlet (or Neumann) end at each
// checkpoint, from a single pass. The bounding potentials do not depend on
// the checkpoints, so Dirichlet counts are nondecreasing along them.
// Checkpoints must be increasing and lie in (0, X].
std::vector<CountCertificate> count_with_bracketed_W(const randpot::PotentialRealization& real,
                                                     const randpot::Perturbation& W, Boundary bc,
                                                     std::span<const double> checkpoints, RefinePolicy policy = {});

struct IntervalBracket {
  std::size_t index;  // 0 is [0, x_1], k is [x_k, x_{k+1}]
  std::int64_t n_D;
  std::int64_t n_N;
};

struct DirichletNeumannCounts {
  std::int64_t n_D = 0;
  std::int64_t n_N = 0;
  std::vector<IntervalBracket> per_interval;
  std::size_t refine = 0;
  bool open = false;

  // [n_D, n_N] tagged bracket-DN.
  CountCertificate certificate() const;
};

// Dirichlet (resp. Neumann) conditions inserted at 0, at every bump center
// and at X split the operator into independent intervals. n_D sums the
// lower ends of the Dirichlet brackets and n_N the upper ends of the
// Neumann brackets, so n_D <= N(whole domain) <= n_N.
DirichletNeumannCounts bracket_counts_DN(const randpot::PotentialRealization& real, const randpot::Perturbation& W,
                                         RefinePolicy policy = {});

}  // namespace anderson::spectral
