#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "anderson/distribution.hpp"

namespace anderson::randpot {

// One sampled bump configuration on [0, X]. Bump k (1-based) occupies
// [x_k - l, x_k + l] with x_k = L_1 + ... + L_k + (2k - 1) l, and the
// potential equals `height` there and 0 elsewhere. A bump straddling X keeps
// its height on the clipped part.
struct PotentialRealization {
  double half_width = 0.5;  // l
  double height = 1.0;      // h, may be +infinity
  double extent = 0.0;      // X
  std::vector<double> gaps;
  std::vector<double> centers;

  // Number of bumps whose center lies in [0, x].
  std::size_t bumps_up_to(double x) const;

  // V at position x (the right-continuous convention at edges).
  double potential(double x) const;
};

// Throws DomainError for bad geometry and CoverageError when the gaps stop
// before X is covered. Trailing gaps not needed to describe [0, X] are dropped.
PotentialRealization build_realization(std::vector<double> gaps, double half_width, double height, double extent);

// Draws gaps from `dist` until [0, X] is covered. At most `max_gaps` draws.
PotentialRealization sample_realization(const GapDistribution& dist, double half_width, double height,
                                        double extent, std::uint64_t seed, std::size_t max_gaps = 10'000'000);

// Unit cells [j, j+1) carry height h independently with probability p. Runs
// of occupied cells are unit bumps with zero gaps between them, so a gap is
// the number of empty cells between two occupied ones (P(L >= m) = (1-p)^m).
PotentialRealization bernoulli_lattice(double p, double extent, std::uint64_t seed, double height = 1.0,
                                       std::size_t max_cells = 10'000'000);

// The same configuration observed on the shorter domain [0, X].
PotentialRealization truncate(const PotentialRealization& real, double extent);

// Visits the constant pieces of V on [0, X] in order: f(begin, end, value).
// Bump centers are breakpoints too, so every [x_k, x_{k+1}] is a union of pieces.
template <class F>
void for_each_piece(const PotentialRealization& real, F&& f) {
  const double l = real.half_width;
  const double X = real.extent;
  double cursor = 0.0;
  auto emit = [&](double end, double value) {
    end = end < X ? end : X;
    if (end > cursor) {
      f(cursor, end, value);
      cursor = end;
    }
  };
  for (double c : real.centers) {
    if (cursor >= X) break;
    emit(c - l, 0.0);
    emit(c, real.height);
    emit(c + l, real.height);
  }
  emit(X, 0.0);
}

// Header line `l=<v> h=<v> X=<v>`, then one gap per line. Lines starting
// with '#' are comments.
void write_realization(std::ostream& os, const PotentialRealization& real);

// Throws DataError naming the offending line.
PotentialRealization read_realization(std::istream& is);

// CSV rows (k, x_k, L_k).
void write_centers_csv(std::ostream& os, const PotentialRealization& real);

}  // namespace anderson::randpot
