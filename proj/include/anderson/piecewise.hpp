#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace anderson::spectral {

// q(x) constant on each [breakpoints[i], breakpoints[i+1]). Values may be
// +infinity (hard wall) but not NaN or -infinity.
class PiecewisePotential {
 public:
  PiecewisePotential(std::vector<double> breakpoints, std::vector<double> values);

  // Pieces of the given lengths laid end to end from 0.
  static PiecewisePotential from_lengths(std::span<const double> lengths, std::span<const double> values);
  static PiecewisePotential constant(double extent, double value);

  std::size_t size() const noexcept { return values_.size(); }
  double extent() const noexcept { return breakpoints_.back(); }
  double start() const noexcept { return breakpoints_.front(); }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

  double operator()(double x) const;

  // Average of q over [a, b] (exact for piecewise constants).
  double average(double a, double b) const;

  double max_abs() const;

  PiecewisePotential shifted(double offset) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

// CSV rows (piece_start, piece_end, value).
void write_piecewise_csv(std::ostream& os, const PiecewisePotential& q);
PiecewisePotential read_piecewise_csv(std::istream& is);

}  // namespace anderson::spectral
