#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "anderson/piecewise.hpp"

namespace anderson::spectral {

enum class Boundary { Dirichlet, Neumann };

std::string_view to_string(Boundary bc) noexcept;

enum class CountMethod { PruferExact, FdInertia, BracketDN, Decoupled };

std::string_view to_string(CountMethod m) noexcept;

struct IntervalCount {
  std::size_t index;
  std::int64_t count;
};

// Certified interval [n_lo, n_hi] for a number of negative eigenvalues.
struct CountCertificate {
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  CountMethod method = CountMethod::PruferExact;
  std::vector<IntervalCount> per_interval;
  // Sub-pieces per interval used by the W bracket (0 when not applicable).
  std::size_t refine = 0;
  // Set when the bracket did not close to the requested width.
  bool open = false;

  std::int64_t width() const noexcept { return n_hi - n_lo; }
  bool contains(std::int64_t n) const noexcept { return n_lo <= n && n <= n_hi; }
};

// CSV header "method,n_lo,n_hi" and one row per certificate.
void write_certificate_csv_header(std::ostream& os);
void write_certificate_csv_row(std::ostream& os, const CountCertificate& cert);

// Energy-zero solution of -u'' + q u = 0 carried across constant pieces in
// closed form. The state is kept as a unit vector (u, u'), plus the number
// of zeros of u met so far; zeros sitting exactly on a breakpoint belong to
// the piece on their left. By Sturm oscillation, the number of negative
// eigenvalues on the traversed interval follows from the zero count and the
// final phase.
//
// An infinite piece is a hard wall: the part traversed so far is closed
// with a Dirichlet condition and counting restarts on the other side.
class OscillationCounter {
 public:
  explicit OscillationCounter(Boundary left = Boundary::Dirichlet);

  void advance(double length, double q);

  // Negative eigenvalues on the traversed interval with `right` at its end.
  std::int64_t count(Boundary right) const;

  std::int64_t zeros() const noexcept { return zeros_; }

 private:
  std::int64_t local_count(Boundary right) const;

  double u_;
  double du_;
  std::int64_t zeros_ = 0;
  std::int64_t committed_ = 0;
};

// Exact count of eigenvalues of -u'' + q u below `energy` on the potential's
// interval.
CountCertificate count_negative_exact(const PiecewisePotential& q, Boundary left, Boundary right,
                                      double energy = 0.0);

}  // namespace anderson::spectral
