#include "anderson/realization.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "anderson/error.hpp"
#include "anderson/format.hpp"

namespace anderson::randpot {

namespace {

void check_geometry(double half_width, double height, double extent) {
  if (!(std::isfinite(half_width) && half_width > 0)) throw DomainError("realization: l must be > 0");
  if (!(height > 0)) throw DomainError("realization: h must be > 0");
  if (!(std::isfinite(extent) && extent > 0)) throw DomainError("realization: X must be > 0");
}

}  // namespace

std::size_t PotentialRealization::bumps_up_to(double x) const {
  return static_cast<std::size_t>(std::upper_bound(centers.begin(), centers.end(), x) - centers.begin());
}

double PotentialRealization::potential(double x) const {
  // First center with c + l > x is the only bump that can contain x.
  auto it = std::upper_bound(centers.begin(), centers.end(), x - half_width);
  if (it != centers.end() && *it - half_width <= x) return height;
  return 0.0;
}

PotentialRealization build_realization(std::vector<double> gaps, double half_width, double height, double extent) {
  check_geometry(half_width, height, extent);
  PotentialRealization real;
  real.half_width = half_width;
  real.height = height;
  real.extent = extent;
  double x = -half_width;
  std::size_t used = 0;
  for (double g : gaps) {
    if (!(std::isfinite(g) && g >= 0)) throw DomainError("realization: gaps must be finite and >= 0");
    x += g + 2.0 * half_width;
    real.centers.push_back(x);
    ++used;
    if (x + half_width >= extent) break;
  }
  if (real.centers.empty() || real.centers.back() + half_width < extent) {
    throw CoverageError("realization: domain not covered, sample more gaps");
  }
  gaps.resize(used);
  real.gaps = std::move(gaps);
  return real;
}

PotentialRealization sample_realization(const GapDistribution& dist, double half_width, double height,
                                        double extent, std::uint64_t seed, std::size_t max_gaps) {
  check_geometry(half_width, height, extent);
  Rng rng(seed);
  std::vector<double> gaps;
  double right_edge = 0.0;
  while (right_edge < extent) {
    if (gaps.size() >= max_gaps) throw CoverageError("realization: gap cap reached before X was covered");
    const double g = dist.sample(rng);
    gaps.push_back(g);
    right_edge += g + 2.0 * half_width;
  }
  return build_realization(std::move(gaps), half_width, height, extent);
}

PotentialRealization bernoulli_lattice(double p, double extent, std::uint64_t seed, double height,
                                       std::size_t max_cells) {
  if (!(p > 0 && p < 1)) throw DomainError("bernoulli_lattice: p must lie in (0,1)");
  if (!(std::isfinite(extent) && extent >= 1)) throw DomainError("bernoulli_lattice: X must be >= 1");
  Rng rng(seed);
  std::vector<double> gaps;
  double run = 0.0;
  for (std::size_t cell = 0;; ++cell) {
    if (cell >= max_cells) throw CoverageError("bernoulli_lattice: cell cap reached before X was covered");
    if (rng.bernoulli(p)) {
      gaps.push_back(run);
      run = 0.0;
      if (static_cast<double>(cell + 1) >= extent) break;
    } else {
      run += 1.0;
    }
  }
  return build_realization(std::move(gaps), 0.5, height, extent);
}

PotentialRealization truncate(const PotentialRealization& real, double extent) {
  return build_realization(real.gaps, real.half_width, real.height, extent);
}

void write_realization(std::ostream& os, const PotentialRealization& real) {
  os << "l=" << fmt(real.half_width) << " h=" << fmt(real.height) << " X=" << fmt(real.extent) << '\n';
  for (double g : real.gaps) os << fmt_exact(g) << '\n';
}

PotentialRealization read_realization(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  double l = 0, h = 0, X = 0;
  std::vector<double> gaps;
  auto fail = [&](const std::string& what) -> DataError {
    return DataError("line " + std::to_string(line_no) + ": " + what);
  };
  auto parse_number = [&](const std::string& text) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(text, &pos);
    } catch (const std::exception&) {
      throw fail("not a number: '" + text + "'");
    }
    if (pos != text.size()) throw fail("trailing characters in '" + text + "'");
    return v;
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    if (!have_header) {
      bool seen_l = false, seen_h = false, seen_x = false;
      std::string tok;
      while (tokens >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw fail("expected key=value in header, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const double v = parse_number(tok.substr(eq + 1));
        if (key == "l") {
          l = v, seen_l = true;
        } else if (key == "h") {
          h = v, seen_h = true;
        } else if (key == "X") {
          X = v, seen_x = true;
        } else {
          throw fail("unknown header key '" + key + "'");
        }
      }
      if (!(seen_l && seen_h && seen_x)) throw fail("header must define l, h and X");
      have_header = true;
      continue;
    }
    std::string tok;
    tokens >> tok;
    std::string extra;
    if (tokens >> extra) throw fail("expected one gap per line");
    const double g = parse_number(tok);
    if (!(std::isfinite(g) && g >= 0)) throw fail("gap must be finite and >= 0");
    gaps.push_back(g);
  }
  if (!have_header) throw DataError("line " + std::to_string(line_no) + ": missing header line");
  try {
    return build_realization(std::move(gaps), l, h, X);
  } catch (const std::exception& e) {
    throw DataError(std::string("realization: ") + e.what());
  }
}

void write_centers_csv(std::ostream& os, const PotentialRealization& real) {
  os << "k,x_k,L_k\n";
  for (std::size_t i = 0; i < real.centers.size(); ++i) {
    os << (i + 1) << ',' << fmt(real.centers[i]) << ',' << fmt(real.gaps[i]) << '\n';
  }
}

}  // namespace anderson::randpot
