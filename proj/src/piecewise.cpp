#include "anderson/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "anderson/error.hpp"
#include "anderson/format.hpp"

namespace anderson::spectral {

PiecewisePotential::PiecewisePotential(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("piecewise potential: empty piece list");
  if (breakpoints_.size() != values_.size() + 1) {
    throw DomainError("piecewise potential: need one more breakpoint than values");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) throw DomainError("piecewise potential: non-finite breakpoint");
    if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw DomainError("piecewise potential: breakpoints must be strictly increasing");
    }
  }
  for (double v : values_) {
    if (std::isnan(v) || v == -INFINITY) throw DomainError("piecewise potential: non-finite value");
  }
}

PiecewisePotential PiecewisePotential::from_lengths(std::span<const double> lengths, std::span<const double> values) {
  std::vector<double> bp{0.0};
  bp.reserve(lengths.size() + 1);
  for (double len : lengths) bp.push_back(bp.back() + len);
  return PiecewisePotential(std::move(bp), std::vector<double>(values.begin(), values.end()));
}

PiecewisePotential PiecewisePotential::constant(double extent, double value) {
  return PiecewisePotential({0.0, extent}, {value});
}

double PiecewisePotential::operator()(double x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.begin()) return values_.front();
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return values_[std::min(i, values_.size() - 1)];
}

double PiecewisePotential::average(double a, double b) const {
  if (!(b > a)) return (*this)(a);
  const std::size_t n = values_.size();
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), a);
  std::size_t i = it == breakpoints_.begin() ? 0 : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  i = std::min(i, n - 1);
  double sum = 0.0;
  double cursor = a;
  while (cursor < b) {
    const double end = i + 1 < n ? std::min(breakpoints_[i + 1], b) : b;
    if (end > cursor) sum += values_[i] * (end - cursor);
    cursor = std::max(cursor, end);
    ++i;
  }
  return sum / (b - a);
}

double PiecewisePotential::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

PiecewisePotential PiecewisePotential::shifted(double offset) const {
  std::vector<double> bp = breakpoints_;
  for (double& b : bp) b += offset;
  return PiecewisePotential(std::move(bp), values_);
}

void write_piecewise_csv(std::ostream& os, const PiecewisePotential& q) {
  os << "piece_start,piece_end,value\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    os << fmt_exact(q.breakpoints()[i]) << ',' << fmt_exact(q.breakpoints()[i + 1]) << ','
       << fmt_exact(q.values()[i]) << '\n';
  }
}

PiecewisePotential read_piecewise_csv(std::istream& is) {
  std::vector<double> bp;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.rfind("piece_start", 0) == 0) continue;
    std::istringstream row(line);
    std::string cell[3];
    double v[3];
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(row, cell[c], ',')) throw DataError("line " + std::to_string(line_no) + ": expected 3 columns");
      try {
        v[c] = std::stod(cell[c]);
      } catch (const std::exception&) {
        throw DataError("line " + std::to_string(line_no) + ": not a number: '" + cell[c] + "'");
      }
    }
    if (bp.empty()) {
      bp.push_back(v[0]);
    } else if (v[0] != bp.back()) {
      throw DataError("line " + std::to_string(line_no) + ": piece does not start where the previous ended");
    }
    bp.push_back(v[1]);
    values.push_back(v[2]);
  }
  try {
    return PiecewisePotential(std::move(bp), std::move(values));
  } catch (const DomainError& e) {
    throw DataError(e.what());
  }
}

}  // namespace anderson::spectral
