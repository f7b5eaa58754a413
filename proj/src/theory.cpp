#include "anderson/theory.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "anderson/error.hpp"
#include "anderson/format.hpp"

namespace anderson::theory {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = std::numbers::pi;

}  // namespace

std::string_view to_string(LawForm f) noexcept { return f == LawForm::LogPower ? "log-power" : "power-law"; }

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Converging:
      return "converging";
    case Verdict::Diverging:
      return "diverging";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

BorderlineLaw borderline(const randpot::GapDistribution& dist) {
  using namespace randpot;
  return std::visit(
      overloaded{
          [&](const Exponential& d) {
            return BorderlineLaw{dist, d.rate * d.rate * kPi * kPi, 2.0, LawForm::LogPower};
          },
          [&](const StretchedExponential& d) {
            const double e = 2.0 / d.power;
            return BorderlineLaw{dist, std::pow(d.rate / d.power, e) * kPi * kPi, e, LawForm::LogPower};
          },
          [&](const Pareto& d) { return BorderlineLaw{dist, 1.0, 2.0 / d.exponent, LawForm::PowerLaw}; },
          [&](const Geometric& d) {
            const double eta = std::log(1.0 / d.q);
            return BorderlineLaw{dist, eta * eta * kPi * kPi, 2.0, LawForm::LogPower};
          },
      },
      dist.kind());
}

double bernoulli_constant(double empty_probability) {
  if (!(empty_probability > 0 && empty_probability < 1)) throw DomainError("bernoulli_constant: q must lie in (0,1)");
  const double eta = std::log(1.0 / empty_probability);
  return kPi * kPi * eta * eta;
}

HeavyTailCandidates heavy_tail_exponents(double alpha) {
  if (!(alpha > 1)) throw DomainError("heavy_tail_exponents: alpha must be > 1");
  return {2.0 / alpha, 2.0 / (alpha - 1.0)};
}

ApproxWeights approx_weights(const randpot::Perturbation& W, double alpha_mean, double epsilon, std::size_t count,
                             Side side) {
  if (!(epsilon >= 0 && epsilon < 1)) throw DomainError("approx_weights: epsilon must lie in [0,1)");
  if (!(alpha_mean > 0)) throw DomainError("approx_weights: mean spacing must be > 0");
  ApproxWeights out{epsilon, alpha_mean, side, {}};
  out.values.reserve(count);
  const double factor = side == Side::Upper ? 1.0 - epsilon : 1.0 + epsilon;
  for (std::size_t k = 1; k <= count; ++k) out.values.push_back(W(factor * alpha_mean * static_cast<double>(k)));
  return out;
}

BorelCantelliSum bc_sum(const randpot::GapDistribution& dist, const randpot::Perturbation& W, double alpha_mean,
                        double epsilon, double offset, std::size_t count, Side side, double margin) {
  if (count < 1) throw DomainError("bc_sum: K must be >= 1");
  if (!(offset >= 0)) throw DomainError("bc_sum: offset must be >= 0");
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("bc_sum: epsilon must lie in (0,1)");
  const auto weights = approx_weights(W, alpha_mean, epsilon, count, side);
  BorelCantelliSum out;
  out.summands.reserve(count);
  out.partial_sums.reserve(count);
  double running = 0.0;
  for (double w : weights.values) {
    if (!(w > 0)) throw DomainError("bc_sum: W must be strictly positive at the evaluation points");
    const double threshold = std::max(0.0, kPi / std::sqrt(w) - offset);
    const double term = dist.tail(threshold);
    running += term;
    out.summands.push_back(term);
    out.partial_sums.push_back(running);
  }

  // Least-squares slope of log(summand) against log(k) over the last decade.
  const std::size_t first = std::max<std::size_t>(1, count / 10);
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool any_zero = false;
  for (std::size_t k = first; k <= count; ++k) {
    const double term = out.summands[k - 1];
    if (!(term > 0)) {
      any_zero = true;
      continue;
    }
    const double x = std::log(static_cast<double>(k));
    const double y = std::log(term);
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (n >= 2 && denom > 0) {
    out.decay_exponent = -(n * sxy - sx * sy) / denom;
  } else if (any_zero) {
    // Summands underflow to zero: faster than any power.
    out.decay_exponent = std::numeric_limits<double>::infinity();
  } else {
    out.decay_exponent = 0.0;
  }
  if (out.decay_exponent > 1.0 + margin) {
    out.verdict = Verdict::Converging;
  } else if (out.decay_exponent < 1.0 - margin) {
    out.verdict = Verdict::Diverging;
  } else {
    out.verdict = Verdict::Undetermined;
  }
  return out;
}

void write_bc_sum_csv(std::ostream& os, const BorelCantelliSum& sum) {
  os << "k,summand,partial_sum\n";
  for (std::size_t i = 0; i < sum.summands.size(); ++i) {
    os << (i + 1) << ',' << fmt(sum.summands[i]) << ',' << fmt(sum.partial_sums[i]) << '\n';
  }
}

double tail_integral(const randpot::GapDistribution& dist, double a) {
  using namespace randpot;
  if (!(a >= 0)) throw DomainError("tail_integral: a must be >= 0");
  return std::visit(
      overloaded{
          [a](const Exponential& d) { return std::exp(-d.rate * a) / d.rate; },
          [a](const StretchedExponential& d) {
            boost::math::quadrature::exp_sinh<double> integrator;
            auto f = [&d](double x) { return std::exp(-d.rate * std::pow(x, d.power) / d.power); };
            double error = 0;
            double l1 = 0;
            return integrator.integrate(f, a, std::numeric_limits<double>::infinity(), 1e-10, &error, &l1);
          },
          [a](const Pareto& d) {
            const double tail_part = d.scale / (d.exponent - 1.0);
            if (a >= d.scale) return tail_part * std::pow(d.scale / a, d.exponent - 1.0);
            return (d.scale - a) + tail_part;
          },
          [a](const Geometric& d) {
            const double m = std::ceil(a);
            return (m - a) * std::pow(d.q, m) + std::pow(d.q, m + 1.0) / (1.0 - d.q);
          },
      },
      dist.kind());
}

ExpectationBounds expectation_bounds(const randpot::GapDistribution& dist, double w) {
  if (!(w > 0) || !std::isfinite(w)) throw DomainError("expectation_bounds: w must be > 0");
  const double root_w = std::sqrt(w);
  const double a = kPi / root_w;
  const double lower = root_w / kPi * tail_integral(dist, a);
  return {lower, lower + dist.tail(a)};
}

void write_expectation_csv(std::ostream& os, const randpot::GapDistribution& dist, std::span<const double> energies) {
  os << "w,lower,upper\n";
  for (double w : energies) {
    const auto b = expectation_bounds(dist, w);
    os << fmt(w) << ',' << fmt(b.lower) << ',' << fmt(b.upper) << '\n';
  }
}

}  // namespace anderson::theory
