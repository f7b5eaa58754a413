#include "anderson/distribution.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "anderson/error.hpp"

namespace anderson::randpot {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

GapDistribution::GapDistribution(Kind kind) : kind_(kind) {
  std::visit(overloaded{
                 [](const Exponential& d) {
                   require(std::isfinite(d.rate) && d.rate > 0, "exponential: rate must be > 0");
                 },
                 [](const StretchedExponential& d) {
                   require(std::isfinite(d.rate) && d.rate > 0, "stretched exponential: rate must be > 0");
                   require(std::isfinite(d.power) && d.power > 0, "stretched exponential: power must be > 0");
                 },
                 [](const Pareto& d) {
                   require(std::isfinite(d.scale) && d.scale > 0, "pareto: scale must be > 0");
                   require(std::isfinite(d.exponent) && d.exponent > 1,
                           "pareto: exponent must be > 1 for a finite mean");
                 },
                 [](const Geometric& d) { require(d.q > 0 && d.q < 1, "geometric: q must lie in (0,1)"); },
             },
             kind_);
}

double GapDistribution::tail(double x) const {
  if (std::isnan(x) || x < 0) throw DomainError("tail: x must be >= 0");
  return std::visit(overloaded{
                        [x](const Exponential& d) { return std::exp(-d.rate * x); },
                        [x](const StretchedExponential& d) {
                          return std::exp(-d.rate * std::pow(x, d.power) / d.power);
                        },
                        [x](const Pareto& d) { return x <= d.scale ? 1.0 : std::pow(d.scale / x, d.exponent); },
                        [x](const Geometric& d) { return std::pow(d.q, std::ceil(x)); },
                    },
                    kind_);
}

double GapDistribution::sample(Rng& rng) const {
  const double u = rng.uniform();
  return std::visit(overloaded{
                        [u](const Exponential& d) { return -std::log(u) / d.rate; },
                        [u](const StretchedExponential& d) {
                          return std::pow(d.power * -std::log(u) / d.rate, 1.0 / d.power);
                        },
                        [u](const Pareto& d) { return d.scale * std::pow(u, -1.0 / d.exponent); },
                        [u](const Geometric& d) { return std::floor(std::log(u) / std::log(d.q)); },
                    },
                    kind_);
}

double GapDistribution::mean() const {
  return std::visit(overloaded{
                        [](const Exponential& d) { return 1.0 / d.rate; },
                        [](const StretchedExponential& d) {
                          const double a = d.power;
                          return std::pow(a / d.rate, 1.0 / a) * std::tgamma(1.0 / a) / a;
                        },
                        [](const Pareto& d) { return d.scale * d.exponent / (d.exponent - 1.0); },
                        [](const Geometric& d) { return d.q / (1.0 - d.q); },
                    },
                    kind_);
}

std::string GapDistribution::describe() const {
  std::ostringstream os;
  os.precision(12);
  std::visit(overloaded{
                 [&os](const Exponential& d) { os << "exp(eta=" << d.rate << ")"; },
                 [&os](const StretchedExponential& d) {
                   os << "stretched(eta=" << d.rate << ",alpha=" << d.power << ")";
                 },
                 [&os](const Pareto& d) { os << "pareto(xm=" << d.scale << ",alpha=" << d.exponent << ")"; },
                 [&os](const Geometric& d) { os << "geometric(q=" << d.q << ")"; },
             },
             kind_);
  return os.str();
}

std::vector<double> sample_gaps(const GapDistribution& dist, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_gaps: n must be >= 1");
  Rng rng(seed);
  std::vector<double> gaps(n);
  for (auto& g : gaps) g = dist.sample(rng);
  return gaps;
}

}  // namespace anderson::randpot
