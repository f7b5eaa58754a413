#include "anderson/perturbation.hpp"

#include <algorithm>
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

Perturbation::Perturbation(Kind kind) : kind_(std::move(kind)) {
  std::visit(overloaded{
                 [](const LogPower& w) {
                   require(std::isfinite(w.amplitude) && w.amplitude >= 0, "log-power: amplitude must be >= 0");
                   require(std::isfinite(w.power) && w.power > 0, "log-power: power must be > 0");
                 },
                 [](const PowerLaw& w) {
                   require(std::isfinite(w.amplitude) && w.amplitude >= 0, "power-law: amplitude must be >= 0");
                   require(std::isfinite(w.decay) && w.decay > 0, "power-law: decay must be > 0");
                 },
                 [](const ConstantLevel& w) {
                   require(std::isfinite(w.value) && w.value >= 0, "constant: value must be >= 0");
                 },
                 [](const Tabulated& w) {
                   require(!w.knots.empty(), "tabulated: no knots");
                   for (std::size_t i = 0; i < w.knots.size(); ++i) {
                     require(std::isfinite(w.knots[i].first) && std::isfinite(w.knots[i].second),
                             "tabulated: non-finite knot");
                     require(w.knots[i].second >= 0, "tabulated: values must be >= 0");
                     if (i > 0) {
                       require(w.knots[i].first > w.knots[i - 1].first, "tabulated: knots must be increasing");
                       require(w.knots[i].second <= w.knots[i - 1].second, "tabulated: values must be nonincreasing");
                     }
                   }
                 },
             },
             kind_);
}

double Perturbation::operator()(double x) const {
  return std::visit(overloaded{
                        [x](const LogPower& w) { return w.amplitude / std::pow(std::log(x + std::numbers::e), w.power); },
                        [x](const PowerLaw& w) { return w.amplitude * std::pow(x + 1.0, -w.decay); },
                        [](const ConstantLevel& w) { return w.value; },
                        [x](const Tabulated& w) {
                          const auto& k = w.knots;
                          if (x <= k.front().first) return k.front().second;
                          if (x >= k.back().first) return k.back().second;
                          auto it = std::upper_bound(k.begin(), k.end(), x,
                                                     [](double v, const auto& knot) { return v < knot.first; });
                          const auto& [x1, y1] = *it;
                          const auto& [x0, y0] = *(it - 1);
                          const double t = (x - x0) / (x1 - x0);
                          return y0 + t * (y1 - y0);
                        },
                    },
                    kind_);
}

Perturbation Perturbation::scaled(double factor) const {
  return std::visit(overloaded{
                        [factor](LogPower w) { w.amplitude *= factor; return Perturbation{w}; },
                        [factor](PowerLaw w) { w.amplitude *= factor; return Perturbation{w}; },
                        [factor](ConstantLevel w) { w.value *= factor; return Perturbation{w}; },
                        [factor](Tabulated w) {
                          for (auto& knot : w.knots) knot.second *= factor;
                          return Perturbation{std::move(w)};
                        },
                    },
                    kind_);
}

bool Perturbation::is_zero() const {
  return std::visit(overloaded{
                        [](const LogPower& w) { return w.amplitude == 0; },
                        [](const PowerLaw& w) { return w.amplitude == 0; },
                        [](const ConstantLevel& w) { return w.value == 0; },
                        [](const Tabulated& w) { return w.knots.front().second == 0; },
                    },
                    kind_);
}

std::string Perturbation::describe() const {
  std::ostringstream os;
  os.precision(12);
  std::visit(overloaded{
                 [&os](const LogPower& w) { os << "logpower(C=" << w.amplitude << ",s=" << w.power << ")"; },
                 [&os](const PowerLaw& w) { os << "power(A=" << w.amplitude << ",beta=" << w.decay << ")"; },
                 [&os](const ConstantLevel& w) { os << "const(w=" << w.value << ")"; },
                 [&os](const Tabulated& w) { os << "tabulated(" << w.knots.size() << " knots)"; },
             },
             kind_);
  return os.str();
}

}  // namespace anderson::randpot
