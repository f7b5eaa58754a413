#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace anderson::randpot {

// W(x) = amplitude / ln^power(x + e)
struct LogPower {
  double amplitude;
  double power;
};

// W(x) = amplitude * (x + 1)^(-decay)
struct PowerLaw {
  double amplitude;
  double decay;
};

struct ConstantLevel {
  double value;
};

// Piecewise-linear through (x, W) knots, flat outside the knot range.
struct Tabulated {
  std::vector<std::pair<double, double>> knots;
};

// Nonnegative, nonincreasing perturbation W subtracted from the operator.
class Perturbation {
 public:
  using Kind = std::variant<LogPower, PowerLaw, ConstantLevel, Tabulated>;

  explicit Perturbation(Kind kind);

  static Perturbation log_power(double amplitude, double power) { return Perturbation{LogPower{amplitude, power}}; }
  static Perturbation power_law(double amplitude, double decay) { return Perturbation{PowerLaw{amplitude, decay}}; }
  static Perturbation constant(double value) { return Perturbation{ConstantLevel{value}}; }
  static Perturbation tabulated(std::vector<std::pair<double, double>> knots) {
    return Perturbation{Tabulated{std::move(knots)}};
  }

  // W(x) for x >= 0.
  double operator()(double x) const;

  // Same family with the amplitude multiplied by `factor`.
  Perturbation scaled(double factor) const;

  bool is_constant() const noexcept { return std::holds_alternative<ConstantLevel>(kind_); }
  bool is_zero() const;
  const Kind& kind() const noexcept { return kind_; }

  std::string describe() const;

 private:
  Kind kind_;
};

}  // namespace anderson::randpot
