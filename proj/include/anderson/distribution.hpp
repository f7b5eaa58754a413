#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "anderson/rng.hpp"

namespace anderson::randpot {

struct Exponential {
  double rate;  // eta
};

// Exact tail exp(-eta x^alpha / alpha).
struct StretchedExponential {
  double rate;   // eta
  double power;  // alpha
};

// Tail min(1, (scale / x)^exponent); exponent > 1 keeps the mean finite.
struct Pareto {
  double scale = 1.0;
  double exponent;
};

// Integer gaps with P(L >= m) = q^m.
struct Geometric {
  double q;
};

// Law of the gap lengths between consecutive bumps.
class GapDistribution {
 public:
  using Kind = std::variant<Exponential, StretchedExponential, Pareto, Geometric>;

  // Throws DomainError when the parameters are outside the family's range.
  explicit GapDistribution(Kind kind);

  static GapDistribution exponential(double rate) { return GapDistribution{Exponential{rate}}; }
  static GapDistribution stretched_exponential(double rate, double power) {
    return GapDistribution{StretchedExponential{rate, power}};
  }
  static GapDistribution pareto(double exponent, double scale = 1.0) {
    return GapDistribution{Pareto{scale, exponent}};
  }
  static GapDistribution geometric(double q) { return GapDistribution{Geometric{q}}; }

  const Kind& kind() const noexcept { return kind_; }

  // P(L > x). For Geometric the lattice convention q^ceil(x) is used, so the
  // value at an integer m is P(L >= m).
  double tail(double x) const;

  // Inverse-CDF draw from one uniform of the stream.
  double sample(Rng& rng) const;

  double mean() const;

  // Short tag such as "exp(eta=1)".
  std::string describe() const;

 private:
  Kind kind_;
};

// n i.i.d. gaps drawn from a stream seeded by `seed`.
std::vector<double> sample_gaps(const GapDistribution& dist, std::size_t n, std::uint64_t seed);

}  // namespace anderson::randpot
