#include <cmath>
#include <numbers>

#include "anderson/error.hpp"
#include "anderson/well.hpp"

namespace anderson::spectral {

std::int64_t decoupled_count(std::span<const std::pair<double, double>> weights) {
  std::int64_t total = 0;
  for (const auto& [w, len] : weights) {
    if (!(w >= 0 && len >= 0) || !std::isfinite(w) || !std::isfinite(len)) {
      throw DomainError("decoupled_count: weights and lengths must be finite and >= 0");
    }
    total += static_cast<std::int64_t>(std::floor(std::sqrt(w) * len / std::numbers::pi));
  }
  return total;
}

}  // namespace anderson::spectral
