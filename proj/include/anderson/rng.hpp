#pragma once

#include <cstdint>
#include <random>

namespace anderson {

// SplitMix64 finalizer; used to decorrelate seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Per-trial seed from a master seed and a trial index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

// Deterministic random stream. The engine output is fixed by the standard,
// and uniforms are built from raw bits, so streams are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace anderson
