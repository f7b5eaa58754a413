#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "anderson/bracket.hpp"
#include "anderson/distribution.hpp"
#include "anderson/perturbation.hpp"
#include "anderson/realization.hpp"

namespace anderson::mc {

// Unit-cell Bernoulli potential: each cell occupied with probability p.
struct BernoulliLattice {
  double p;
};

using PotentialSource = std::variant<randpot::GapDistribution, BernoulliLattice>;

enum class CountMode { WholeDomain, BracketDN };

struct ExperimentConfig {
  PotentialSource source = randpot::GapDistribution::exponential(1.0);
  randpot::Perturbation W = randpot::Perturbation::constant(0.0);
  double half_width = 0.5;  // l (forced to 1/2 for the Bernoulli lattice)
  double height = 1.0;      // h
  std::vector<double> checkpoints{1e3, 1e4, 1e5};
  std::size_t trials = 100;
  std::uint64_t master_seed = 1;
  CountMode mode = CountMode::WholeDomain;
  spectral::RefinePolicy refine{};
  unsigned workers = 0;  // 0: hardware concurrency
  std::size_t max_gaps = 10'000'000;

  // Throws DomainError on an invalid configuration.
  void validate() const;
};

struct CheckpointResult {
  double extent;
  spectral::CountCertificate cert;
  std::size_t bumps;  // bump centers in [0, X]
  double max_gap;     // longest well starting before X
};

struct TrialResult {
  std::size_t trial;
  std::vector<CheckpointResult> checkpoints;

  // Growth between the last two checkpoints is certified only when the lower
  // end at the last checkpoint exceeds the upper end at the previous one.
  bool growing() const;
};

// Samples the trial's realization (seed derived from master seed and trial
// index) and counts negative eigenvalues of -d^2/dx^2 + V - W on [0, X_j]
// for every checkpoint: Dirichlet ends in whole-domain mode, the [n_D, n_N]
// pair in bracket mode.
TrialResult run_trial(const ExperimentConfig& cfg, std::size_t trial_index);

struct CheckpointSummary {
  double extent;
  double mean;
  double median;
  std::int64_t max;
};

struct GrowthReport {
  std::vector<TrialResult> trials;  // ordered by trial index
  std::vector<CheckpointSummary> summary;
  double growing_fraction;
  // (mean_j - mean_{j-1}) / log10(X_j / X_{j-1}) for consecutive checkpoints.
  std::vector<double> increment_per_decade;
};

// Runs all trials (concurrently when workers > 1) and aggregates them by
// index. Statistics are taken on n_hi; "saturating" means no certified
// growth over the last checkpoint step, a finite-X proxy for almost-sure
// finiteness.
GrowthReport run_experiment(const ExperimentConfig& cfg);

// CSV (trial, checkpoint_X, n_lo, n_hi, max_gap, k_count).
void write_trials_csv(std::ostream& os, const GrowthReport& report);
// CSV (checkpoint_X, mean, median, max, growing_fraction).
void write_summary_csv(std::ostream& os, const GrowthReport& report);

struct Estimate {
  double mean;
  double std_error;
};

// Monte Carlo mean of floor(sqrt(w) L / pi) over i.i.d. gaps. samples >= 1000.
Estimate estimate_expected_count(const randpot::GapDistribution& dist, double w, std::size_t samples,
                                 std::uint64_t seed);

}  // namespace anderson::mc
