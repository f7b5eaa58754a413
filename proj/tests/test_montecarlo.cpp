#include <cmath>
#include <numbers>
#include <sstream>

#include "anderson/error.hpp"
#include "anderson/montecarlo.hpp"
#include "anderson/theory.hpp"
#include "anderson/well.hpp"
#include "doctest.h"

using namespace anderson;
using namespace anderson::mc;
using randpot::GapDistribution;
using randpot::Perturbation;

namespace {

constexpr double kPi = std::numbers::pi;

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.W = Perturbation::log_power(4 * kPi * kPi, 2);
  cfg.checkpoints = {100, 1000, 5000};
  cfg.trials = 12;
  cfg.master_seed = 2024;
  cfg.workers = 1;
  return cfg;
}

bool same(const TrialResult& a, const TrialResult& b) {
  if (a.trial != b.trial || a.checkpoints.size() != b.checkpoints.size()) return false;
  for (std::size_t j = 0; j < a.checkpoints.size(); ++j) {
    const auto& x = a.checkpoints[j];
    const auto& y = b.checkpoints[j];
    if (x.extent != y.extent || x.cert.n_lo != y.cert.n_lo || x.cert.n_hi != y.cert.n_hi || x.bumps != y.bumps ||
        x.max_gap != y.max_gap) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("zero perturbation gives no negative modes") {
  auto cfg = small_config();
  cfg.W = Perturbation::constant(0);
  for (auto mode : {CountMode::WholeDomain, CountMode::BracketDN}) {
    cfg.mode = mode;
    const auto t = run_trial(cfg, 3);
    for (const auto& c : t.checkpoints) {
      CHECK(c.cert.n_lo == 0);
      CHECK(c.cert.n_hi == 0);
    }
  }
}

TEST_CASE("run_trial is deterministic") {
  const auto cfg = small_config();
  CHECK(same(run_trial(cfg, 5), run_trial(cfg, 5)));
  CHECK_FALSE(same(run_trial(cfg, 5), run_trial(cfg, 6)));
}

TEST_CASE("hard walls reduce the count to the floor formula") {
  ExperimentConfig cfg;
  cfg.height = 1e8;
  cfg.W = Perturbation::constant(0.9);
  cfg.checkpoints = {2000};
  cfg.workers = 1;
  for (std::size_t trial = 0; trial < 10; ++trial) {
    const auto t = run_trial(cfg, trial);
    const auto real = randpot::sample_realization(std::get<GapDistribution>(cfg.source), cfg.half_width,
                                                  cfg.height, 2000, derive_seed(cfg.master_seed, trial));
    std::vector<std::pair<double, double>> wells;
    for (std::size_t k = 0; k < real.gaps.size(); ++k) {
      const double start = real.centers[k] - real.half_width - real.gaps[k];
      if (start < 2000) wells.emplace_back(0.9, std::min(real.gaps[k], 2000 - start));
    }
    const auto expected = spectral::decoupled_count(wells);
    const auto& c = t.checkpoints.back().cert;
    CHECK(c.n_lo == c.n_hi);
    CHECK(std::abs(c.n_lo - expected) <= 1);
  }
}

TEST_CASE("checkpoint monotonicity and bracket containment") {
  auto cfg = small_config();
  const auto whole = run_experiment(cfg);
  cfg.mode = CountMode::BracketDN;
  const auto dn = run_experiment(cfg);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const auto& w = whole.trials[i].checkpoints;
    const auto& b = dn.trials[i].checkpoints;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j > 0) {
        CHECK(w[j].cert.n_lo >= w[j - 1].cert.n_lo);
        CHECK(w[j].cert.n_hi >= w[j - 1].cert.n_hi);
      }
      CHECK(b[j].cert.n_lo <= w[j].cert.n_lo);
      CHECK(w[j].cert.n_hi <= b[j].cert.n_hi);
      CHECK(b[j].bumps == w[j].bumps);
    }
  }
}

TEST_CASE("single trial report") {
  auto cfg = small_config();
  cfg.trials = 1;
  const auto report = run_experiment(cfg);
  const auto t = run_trial(cfg, 0);
  REQUIRE(report.trials.size() == 1);
  CHECK(same(report.trials[0], t));
  for (std::size_t j = 0; j < cfg.checkpoints.size(); ++j) {
    CHECK(report.summary[j].mean == t.checkpoints[j].cert.n_hi);
    CHECK(report.summary[j].median == t.checkpoints[j].cert.n_hi);
    CHECK(report.summary[j].max == t.checkpoints[j].cert.n_hi);
  }
  CHECK(report.growing_fraction == (t.growing() ? 1.0 : 0.0));
}

TEST_CASE("worker count does not change the report") {
  auto cfg = small_config();
  const auto serial = run_experiment(cfg);
  cfg.workers = 3;
  const auto parallel = run_experiment(cfg);
  std::ostringstream a, b;
  write_trials_csv(a, serial);
  write_summary_csv(a, serial);
  write_trials_csv(b, parallel);
  write_summary_csv(b, parallel);
  CHECK(a.str() == b.str());
}

TEST_CASE("growing fraction increases with the amplitude") {
  auto cfg = small_config();
  cfg.trials = 20;
  double prev = -1;
  for (double m : {0.25, 1.0, 4.0}) {
    cfg.W = Perturbation::log_power(m * kPi * kPi, 2);
    const double f = run_experiment(cfg).growing_fraction;
    CHECK(f >= prev);
    prev = f;
  }
  CHECK(prev > 0.5);
}

TEST_CASE("bernoulli source") {
  ExperimentConfig cfg;
  cfg.source = BernoulliLattice{0.5};
  cfg.W = Perturbation::log_power(4 * theory::bernoulli_constant(0.5), 2);
  cfg.checkpoints = {100, 1000};
  cfg.trials = 4;
  cfg.workers = 1;
  const auto report = run_experiment(cfg);
  for (const auto& t : report.trials) {
    CHECK(t.checkpoints[0].cert.n_hi <= t.checkpoints[1].cert.n_hi);
    CHECK(t.checkpoints[1].bumps > 300);
  }
}

TEST_CASE("csv layout") {
  auto cfg = small_config();
  cfg.trials = 2;
  const auto report = run_experiment(cfg);
  std::ostringstream trials, summary;
  write_trials_csv(trials, report);
  write_summary_csv(summary, report);
  std::istringstream t(trials.str()), s(summary.str());
  std::string line;
  std::getline(t, line);
  CHECK(line == "trial,checkpoint_X,n_lo,n_hi,max_gap,k_count");
  std::getline(s, line);
  CHECK(line == "checkpoint_X,mean,median,max,growing_fraction");
  int rows = 0;
  while (std::getline(t, line)) ++rows;
  CHECK(rows == 6);
  CHECK(report.increment_per_decade.size() == 2);
}

TEST_CASE("invalid configurations") {
  auto cfg = small_config();
  cfg.trials = 0;
  CHECK_THROWS_AS(run_experiment(cfg), DomainError);
  cfg = small_config();
  cfg.checkpoints = {100, 50};
  CHECK_THROWS_AS(run_experiment(cfg), DomainError);
  cfg = small_config();
  cfg.source = BernoulliLattice{1.5};
  CHECK_THROWS_AS(run_trial(cfg, 0), DomainError);
  cfg = small_config();
  cfg.max_gaps = 5;
  CHECK_THROWS_AS(run_experiment(cfg), CoverageError);
}

TEST_CASE("expected count estimate") {
  const auto d = GapDistribution::exponential(1);
  CHECK(estimate_expected_count(d, 1e-4, 10000, 1).mean == 0.0);

  const auto est = estimate_expected_count(d, 1.0, 100000, 7);
  const auto b = theory::expectation_bounds(d, 1.0);
  CHECK(est.mean >= b.lower - 3 * est.std_error);
  CHECK(est.mean <= b.upper + 3 * est.std_error);

  const auto e1 = estimate_expected_count(d, 2.0, 200000, 3);
  const auto e2 = estimate_expected_count(d, 2.0, 400000, 4);
  CHECK(e1.std_error / e2.std_error == doctest::Approx(std::sqrt(2.0)).epsilon(0.05));

  CHECK_THROWS_AS(estimate_expected_count(d, 1.0, 999, 1), DomainError);
  CHECK(estimate_expected_count(d, 1.0, 5000, 9).mean == estimate_expected_count(d, 1.0, 5000, 9).mean);
}
