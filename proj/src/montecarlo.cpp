#include "anderson/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "anderson/error.hpp"
#include "anderson/format.hpp"

namespace anderson::mc {

void ExperimentConfig::validate() const {
  if (trials < 1) throw DomainError("experiment: trials must be >= 1");
  if (checkpoints.empty()) throw DomainError("experiment: no checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (!(std::isfinite(checkpoints[i]) && checkpoints[i] > 0)) throw DomainError("experiment: checkpoints must be > 0");
    if (i > 0 && !(checkpoints[i] > checkpoints[i - 1])) {
      throw DomainError("experiment: checkpoints must be increasing");
    }
  }
  if (std::holds_alternative<BernoulliLattice>(source)) {
    const double p = std::get<BernoulliLattice>(source).p;
    if (!(p > 0 && p < 1)) throw DomainError("experiment: bernoulli p must lie in (0,1)");
    if (checkpoints.front() < 1) throw DomainError("experiment: bernoulli checkpoints must be >= 1");
  } else if (!(std::isfinite(half_width) && half_width > 0)) {
    throw DomainError("experiment: l must be > 0");
  }
  if (!(height > 0)) throw DomainError("experiment: h must be > 0");
}

bool TrialResult::growing() const {
  if (checkpoints.size() < 2) return false;
  const auto& last = checkpoints.back().cert;
  const auto& prev = checkpoints[checkpoints.size() - 2].cert;
  return last.n_lo > prev.n_hi;
}

namespace {

randpot::PotentialRealization sample(const ExperimentConfig& cfg, std::uint64_t seed) {
  const double extent = cfg.checkpoints.back();
  if (const auto* lattice = std::get_if<BernoulliLattice>(&cfg.source)) {
    return randpot::bernoulli_lattice(lattice->p, extent, seed, cfg.height, cfg.max_gaps);
  }
  const auto& dist = std::get<randpot::GapDistribution>(cfg.source);
  return randpot::sample_realization(dist, cfg.half_width, cfg.height, extent, seed, cfg.max_gaps);
}

double longest_well_before(const randpot::PotentialRealization& real, double x) {
  double longest = 0.0;
  for (std::size_t i = 0; i < real.gaps.size(); ++i) {
    // Well i lies in [x_i - l - L_i, x_i - l].
    const double start = real.centers[i] - real.half_width - real.gaps[i];
    if (start >= x) break;
    longest = std::max(longest, real.gaps[i]);
  }
  return longest;
}

}  // namespace

TrialResult run_trial(const ExperimentConfig& cfg, std::size_t trial_index) {
  cfg.validate();
  const auto real = sample(cfg, derive_seed(cfg.master_seed, trial_index));
  TrialResult out{trial_index, {}};
  out.checkpoints.reserve(cfg.checkpoints.size());

  std::vector<spectral::CountCertificate> certs;
  if (cfg.mode == CountMode::WholeDomain) {
    certs = spectral::count_with_bracketed_W(real, cfg.W, spectral::Boundary::Dirichlet, cfg.checkpoints, cfg.refine);
  } else {
    for (double x : cfg.checkpoints) {
      certs.push_back(spectral::bracket_counts_DN(randpot::truncate(real, x), cfg.W, cfg.refine).certificate());
    }
  }
  for (std::size_t j = 0; j < cfg.checkpoints.size(); ++j) {
    const double x = cfg.checkpoints[j];
    out.checkpoints.push_back({x, std::move(certs[j]), real.bumps_up_to(x), longest_well_before(real, x)});
  }
  return out;
}

GrowthReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  GrowthReport report;
  report.trials.resize(cfg.trials);

  unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.trials));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < cfg.trials; i = next++) {
      try {
        report.trials[i] = run_trial(cfg, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.trials;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t growing = 0;
  for (const auto& t : report.trials) growing += t.growing() ? 1 : 0;
  report.growing_fraction = static_cast<double>(growing) / static_cast<double>(cfg.trials);

  for (std::size_t j = 0; j < cfg.checkpoints.size(); ++j) {
    std::vector<std::int64_t> counts;
    counts.reserve(cfg.trials);
    for (const auto& t : report.trials) counts.push_back(t.checkpoints[j].cert.n_hi);
    std::sort(counts.begin(), counts.end());
    double sum = 0;
    for (auto c : counts) sum += static_cast<double>(c);
    const std::size_t n = counts.size();
    const double median = n % 2 == 1 ? static_cast<double>(counts[n / 2])
                                     : 0.5 * static_cast<double>(counts[n / 2 - 1] + counts[n / 2]);
    report.summary.push_back({cfg.checkpoints[j], sum / static_cast<double>(n), median, counts.back()});
  }
  for (std::size_t j = 1; j < report.summary.size(); ++j) {
    const auto& a = report.summary[j - 1];
    const auto& b = report.summary[j];
    report.increment_per_decade.push_back((b.mean - a.mean) / std::log10(b.extent / a.extent));
  }
  return report;
}

void write_trials_csv(std::ostream& os, const GrowthReport& report) {
  os << "trial,checkpoint_X,n_lo,n_hi,max_gap,k_count\n";
  for (const auto& t : report.trials) {
    for (const auto& c : t.checkpoints) {
      os << t.trial << ',' << fmt(c.extent) << ',' << c.cert.n_lo << ',' << c.cert.n_hi << ',' << fmt(c.max_gap)
         << ',' << c.bumps << '\n';
    }
  }
}

void write_summary_csv(std::ostream& os, const GrowthReport& report) {
  os << "checkpoint_X,mean,median,max,growing_fraction\n";
  for (const auto& s : report.summary) {
    os << fmt(s.extent) << ',' << fmt(s.mean) << ',' << fmt(s.median) << ',' << s.max << ','
       << fmt(report.growing_fraction) << '\n';
  }
}

Estimate estimate_expected_count(const randpot::GapDistribution& dist, double w, std::size_t samples,
                                 std::uint64_t seed) {
  if (samples < 1000) throw DomainError("estimate_expected_count: samples must be >= 1000");
  if (!(w >= 0) || !std::isfinite(w)) throw DomainError("estimate_expected_count: w must be >= 0");
  Rng rng(seed);
  const double scale = std::sqrt(w) / std::numbers::pi;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double levels = std::floor(scale * dist.sample(rng));
    sum += levels;
    sum_sq += levels * levels;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

}  // namespace anderson::mc
