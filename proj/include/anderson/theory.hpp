#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anderson/distribution.hpp"
#include "anderson/perturbation.hpp"

namespace anderson::theory {

enum class LawForm { LogPower, PowerLaw };

std::string_view to_string(LawForm f) noexcept;

// Critical decay of W separating almost-surely finite from infinite
// negative spectrum:
//   LogPower: W(x) ~ constant / ln^exponent(x)
//   PowerLaw: W(k) ~ constant * k^(-exponent)
struct BorderlineLaw {
  randpot::GapDistribution dist;
  double constant;
  double exponent;
  LawForm form;
};

// Exponential(eta): eta^2 pi^2 / ln^2 x.
// StretchedExponential(eta, alpha): (eta/alpha)^(2/alpha) pi^2 / ln^(2/alpha) x.
// Geometric(q): the exponential law with eta = ln(1/q).
// Pareto(alpha): k^(-2/alpha). Only the exponent matters here, since a
// power-law summand at the critical exponent diverges like the harmonic
// series for every amplitude; `constant` is reported as 1.
BorderlineLaw borderline(const randpot::GapDistribution& dist);

// Borderline constant for the Bernoulli lattice, in terms of the
// probability that a cell is empty (pi^2 ln^2(1/q_empty)).
double bernoulli_constant(double empty_probability);

// The two exponents found in the literature for the Pareto borderline:
// 2/alpha (direct substitution into the Borel-Cantelli sum) and
// 2/(alpha - 1). The first is the one this library uses.
struct HeavyTailCandidates {
  double substitution;  // 2 / alpha
  double alternative;   // 2 / (alpha - 1)
};
HeavyTailCandidates heavy_tail_exponents(double alpha);

enum class Side { Upper, Lower };

// w+_k = W((1 - eps) a k) and w-_k = W((1 + eps) a k) for k = 1..K, where a
// is the mean bump spacing E[L] + 2l.
struct ApproxWeights {
  double epsilon;
  double alpha_mean;
  Side side;
  std::vector<double> values;
};

ApproxWeights approx_weights(const randpot::Perturbation& W, double alpha_mean, double epsilon, std::size_t count,
                             Side side);

enum class Verdict { Converging, Diverging, Undetermined };

std::string_view to_string(Verdict v) noexcept;

struct BorelCantelliSum {
  std::vector<double> summands;      // index k-1
  std::vector<double> partial_sums;  // S_1..S_K
  double decay_exponent;             // s in summand ~ k^(-s), fitted on [K/10, K]
  Verdict verdict;
};

// S_K = sum_{k<=K} P(L > max(0, pi / sqrt(w+-_k) - offset)). The verdict
// compares the least-squares log-log decay exponent of the summand over the
// last decade against 1 +- margin.
BorelCantelliSum bc_sum(const randpot::GapDistribution& dist, const randpot::Perturbation& W, double alpha_mean,
                        double epsilon, double offset, std::size_t count, Side side, double margin = 0.1);

// CSV rows (k, summand, partial_sum).
void write_bc_sum_csv(std::ostream& os, const BorelCantelliSum& sum);

struct ExpectationBounds {
  double lower;
  double upper;
};

// For a single decoupled well of depth w and random length L:
//   sqrt(w)/pi * I  <=  E floor(sqrt(w) L / pi)  <=  sqrt(w)/pi * I + F(pi/sqrt(w)),
// with I the integral of the tail F over [pi/sqrt(w), inf). I is closed form
// except for the stretched exponential, which uses adaptive quadrature.
ExpectationBounds expectation_bounds(const randpot::GapDistribution& dist, double w);

// CSV rows (w, lower, upper).
void write_expectation_csv(std::ostream& os, const randpot::GapDistribution& dist, std::span<const double> energies);

// Integral of the tail over [a, inf).
double tail_integral(const randpot::GapDistribution& dist, double a);

}  // namespace anderson::theory
