#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "anderson/error.hpp"
#include "anderson/theory.hpp"
#include "doctest.h"

using namespace anderson;
using namespace anderson::theory;
using randpot::GapDistribution;
using randpot::Perturbation;

namespace {

constexpr double kPi = std::numbers::pi;

// Midpoint rule on [a, b] with n cells.
template <class F>
double midpoint(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = 0;
  for (int i = 0; i < n; ++i) s += f(a + (i + 0.5) * h);
  return s * h;
}

Perturbation critical_weight(const GapDistribution& d, double factor) {
  const auto law = borderline(d);
  return Perturbation::log_power(factor * law.constant, law.exponent);
}

}  // namespace

TEST_CASE("borderline constants") {
  CHECK(borderline(GapDistribution::exponential(2)).constant == doctest::Approx(4 * kPi * kPi));
  CHECK(borderline(GapDistribution::exponential(2)).constant == doctest::Approx(39.4784176));
  CHECK(borderline(GapDistribution::stretched_exponential(1, 1)).constant == doctest::Approx(kPi * kPi));
  CHECK(borderline(GapDistribution::stretched_exponential(1, 1)).exponent == 2.0);
  CHECK(borderline(GapDistribution::geometric(0.5)).constant == doctest::Approx(4.741881).epsilon(1e-6));
  CHECK(borderline(GapDistribution::stretched_exponential(3, 0.5)).constant ==
        doctest::Approx(std::pow(6.0, 4.0) * kPi * kPi));
  CHECK(borderline(GapDistribution::stretched_exponential(3, 0.5)).exponent == 4.0);

  const auto pareto = borderline(GapDistribution::pareto(3));
  CHECK(pareto.form == LawForm::PowerLaw);
  CHECK(pareto.exponent == doctest::Approx(2.0 / 3.0));

  for (double eta : {0.3, 1.0, 2.7}) {
    CHECK(borderline(GapDistribution::exponential(2 * eta)).constant ==
          doctest::Approx(4 * borderline(GapDistribution::exponential(eta)).constant));
  }
  CHECK(bernoulli_constant(0.5) == doctest::Approx(kPi * kPi * std::log(2.0) * std::log(2.0)));
  CHECK_THROWS_AS(bernoulli_constant(1.0), DomainError);

  const auto cand = heavy_tail_exponents(3);
  CHECK(cand.substitution == doctest::Approx(2.0 / 3.0));
  CHECK(cand.alternative == doctest::Approx(1.0));
  CHECK_THROWS_AS(heavy_tail_exponents(1), DomainError);
}

TEST_CASE("approximating weights") {
  const auto W = Perturbation::log_power(5, 2);
  const auto up0 = approx_weights(W, 2.0, 0.0, 50, Side::Upper);
  const auto lo0 = approx_weights(W, 2.0, 0.0, 50, Side::Lower);
  for (std::size_t k = 0; k < 50; ++k) {
    CHECK(up0.values[k] == lo0.values[k]);
    CHECK(up0.values[k] == W(2.0 * (k + 1)));
  }
  const auto up = approx_weights(W, 2.0, 0.05, 50, Side::Upper);
  const auto lo = approx_weights(W, 2.0, 0.05, 50, Side::Lower);
  for (std::size_t k = 0; k < 50; ++k) CHECK(lo.values[k] <= up.values[k]);

  const auto far_up = approx_weights(W, 2.0, 0.05, 1000000, Side::Upper).values.back();
  const auto far_lo = approx_weights(W, 2.0, 0.05, 1000000, Side::Lower).values.back();
  const auto near_up = up.values[9];
  const auto near_lo = lo.values[9];
  CHECK(far_up / far_lo - 1 < near_up / near_lo - 1);
  CHECK(far_up / far_lo == doctest::Approx(1.0).epsilon(0.01));
  CHECK_THROWS_AS(approx_weights(W, 2.0, 1.0, 5, Side::Upper), DomainError);
}

TEST_CASE("bc_sum with constant weight diverges linearly") {
  const auto d = GapDistribution::exponential(1);
  const auto s = bc_sum(d, Perturbation::constant(2), 2.0, 0.05, 0, 1000, Side::Upper);
  const double term = std::exp(-kPi / std::sqrt(2.0));
  CHECK(s.summands.front() == doctest::Approx(term));
  CHECK(s.partial_sums.back() == doctest::Approx(1000 * term));
  CHECK(s.verdict == Verdict::Diverging);
}

TEST_CASE("bc_sum examples") {
  const auto d = GapDistribution::exponential(1);
  const auto below = bc_sum(d, Perturbation::log_power(0.25 * kPi * kPi, 2), 2.0, 0.05, 0, 100000, Side::Upper);
  CHECK(below.verdict == Verdict::Converging);
  CHECK(below.decay_exponent == doctest::Approx(2.0).epsilon(0.1));
  const auto above = bc_sum(d, Perturbation::log_power(4 * kPi * kPi, 2), 2.0, 0.05, 0, 100000, Side::Upper);
  CHECK(above.verdict == Verdict::Diverging);
  CHECK(above.decay_exponent == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("bc_sum verdicts bracket the borderline") {
  for (const auto& d : {GapDistribution::exponential(1), GapDistribution::exponential(2.5),
                        GapDistribution::geometric(0.5), GapDistribution::geometric(0.8)}) {
    CAPTURE(d.describe());
    const double a = d.mean() + 1.0;
    for (double eps : {0.01, 0.05}) {
      for (double offset : {0.0, 5.0}) {
        for (auto side : {Side::Upper, Side::Lower}) {
          CHECK(bc_sum(d, critical_weight(d, 0.5), a, eps, offset, 1000000, side).verdict == Verdict::Converging);
          CHECK(bc_sum(d, critical_weight(d, 2.0), a, eps, offset, 1000000, side).verdict == Verdict::Diverging);
        }
      }
    }
  }
}

TEST_CASE("bc_sum verdicts do not depend on the offset") {
  for (const auto& d : {GapDistribution::exponential(1), GapDistribution::stretched_exponential(1, 0.5),
                        GapDistribution::stretched_exponential(2, 1.5)}) {
    CAPTURE(d.describe());
    const double a = d.mean() + 1.0;
    for (double factor : {0.25, 4.0}) {
      const auto W = critical_weight(d, factor);
      const auto v0 = bc_sum(d, W, a, 0.05, 0, 1000000, Side::Upper).verdict;
      CHECK(v0 != Verdict::Undetermined);
      for (double offset : {1.0, 5.0}) CHECK(bc_sum(d, W, a, 0.05, offset, 1000000, Side::Upper).verdict == v0);
    }
  }
}

TEST_CASE("bc_sum pareto power law") {
  const auto d = GapDistribution::pareto(3);
  const double a = d.mean() + 1.0;
  CHECK(bc_sum(d, Perturbation::power_law(1, 1.0), a, 0.05, 0, 100000, Side::Upper).verdict ==
        Verdict::Converging);
  CHECK(bc_sum(d, Perturbation::power_law(1, 0.4), a, 0.05, 0, 100000, Side::Upper).verdict ==
        Verdict::Diverging);
  const auto mid = bc_sum(d, Perturbation::power_law(1, 0.8), a, 0.05, 0, 100000, Side::Upper);
  CHECK(mid.decay_exponent == doctest::Approx(1.2).epsilon(0.02));
}

TEST_CASE("bc_sum errors and csv") {
  const auto d = GapDistribution::exponential(1);
  CHECK_THROWS_AS(bc_sum(d, Perturbation::constant(0), 2, 0.05, 0, 10, Side::Upper), DomainError);
  CHECK_THROWS_AS(bc_sum(d, Perturbation::constant(1), 2, 0.0, 0, 10, Side::Upper), DomainError);
  CHECK_THROWS_AS(bc_sum(d, Perturbation::constant(1), 2, 0.05, -1, 10, Side::Upper), DomainError);
  std::ostringstream os;
  write_bc_sum_csv(os, bc_sum(d, Perturbation::constant(kPi * kPi), 2, 0.05, 0, 2, Side::Upper));
  CHECK(os.str().rfind("k,summand,partial_sum\n1,", 0) == 0);
}

TEST_CASE("expectation bounds closed forms") {
  const auto e1 = GapDistribution::exponential(1);
  for (double w : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double r = std::sqrt(w);
    const auto b = expectation_bounds(e1, w);
    CHECK(b.lower == doctest::Approx(r / kPi * std::exp(-kPi / r)));
    CHECK(b.upper == doctest::Approx((r / kPi + 1) * std::exp(-kPi / r)));
  }
  CHECK(expectation_bounds(GapDistribution::pareto(3), 1.0).lower == doctest::Approx(1 / (2 * std::pow(kPi, 3))));
  CHECK(expectation_bounds(e1, 1e6).lower > 100);
  CHECK_THROWS_AS(expectation_bounds(e1, 0), DomainError);
}

TEST_CASE("expectation bounds are ordered and monotone") {
  for (const auto& d : {GapDistribution::exponential(0.7), GapDistribution::stretched_exponential(1.2, 0.6),
                        GapDistribution::pareto(2.5, 0.5), GapDistribution::geometric(0.7)}) {
    CAPTURE(d.describe());
    double prev_lo = 0, prev_hi = 0;
    for (double w = 0.05; w < 100; w *= 1.3) {
      const auto b = expectation_bounds(d, w);
      CHECK(b.lower <= b.upper);
      CHECK(b.lower >= prev_lo);
      CHECK(b.upper >= prev_hi * (1 - 1e-12));
      prev_lo = b.lower;
      prev_hi = b.upper;
    }
  }
}

TEST_CASE("tail integrals") {
  const auto st = GapDistribution::stretched_exponential(1.3, 0.7);
  for (double a : {0.0, 0.4, 2.0, 9.0}) {
    // (1/alpha) (alpha/eta)^(1/alpha) Gamma(1/alpha, eta a^alpha / alpha)
    const double al = 0.7, eta = 1.3;
    const double gamma_form =
        std::pow(al / eta, 1 / al) / al * boost::math::tgamma(1 / al, eta * std::pow(a, al) / al);
    CHECK(tail_integral(st, a) == doctest::Approx(gamma_form).epsilon(1e-9));
  }
  const auto geo = GapDistribution::geometric(0.6);
  for (double a : {0.0, 0.3, 2.0, 2.5}) {
    const double direct = midpoint([&](double x) { return geo.tail(x); }, a, 80.0, 800000);
    CHECK(tail_integral(geo, a) == doctest::Approx(direct).epsilon(1e-5));
  }
  const auto par = GapDistribution::pareto(2.5, 2.0);
  for (double a : {0.5, 2.0, 7.0}) {
    const double upper = 1e4;
    const double direct = midpoint([&](double x) { return par.tail(x); }, a, upper, 2000000) +
                          2.0 / 1.5 * std::pow(2.0 / upper, 1.5);
    CHECK(tail_integral(par, a) == doctest::Approx(direct).epsilon(1e-5));
  }
  CHECK_THROWS_AS(tail_integral(geo, -1), DomainError);
}

TEST_CASE("expectation csv") {
  std::ostringstream os;
  const std::vector<double> ws{1.0};
  write_expectation_csv(os, GapDistribution::exponential(1), ws);
  CHECK(os.str().rfind("w,lower,upper\n1,", 0) == 0);
}
