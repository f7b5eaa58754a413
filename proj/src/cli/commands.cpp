#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "anderson/bracket.hpp"
#include "anderson/cli.hpp"
#include "anderson/error.hpp"
#include "anderson/format.hpp"
#include "anderson/montecarlo.hpp"
#include "anderson/realization.hpp"
#include "anderson/theory.hpp"
#include "anderson/well.hpp"

namespace anderson::cli {

namespace {

constexpr const char* kUsageText =
    "usage: anderson <subcommand> key=value...\n"
    "  generate    dist=exp|stretched|pareto|geometric|bernoulli l= h= X= seed= [out=]\n"
    "  count       file= W=logpower|power|constant [C= s= A= beta= w=] [bc=] [refine_max=] [out=]\n"
    "  well        [L=25,50,100,200] [h=1] [l=1] [bc=dirichlet|neumann] [out=]\n"
    "  borderline  dist=... [multipliers=0.25,4] [grid=1e3,1e4,1e5] [trials=100] [seed=] [workers=]\n"
    "              [l=0.5] [h=1] [mode=whole|bracket] [reading=empty|occupied] [prefix=borderline]\n"
    "  expect      dist=... [w=0.5,1,2] [samples=100000] [seed=] [out=]\n"
    "  any subcommand also accepts config=<file> with key=value lines\n";

using randpot::GapDistribution;
using randpot::Perturbation;

GapDistribution parse_distribution(CliConfig& cfg, const std::string& dist) {
  if (dist == "exp") return GapDistribution::exponential(cfg.number("eta"));
  if (dist == "stretched") return GapDistribution::stretched_exponential(cfg.number("eta"), cfg.number("alpha"));
  if (dist == "pareto") return GapDistribution::pareto(cfg.number("alpha"), cfg.number("xm", 1.0));
  if (dist == "geometric") return GapDistribution::geometric(cfg.number("q"));
  throw UsageError("unknown dist '" + dist + "'");
}

Perturbation parse_perturbation(CliConfig& cfg) {
  const std::string kind = cfg.text("W");
  if (kind == "logpower") return Perturbation::log_power(cfg.number("C"), cfg.number("s", 2.0));
  if (kind == "power") return Perturbation::power_law(cfg.number("A"), cfg.number("beta"));
  if (kind == "constant") return Perturbation::constant(cfg.number("w"));
  throw UsageError("unknown W '" + kind + "'");
}

spectral::Boundary parse_boundary(CliConfig& cfg) {
  const std::string bc = cfg.text("bc", "dirichlet");
  if (bc == "dirichlet") return spectral::Boundary::Dirichlet;
  if (bc == "neumann") return spectral::Boundary::Neumann;
  throw UsageError("unknown bc '" + bc + "'");
}

std::size_t positive_size(CliConfig& cfg, const std::string& key, std::int64_t fallback) {
  const std::int64_t v = cfg.integer(key, fallback);
  if (v < 1) throw UsageError("parameter '" + key + "' must be >= 1");
  return static_cast<std::size_t>(v);
}

// Writes the header and the buffered body to out= (or the given stream).
void emit(CliConfig& cfg, std::ostream& fallback, const std::string& body) {
  const std::string path = cfg.text("out", "-");
  cfg.reject_unknown();
  if (path == "-") {
    cfg.write_header(fallback);
    fallback << body;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  cfg.write_header(file);
  file << body;
}

}  // namespace

int cmd_generate(CliConfig& cfg, std::ostream& out) {
  const std::string dist = cfg.text("dist");
  const double h = cfg.number("h");
  const double X = cfg.number("X");
  const std::uint64_t seed = cfg.seed(1);
  randpot::PotentialRealization real;
  if (dist == "bernoulli") {
    real = randpot::bernoulli_lattice(cfg.number("p"), X, seed, h);
  } else {
    const auto d = parse_distribution(cfg, dist);
    real = randpot::sample_realization(d, cfg.number("l"), h, X, seed);
  }
  std::ostringstream body;
  randpot::write_realization(body, real);
  emit(cfg, out, body.str());
  return kOk;
}

int cmd_count(CliConfig& cfg, std::ostream& out) {
  const std::string path = cfg.text("file");
  const auto W = parse_perturbation(cfg);
  const auto bc = parse_boundary(cfg);
  const auto refine_max = positive_size(cfg, "refine_max", 64);
  spectral::RefinePolicy policy;
  policy.max = std::max(policy.start, refine_max);
  cfg.text("out", "-");
  cfg.reject_unknown();

  std::ifstream file(path);
  if (!file) throw DataError("cannot open realization file '" + path + "'");
  const auto real = randpot::read_realization(file);

  const auto whole = spectral::count_with_bracketed_W(real, W, bc, policy);
  const auto dn = spectral::bracket_counts_DN(real, W, policy).certificate();
  if (bc == spectral::Boundary::Dirichlet && !(dn.n_lo <= whole.n_hi && whole.n_lo <= dn.n_hi)) {
    throw NumericalFailure("count: Dirichlet-Neumann bracket does not contain the whole-domain count");
  }
  std::ostringstream body;
  spectral::write_certificate_csv_header(body);
  spectral::write_certificate_csv_row(body, whole);
  spectral::write_certificate_csv_row(body, dn);
  emit(cfg, out, body.str());
  return kOk;
}

int cmd_well(CliConfig& cfg, std::ostream& out) {
  const auto lengths = cfg.numbers("L", {25, 50, 100, 200});
  const double h = cfg.number("h", 1.0);
  const double l = cfg.number("l", 1.0);
  const auto bc = parse_boundary(cfg);
  std::ostringstream body;
  body << "L,root_mu,asymptotic_mu,abs_error,error_L3\n";
  for (double L : lengths) {
    const spectral::WellGeometry geom{L, l, h, bc};
    const double root = spectral::well_ground_state(geom);
    const double asym = spectral::well_ground_asymptotic(geom);
    const double err = std::abs(std::sqrt(root) - std::sqrt(asym));
    body << fmt(L) << ',' << fmt(root) << ',' << fmt(asym) << ',' << fmt(err) << ',' << fmt(err * L * L * L) << '\n';
  }
  emit(cfg, out, body.str());
  return kOk;
}

int cmd_borderline(CliConfig& cfg, std::ostream& out) {
  mc::ExperimentConfig exp;
  const std::string dist = cfg.text("dist");
  double constant = 0.0;
  double exponent = 2.0;
  bool power_law = false;
  if (dist == "bernoulli") {
    const double p = cfg.number("p");
    if (!(p > 0 && p < 1)) throw UsageError("parameter 'p' must lie in (0,1)");
    const std::string reading = cfg.text("reading", "empty");
    if (reading == "empty") {
      constant = theory::bernoulli_constant(1.0 - p);
    } else if (reading == "occupied") {
      constant = theory::bernoulli_constant(p);
    } else {
      throw UsageError("unknown reading '" + reading + "'");
    }
    exp.source = mc::BernoulliLattice{p};
  } else {
    const auto d = parse_distribution(cfg, dist);
    const auto law = theory::borderline(d);
    constant = law.constant;
    exponent = law.exponent;
    power_law = law.form == theory::LawForm::PowerLaw;
    exp.source = d;
    exp.half_width = cfg.number("l", 0.5);
  }
  const auto multipliers = cfg.numbers("multipliers", {0.25, 4});
  exp.checkpoints = cfg.numbers("grid", {1e3, 1e4, 1e5});
  exp.trials = positive_size(cfg, "trials", 100);
  exp.master_seed = cfg.seed(1);
  exp.height = cfg.number("h", 1.0);
  exp.workers = static_cast<unsigned>(
      positive_size(cfg, "workers", std::max(1u, std::thread::hardware_concurrency())));
  const std::string mode = cfg.text("mode", "whole");
  if (mode == "whole") {
    exp.mode = mc::CountMode::WholeDomain;
  } else if (mode == "bracket") {
    exp.mode = mc::CountMode::BracketDN;
  } else {
    throw UsageError("unknown mode '" + mode + "'");
  }
  exp.refine.max = std::max(exp.refine.start, positive_size(cfg, "refine_max", 64));
  const std::string prefix = cfg.text("prefix", "borderline");
  cfg.reject_unknown();

  std::ostringstream listing;
  listing << "multiplier,amplitude,growing_fraction,summary_file,trials_file\n";
  for (double m : multipliers) {
    if (!(m >= 0)) throw UsageError("multipliers must be >= 0");
    const double amplitude = m * constant;
    exp.W = power_law ? Perturbation::power_law(amplitude, exponent) : Perturbation::log_power(amplitude, exponent);
    const auto report = mc::run_experiment(exp);

    const std::string tag = prefix + "_m" + fmt(m);
    const std::string summary_path = tag + "_summary.csv";
    const std::string trials_path = tag + "_trials.csv";
    std::ofstream summary(summary_path);
    std::ofstream trials(trials_path);
    if (!summary || !trials) throw UsageError("cannot write '" + tag + "_*.csv'");
    cfg.write_header(summary);
    summary << "# multiplier=" << fmt(m) << " W=" << exp.W.describe() << '\n';
    mc::write_summary_csv(summary, report);
    cfg.write_header(trials);
    trials << "# multiplier=" << fmt(m) << " W=" << exp.W.describe() << '\n';
    mc::write_trials_csv(trials, report);
    listing << fmt(m) << ',' << fmt(amplitude) << ',' << fmt(report.growing_fraction) << ',' << summary_path << ','
            << trials_path << '\n';
  }
  cfg.write_header(out);
  out << listing.str();
  return kOk;
}

int cmd_expect(CliConfig& cfg, std::ostream& out) {
  const auto d = parse_distribution(cfg, cfg.text("dist"));
  const auto energies = cfg.numbers("w", {0.5, 1, 2});
  const std::int64_t samples = cfg.integer("samples", 100000);
  if (samples < 1000) throw UsageError("parameter 'samples' must be >= 1000");
  const std::uint64_t seed = cfg.seed(1);
  std::ostringstream body;
  body << "w,estimate,stderr,lower,upper\n";
  for (std::size_t i = 0; i < energies.size(); ++i) {
    const double w = energies[i];
    const auto est = mc::estimate_expected_count(d, w, static_cast<std::size_t>(samples), derive_seed(seed, i));
    const auto bounds = theory::expectation_bounds(d, w);
    body << fmt(w) << ',' << fmt(est.mean) << ',' << fmt(est.std_error) << ',' << fmt(bounds.lower) << ','
         << fmt(bounds.upper) << '\n';
  }
  emit(cfg, out, body.str());
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    err << kUsageText;
    return args.empty() ? kUsage : kOk;
  }
  if (args[0] == "--version") {
    out << "anderson " << kVersion << '\n';
    return kOk;
  }
  try {
    auto cfg = CliConfig::parse(args);
    const std::string& sub = cfg.subcommand();
    if (sub == "generate") return cmd_generate(cfg, out);
    if (sub == "count") return cmd_count(cfg, out);
    if (sub == "well") return cmd_well(cfg, out);
    if (sub == "borderline") return cmd_borderline(cfg, out);
    if (sub == "expect") return cmd_expect(cfg, out);
    err << "error: unknown subcommand '" << sub << "'\n" << kUsageText;
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const CoverageError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace anderson::cli
