#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anderson::cli {

// Bad command line or configuration (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kNumerical = 4 };

// key=value parameters from an optional config file (config=path) and the
// command line, the latter taking precedence. Every lookup records the
// resolved value so the output header can echo the full configuration.
class CliConfig {
 public:
  CliConfig(std::string subcommand, std::map<std::string, std::string> params);

  // argv[0] is the subcommand.
  static CliConfig parse(const std::vector<std::string>& args);

  const std::string& subcommand() const noexcept { return subcommand_; }
  bool has(const std::string& key) const { return params_.count(key) > 0; }

  std::string text(const std::string& key);
  std::string text(const std::string& key, const std::string& fallback);
  double number(const std::string& key);
  double number(const std::string& key, double fallback);
  std::int64_t integer(const std::string& key);
  std::int64_t integer(const std::string& key, std::int64_t fallback);
  std::uint64_t seed(std::uint64_t fallback);
  std::vector<double> numbers(const std::string& key);
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback);

  // Throws UsageError naming the first parameter no lookup has touched.
  void reject_unknown() const;

  // "# key=value" lines, one per resolved key, preceded by the version line.
  void write_header(std::ostream& os) const;

 private:
  const std::string& raw(const std::string& key);
  void record(const std::string& key, std::string value);

  std::string subcommand_;
  std::map<std::string, std::string> params_;
  std::map<std::string, std::string> resolved_;
  std::set<std::string> touched_;
};

double parse_number(std::string_view key, std::string_view text);

// Runs one subcommand and maps library errors to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_generate(CliConfig& cfg, std::ostream& out);
int cmd_count(CliConfig& cfg, std::ostream& out);
int cmd_well(CliConfig& cfg, std::ostream& out);
int cmd_borderline(CliConfig& cfg, std::ostream& out);
int cmd_expect(CliConfig& cfg, std::ostream& out);

}  // namespace anderson::cli
