#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "anderson/cli.hpp"
#include "anderson/format.hpp"

namespace anderson::cli {

namespace {

std::pair<std::string, std::string> split_pair(const std::string& token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + token + "'");
  return {token.substr(0, eq), token.substr(eq + 1)};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

double parse_number(std::string_view key, std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || std::isnan(v)) {
    throw UsageError("parameter '" + std::string(key) + "': not a number: '" + s + "'");
  }
  return v;
}

CliConfig::CliConfig(std::string subcommand, std::map<std::string, std::string> params)
    : subcommand_(std::move(subcommand)), params_(std::move(params)) {}

CliConfig CliConfig::parse(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing subcommand");
  std::map<std::string, std::string> cmdline;
  for (std::size_t i = 1; i < args.size(); ++i) {
    auto [k, v] = split_pair(args[i]);
    cmdline[k] = v;
  }
  std::map<std::string, std::string> params;
  if (auto it = cmdline.find("config"); it != cmdline.end()) {
    std::ifstream file(it->second);
    if (!file) throw UsageError("cannot open config file '" + it->second + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
      ++line_no;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      try {
        auto [k, v] = split_pair(line);
        params[trim(k)] = trim(v);
      } catch (const UsageError& e) {
        throw UsageError(it->second + " line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    cmdline.erase(it);
  }
  for (auto& [k, v] : cmdline) params[k] = v;
  return CliConfig(args[0], std::move(params));
}

const std::string& CliConfig::raw(const std::string& key) {
  touched_.insert(key);
  auto it = params_.find(key);
  if (it == params_.end()) throw UsageError("missing required parameter '" + key + "'");
  return it->second;
}

void CliConfig::record(const std::string& key, std::string value) { resolved_[key] = std::move(value); }

std::string CliConfig::text(const std::string& key) {
  std::string v = raw(key);
  record(key, v);
  return v;
}

std::string CliConfig::text(const std::string& key, const std::string& fallback) {
  touched_.insert(key);
  if (!has(key)) {
    record(key, fallback);
    return fallback;
  }
  return text(key);
}

double CliConfig::number(const std::string& key) {
  const double v = parse_number(key, raw(key));
  record(key, fmt(v));
  return v;
}

double CliConfig::number(const std::string& key, double fallback) {
  touched_.insert(key);
  if (!has(key)) {
    record(key, fmt(fallback));
    return fallback;
  }
  return number(key);
}

std::int64_t CliConfig::integer(const std::string& key) {
  const double v = parse_number(key, raw(key));
  if (v != std::floor(v) || std::abs(v) > 9.0e15) {
    throw UsageError("parameter '" + key + "': expected an integer");
  }
  const auto i = static_cast<std::int64_t>(v);
  record(key, std::to_string(i));
  return i;
}

std::int64_t CliConfig::integer(const std::string& key, std::int64_t fallback) {
  touched_.insert(key);
  if (!has(key)) {
    record(key, std::to_string(fallback));
    return fallback;
  }
  return integer(key);
}

std::uint64_t CliConfig::seed(std::uint64_t fallback) {
  touched_.insert("seed");
  if (!has("seed")) {
    record("seed", std::to_string(fallback));
    return fallback;
  }
  const std::string& s = raw("seed");
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (s.empty() || s[0] == '-' || end != s.c_str() + s.size() || errno == ERANGE) {
    throw UsageError("parameter 'seed': expected an unsigned 64-bit integer");
  }
  record("seed", std::to_string(v));
  return v;
}

std::vector<double> CliConfig::numbers(const std::string& key) {
  const std::string& s = raw(key);
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(key, trim(item)));
  if (out.empty()) throw UsageError("parameter '" + key + "': empty list");
  std::string canon;
  for (std::size_t i = 0; i < out.size(); ++i) canon += (i ? "," : "") + fmt(out[i]);
  record(key, canon);
  return out;
}

std::vector<double> CliConfig::numbers(const std::string& key, const std::vector<double>& fallback) {
  touched_.insert(key);
  if (!has(key)) {
    std::string canon;
    for (std::size_t i = 0; i < fallback.size(); ++i) canon += (i ? "," : "") + fmt(fallback[i]);
    record(key, canon);
    return fallback;
  }
  return numbers(key);
}

void CliConfig::reject_unknown() const {
  for (const auto& [k, v] : params_) {
    if (!touched_.count(k)) throw UsageError("unknown parameter '" + k + "' for '" + subcommand_ + "'");
  }
}

void CliConfig::write_header(std::ostream& os) const {
  os << "# anderson " << kVersion << ' ' << subcommand_ << '\n';
  for (const auto& [k, v] : resolved_) os << "# " << k << '=' << v << '\n';
}

}  // namespace anderson::cli
