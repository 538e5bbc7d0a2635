#pragma once

/**
 * @file harness.hpp
 * @brief Named suites behind the command-line front end.
 *
 * A suite takes a validated configuration, produces a table of rows and a list
 * of goodness-of-fit reports, and passes iff every report does. Parameters are
 * kept as strings so the canonical form (and its hash) covers exactly what the
 * user could have typed, defaults included.
 */

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "parkphase/stats.hpp"

namespace parkphase::harness {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum class Format { csv, json };

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t replicas = 0;  ///< 0 selects the suite default
  std::map<std::string, std::string> params;

  /// "suite=<name>;seed=<s>;replicas=<r>;k1=v1;..." with keys sorted.
  [[nodiscard]] std::string canonical() const;
  [[nodiscard]] std::string hash() const { return config_hash(canonical()); }
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct SuiteResult {
  Table table;
  std::vector<GofReport> reports;

  [[nodiscard]] bool pass() const;
  [[nodiscard]] int exit_code() const { return pass() ? 0 : 1; }
};

/// Names of the known suites, in display order.
std::vector<std::string> suite_names();

/// Suite parameters with their defaults. Throws std::invalid_argument for an unknown suite.
std::map<std::string, std::string> suite_defaults(const std::string& suite);

/// Fills defaults, checks every parameter, and returns the completed config.
/// Throws std::invalid_argument before any computation on a bad config.
SuiteConfig validate(SuiteConfig config);

/// Runs a validated config. Side files (e.g. dump-counts) are written here and
/// raise std::runtime_error naming the path when they cannot be opened.
SuiteResult run_suite(const SuiteConfig& config);

/// RFC 4180 CSV with one header row; every row ends with a config_hash column.
void write_csv(std::ostream& os, const Table& table, const std::string& hash);

/// One JSON object: config, rows, reports, pass flag.
void write_json(std::ostream& os, const SuiteConfig& config, const SuiteResult& result);

/// Writes to `path`, or to stdout when `path` is empty or "-".
void emit(const SuiteConfig& config, const SuiteResult& result, Format format, const std::string& path);

/// Shortest round-trip decimal form; identical on every run.
std::string format_double(double x);

/// Quotes a CSV field when it holds a comma, quote, or line break.
std::string csv_field(const std::string& s);

}  // namespace parkphase::harness
