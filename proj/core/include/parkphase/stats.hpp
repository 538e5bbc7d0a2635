#pragma once

/**
 * @file stats.hpp
 * @brief Goodness-of-fit statistics and self-describing reports.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace parkphase {

/// sup_x |F_n(x) - cdf(x)|, evaluated on both sides of every step. The samples
/// need not be sorted. Throws std::invalid_argument on an empty sample.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

/// sup_x |F_n(x) - G_m(x)| for two samples.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

struct ChiSquare {
  double statistic = 0.0;
  std::int64_t dof = 0;
  double p_value = 1.0;
};

/// Pearson statistic of counts against cell probabilities; cells with expected
/// count below `min_expected` are pooled into their neighbour.
ChiSquare chi_square(std::span<const std::int64_t> observed, std::span<const double> probability,
                     double min_expected = 5.0);

double normal_cdf(double x);

double mean(std::span<const double> xs);
double correlation(std::span<const double> x, std::span<const double> y);
double median(std::vector<double> xs);

/// FNV-1a of a canonical config string, as 16 hex digits.
std::string config_hash(const std::string& canonical);

struct GofReport {
  std::string name;
  std::string statistic;  ///< "KS", "chi2", "abs", ...
  std::int64_t sample_size = 0;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::string config_hash;

  /// pass = value <= tolerance
  static GofReport make(std::string name, std::string statistic, std::int64_t sample_size,
                        double value, double tolerance, std::uint64_t seed,
                        std::string config_hash);
};

void to_json(nlohmann::json& j, const GofReport& report);

}  // namespace parkphase
