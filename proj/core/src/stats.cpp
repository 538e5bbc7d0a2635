#include "parkphase/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

namespace parkphase {

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::vector<double> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const auto n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const auto nx = static_cast<double>(x.size());
  const auto ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= t) ++i;
    while (j < y.size() && y[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

ChiSquare chi_square(std::span<const std::int64_t> observed, std::span<const double> probability,
                     double min_expected) {
  if (observed.size() != probability.size() || observed.empty()) {
    throw std::invalid_argument("chi_square: observed and probability sizes differ or are empty");
  }
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::int64_t{0}));
  std::vector<double> obs, expct;
  double o = 0.0, e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o += static_cast<double>(observed[i]);
    e += probability[i] * total;
    if (e >= min_expected) {
      obs.push_back(o);
      expct.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (expct.empty()) {
      obs.push_back(o);
      expct.push_back(e);
    } else {
      obs.back() += o;
      expct.back() += e;
    }
  }
  ChiSquare out;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (expct[i] > 0.0) out.statistic += (obs[i] - expct[i]) * (obs[i] - expct[i]) / expct[i];
  }
  out.dof = static_cast<std::int64_t>(obs.size()) - 1;
  if (out.dof >= 1) {
    const boost::math::chi_squared dist(static_cast<double>(out.dof));
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  }
  return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("correlation: need two samples of equal size >= 2");
  }
  const double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median: empty sample");
  const auto mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
  if (xs.size() % 2 == 1) return xs[mid];
  const double hi = xs[mid];
  const double lo = *std::max_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

std::string config_hash(const std::string& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GofReport GofReport::make(std::string name, std::string statistic, std::int64_t sample_size,
                          double value, double tolerance, std::uint64_t seed,
                          std::string config_hash) {
  GofReport r;
  r.name = std::move(name);
  r.statistic = std::move(statistic);
  r.sample_size = sample_size;
  r.value = value;
  r.tolerance = tolerance;
  r.pass = value <= tolerance;
  r.seed = seed;
  r.config_hash = std::move(config_hash);
  return r;
}

void to_json(nlohmann::json& j, const GofReport& r) {
  j = {{"name", r.name},           {"statistic", r.statistic}, {"sample_size", r.sample_size},
       {"value", r.value},         {"tolerance", r.tolerance}, {"pass", r.pass},
       {"seed", r.seed},           {"config_hash", r.config_hash}};
}

}  // namespace parkphase
