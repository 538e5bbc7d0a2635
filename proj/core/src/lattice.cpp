#include "parkphase/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parkphase/parking.hpp"

namespace parkphase {

namespace {

std::size_t ix(std::int64_t i) { return static_cast<std::size_t>(i); }

constexpr std::int64_t kExcursionScale = std::int64_t{1} << 20;

}  // namespace

LatticePath::LatticePath(std::int64_t resolution, std::vector<std::int64_t> values,
                         double tick_size, bool is_circular)
    : n(resolution), ticks(std::move(values)), tick(tick_size), circular(is_circular) {
  if (n < 1) throw std::invalid_argument("LatticePath: resolution must be positive");
  if (static_cast<std::int64_t>(ticks.size()) != n + 1) {
    throw std::invalid_argument("LatticePath: need N + 1 values");
  }
  if (!(tick > 0.0) || !std::isfinite(tick)) {
    throw std::invalid_argument("LatticePath: tick must be positive and finite");
  }
}

double LatticePath::max_value() const {
  return static_cast<double>(*std::max_element(ticks.begin(), ticks.end())) * tick;
}

std::int64_t drift_ticks(const LatticePath& path, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("drift_ticks: lambda must be >= 0");
  return std::llround(lambda / (static_cast<double>(path.n) * path.tick));
}

LatticePath psi_ticks(const LatticePath& path, std::int64_t drift) {
  if (!path.circular) throw std::invalid_argument("psi: path is not circular");
  const auto n = path.n;
  const auto& v = path.ticks;
  const std::int64_t shift = drift * n - (v[ix(n)] - v[0]);
  if (shift < 0) {
    throw std::invalid_argument("psi: drift " + std::to_string(drift) +
                                " too small for the path's period increment");
  }
  std::vector<std::int64_t> g(ix(n + 1));
  for (std::int64_t j = 0; j <= n; ++j) g[ix(j)] = v[ix(j)] - drift * j;

  // suffix[j] = min g[j..N]; the earlier period contributes shift + g(s), s > t.
  std::vector<std::int64_t> suffix(ix(n + 1));
  suffix[ix(n)] = g[ix(n)];
  for (auto j = n - 1; j >= 0; --j) suffix[ix(j)] = std::min(g[ix(j)], suffix[ix(j + 1)]);

  std::vector<std::int64_t> out(ix(n + 1));
  std::int64_t prefix = g[0];
  for (std::int64_t t = 0; t <= n; ++t) {
    prefix = std::min(prefix, g[ix(t)]);
    auto low = prefix;
    if (t < n) low = std::min(low, shift + suffix[ix(t + 1)]);
    out[ix(t)] = g[ix(t)] - low;
  }
  return LatticePath(n, std::move(out), path.tick, true);
}

LatticePath psi(const LatticePath& path, double lambda) {
  return psi_ticks(path, drift_ticks(path, lambda));
}

LatticePath lattice_from_counts(const CenteredCounts& cc) {
  const double tick = cc.n > 0 ? 1.0 / std::sqrt(static_cast<double>(cc.n)) : 1.0;
  return LatticePath(cc.m, cc.c, tick, true);
}

LatticePath sample_excursion(std::int64_t resolution, Rng& rng) {
  if (resolution < 2) throw std::invalid_argument("sample_excursion: need N >= 2");
  const auto scheme = simulate_uniform(resolution, resolution - 1, rng);
  const auto h = profile(scheme);
  Place v = 1;
  while (scheme.occupied(v)) ++v;
  std::vector<std::int64_t> ticks(ix(resolution + 1));
  for (std::int64_t j = 0; j <= resolution; ++j) {
    const auto place = (v - 1 + j) % resolution;
    ticks[ix(j)] = h.h[ix(place)] * kExcursionScale;
  }
  const double tick =
      1.0 / (std::sqrt(static_cast<double>(resolution)) * static_cast<double>(kExcursionScale));
  return LatticePath(resolution, std::move(ticks), tick, true);
}

LatticePath sample_excursion(std::int64_t resolution, std::uint64_t seed) {
  Rng rng(seed);
  return sample_excursion(resolution, rng);
}

std::vector<GridInterval> zero_gaps(const LatticePath& image) {
  std::vector<std::int64_t> zeros;
  for (std::int64_t j = 0; j < image.n; ++j) {
    const auto t = image.ticks[ix(j)];
    if (t < 0) throw std::invalid_argument("zero_gaps: path takes negative values");
    if (t == 0) zeros.push_back(j);
  }
  if (zeros.empty()) throw std::invalid_argument("zero_gaps: path has no zero in one period");
  std::vector<GridInterval> out;
  out.reserve(zeros.size());
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) out.push_back({zeros[i], zeros[i + 1]});
  out.push_back({zeros.back(), zeros.front() + image.n});
  return out;
}

ExcursionSet excursion_widths(const LatticePath& path, double lambda) {
  const auto image = psi(path, lambda);
  ExcursionSet out;
  out.n = path.n;
  for (const auto& gap : zero_gaps(image)) {
    if (gap.length() >= 2) out.intervals.push_back(gap);
  }
  std::stable_sort(out.intervals.begin(), out.intervals.end(),
                   [](const auto& x, const auto& y) { return x.length() > y.length(); });
  for (const auto& gap : out.intervals) {
    out.widths.push_back(static_cast<double>(gap.length()) / static_cast<double>(path.n));
  }
  return out;
}

namespace {

std::size_t gap_index(const std::vector<GridInterval>& gaps, double t) {
  // gaps are ordered by a; the last one wraps past N.
  auto it = std::upper_bound(gaps.begin(), gaps.end(), t,
                             [](double value, const GridInterval& g) {
                               return value < static_cast<double>(g.a);
                             });
  if (it == gaps.begin()) return gaps.size() - 1;
  return static_cast<std::size_t>(it - gaps.begin()) - 1;
}

void check_unit(double u, const char* what) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1)");
  }
}

SampledBlock block_from_gaps(const std::vector<GridInterval>& gaps, std::int64_t n, double rho1) {
  const auto& gap = gaps[gap_index(gaps, rho1 * static_cast<double>(n))];
  const auto nd = static_cast<double>(n);
  return SampledBlock{static_cast<double>(gap.length()) / nd, static_cast<double>(gap.a) / nd,
                      static_cast<double>(gap.b) / nd, gap};
}

}  // namespace

SampledBlock sample_R1(const LatticePath& path, double lambda, double rho1) {
  check_unit(rho1, "sample_R1: rho1");
  return block_from_gaps(zero_gaps(psi(path, lambda)), path.n, rho1);
}

SubordinatorSample subordinator_path(const LatticePath& path, double rho1,
                                     std::span<const double> lambda_grid) {
  check_unit(rho1, "subordinator_path: rho1");
  for (std::size_t i = 1; i < lambda_grid.size(); ++i) {
    if (!(lambda_grid[i] > lambda_grid[i - 1])) {
      throw std::invalid_argument("subordinator_path: lambda grid must be strictly increasing");
    }
  }
  SubordinatorSample out;
  for (double lambda : lambda_grid) {
    const auto block = sample_R1(path, lambda, rho1);
    out.lambda.push_back(lambda);
    out.sigma.push_back(-1.0 + 1.0 / block.width);
  }
  return out;
}

LatticePath restrict_rescaled(const LatticePath& path, std::int64_t a, std::int64_t b) {
  if (b <= a || b - a > path.n) throw std::invalid_argument("restrict_rescaled: need 0 < b - a <= N");
  const auto len = b - a;
  std::vector<std::int64_t> values(ix(len + 1));
  for (std::int64_t j = 0; j <= len; ++j) {
    values[ix(j)] = path.ticks[ix(((a + j) % path.n + path.n) % path.n)];
  }
  const double x = static_cast<double>(len) / static_cast<double>(path.n);
  return LatticePath(len, std::move(values), path.tick / std::sqrt(x), true);
}

LatticePath rotate(const LatticePath& path, std::int64_t s) {
  if (path.ticks.front() != path.ticks.back()) {
    throw std::invalid_argument("rotate: path must satisfy v(0) = v(N)");
  }
  const auto n = path.n;
  std::vector<std::int64_t> values(ix(n + 1));
  for (std::int64_t j = 0; j <= n; ++j) values[ix(j)] = path.ticks[ix(((j + s) % n + n) % n)];
  return LatticePath(n, std::move(values), path.tick, path.circular);
}

Decomposition decompose(const LatticePath& path, double lambda, double rho1, double w) {
  check_unit(rho1, "decompose: rho1");
  check_unit(w, "decompose: w");
  const auto image = psi(path, lambda);
  const auto block = block_from_gaps(zero_gaps(image), path.n, rho1);
  const auto& gap = block.interval;
  if (gap.length() == path.n) {
    throw std::domain_error("decompose: sampled excursion covers the whole period");
  }
  Decomposition out;
  out.r1 = block.width;
  out.q = restrict_rescaled(image, gap.a, gap.b);
  const auto rest = restrict_rescaled(image, gap.b, gap.a + path.n);
  out.r_shifted = rotate(rest, static_cast<std::int64_t>(std::floor(w * static_cast<double>(rest.n))));
  return out;
}

std::vector<double> size_biased_sums(const LatticePath& path, double lambda,
                                     std::span<const double> rho, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("size_biased_sums: k must be >= 1");
  const auto gaps = zero_gaps(psi(path, lambda));
  if (static_cast<std::int64_t>(gaps.size()) < k) {
    throw std::runtime_error("size_biased_sums: only " + std::to_string(gaps.size()) +
                             " excursions, need " + std::to_string(k));
  }
  std::vector<char> hit(gaps.size(), 0);
  std::vector<double> out;
  std::int64_t covered = 0;
  for (double u : rho) {
    check_unit(u, "size_biased_sums: rho");
    const auto i = gap_index(gaps, u * static_cast<double>(path.n));
    if (hit[i]) continue;
    hit[i] = 1;
    covered += gaps[i].length();
    out.push_back(static_cast<double>(covered) / static_cast<double>(path.n));
    if (static_cast<std::int64_t>(out.size()) == k) return out;
  }
  throw std::runtime_error("size_biased_sums: rho sequence exhausted before " +
                           std::to_string(k) + " distinct excursions");
}

}  // namespace parkphase
