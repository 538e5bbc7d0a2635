#include "parkphase/coupling.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkphase {

std::int64_t CenteredCounts::c_at(std::int64_t k) const {
  // k = q m + r with 0 <= r < m.
  std::int64_t q = k / m;
  std::int64_t r = k % m;
  if (r < 0) {
    r += m;
    --q;
  }
  return c[static_cast<std::size_t>(r)] - q * empty_count();
}

std::int64_t CenteredCounts::y_at(std::int64_t k) const {
  return y[static_cast<std::size_t>(wrap(k) - 1)];
}

CenteredCounts centered_counts(Place m, std::span<const Place> tries) {
  if (m < 1) throw std::invalid_argument("centered_counts: m must be positive");
  CenteredCounts cc;
  cc.m = m;
  cc.n = static_cast<std::int64_t>(tries.size());
  cc.y.assign(static_cast<std::size_t>(m), 0);
  for (const Place t : tries) {
    if (t < 1 || t > m) throw std::invalid_argument("centered_counts: try outside 1..m");
    ++cc.y[static_cast<std::size_t>(t - 1)];
  }
  cc.scaled_a.assign(static_cast<std::size_t>(m) + 1, 0);
  cc.c.assign(static_cast<std::size_t>(m) + 1, 0);
  std::int64_t cumulative = 0;
  std::int64_t best = 0;
  for (Place k = 1; k <= m; ++k) {
    cumulative += cc.y[static_cast<std::size_t>(k - 1)];
    const std::int64_t a = m * cumulative - k * cc.n;
    cc.scaled_a[static_cast<std::size_t>(k)] = a;
    cc.c[static_cast<std::size_t>(k)] = cumulative - k;
    if (k == 1 || a < best) {
      best = a;
      cc.v = k;
    }
  }
  return cc;
}

CenteredCounts centered_counts(const ParkingScheme& scheme) {
  return centered_counts(scheme.m(), scheme.tries());
}

Profile profile_from_counts(const CenteredCounts& cc) {
  Profile out;
  out.h.assign(static_cast<std::size_t>(cc.m), 0);
  const std::int64_t v = cc.v;
  const std::int64_t base = cc.c_at(v);
  const std::int64_t left = cc.c_at(v - 1);
  std::int64_t gamma = 0;  // running max of (C_{V-1} - C_{V+i-1})_+
  for (std::int64_t k = 1; k < cc.m; ++k) {
    gamma = std::max(gamma, left - cc.c_at(v + k - 1));
    out.h[static_cast<std::size_t>(cc.wrap(v + k) - 1)] = cc.c_at(v + k) - base + gamma;
  }
  return out;
}

Profile profile_by_recurrence(const CenteredCounts& cc) {
  Profile out;
  out.h.assign(static_cast<std::size_t>(cc.m), 0);
  std::int64_t h = 0;
  for (std::int64_t k = 1; k < cc.m; ++k) {
    h = cc.y_at(cc.v + k) + std::max<std::int64_t>(h - 1, 0);
    out.h[static_cast<std::size_t>(cc.wrap(cc.v + k) - 1)] = h;
  }
  return out;
}

std::vector<Place> empty_places_as_records(const CenteredCounts& cc) {
  std::vector<Place> out;
  std::int64_t running_min = 0;
  for (std::int64_t k = 0; k < cc.m; ++k) {
    const std::int64_t value = cc.c_at(cc.v + k);
    if (k == 0 || value < running_min) {
      out.push_back(cc.wrap(cc.v + k));
      running_min = value;
    }
  }
  return out;
}

}  // namespace parkphase
