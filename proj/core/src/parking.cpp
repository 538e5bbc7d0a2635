#include "parkphase/parking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace parkphase {

namespace {

void check_input(Place m, std::span<const Place> tries) {
  if (m < 1) throw std::invalid_argument("park: m must be positive");
  if (static_cast<std::int64_t>(tries.size()) >= m) {
    throw std::invalid_argument("park: table overflow, need |tries| < m (|tries|=" +
                                std::to_string(tries.size()) + ", m=" + std::to_string(m) + ")");
  }
  for (std::size_t i = 0; i < tries.size(); ++i) {
    if (tries[i] < 1 || tries[i] > m) {
      throw std::invalid_argument("park: try " + std::to_string(tries[i]) + " of car " +
                                  std::to_string(i + 1) + " outside 1.." + std::to_string(m));
    }
  }
}

// Circular "next free place" forest over 0-based places. find(p) is the first
// free place at or after p; an occupied place points to its successor.
class FreeList {
 public:
  explicit FreeList(Place m) : next_(static_cast<std::size_t>(m)) {
    std::iota(next_.begin(), next_.end(), Place{0});
  }

  Place find(Place p) {
    while (next_[idx(p)] != p) {
      next_[idx(p)] = next_[idx(next_[idx(p)])];
      p = next_[idx(p)];
    }
    return p;
  }

  void occupy(Place p) {
    const auto m = static_cast<Place>(next_.size());
    next_[idx(p)] = (p + 1) % m;
  }

 private:
  static std::size_t idx(Place p) { return static_cast<std::size_t>(p); }
  std::vector<Place> next_;
};

BlockDecomposition decompose(Place m, const std::vector<bool>& occupied,
                             const std::vector<std::int64_t>& car_at) {
  BlockDecomposition out;
  Place empty0 = -1;
  for (Place p = 0; p < m; ++p) {
    if (!occupied[static_cast<std::size_t>(p)]) {
      empty0 = p;
      break;
    }
  }
  if (empty0 < 0) throw std::logic_error("decompose: table has no empty place");

  Block current;
  bool in_block = false;
  for (Place step = 1; step <= m; ++step) {
    const Place p = (empty0 + step) % m;
    const auto i = static_cast<std::size_t>(p);
    if (occupied[i]) {
      if (!in_block) {
        current = Block{p + 1, 0, car_at[i]};
        in_block = true;
      }
      ++current.size;
      current.birth = std::min(current.birth, car_at[i]);
    } else if (in_block) {
      out.blocks.push_back(current);
      in_block = false;
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.start < b.start; });

  for (const auto& b : out.blocks) out.sorted_sizes.push_back(b.size);
  std::sort(out.sorted_sizes.begin(), out.sorted_sizes.end(), std::greater<>());

  auto by_birth = out.blocks;
  std::sort(by_birth.begin(), by_birth.end(),
            [](const Block& a, const Block& b) { return a.birth < b.birth; });
  for (const auto& b : by_birth) out.birth_order_sizes.push_back(b.size);
  return out;
}

}  // namespace

ParkingScheme park(Place m, std::span<const Place> tries) {
  check_input(m, tries);
  ParkingScheme s;
  s.m_ = m;
  s.tries_.assign(tries.begin(), tries.end());
  s.placements_.reserve(tries.size());
  s.occupied_.assign(static_cast<std::size_t>(m), false);
  s.car_at_.assign(static_cast<std::size_t>(m), 0);

  FreeList free(m);
  std::int64_t car = 0;
  for (const Place t : tries) {
    const Place p = free.find(t - 1);
    free.occupy(p);
    s.occupied_[static_cast<std::size_t>(p)] = true;
    s.car_at_[static_cast<std::size_t>(p)] = ++car;
    s.placements_.push_back(p + 1);
  }
  return s;
}

ParkingScheme park_naive(Place m, std::span<const Place> tries) {
  check_input(m, tries);
  ParkingScheme s;
  s.m_ = m;
  s.tries_.assign(tries.begin(), tries.end());
  s.occupied_.assign(static_cast<std::size_t>(m), false);
  s.car_at_.assign(static_cast<std::size_t>(m), 0);

  std::int64_t car = 0;
  for (const Place t : tries) {
    Place p = t;
    while (s.occupied_[static_cast<std::size_t>(p - 1)]) p = p % m + 1;
    s.occupied_[static_cast<std::size_t>(p - 1)] = true;
    s.car_at_[static_cast<std::size_t>(p - 1)] = ++car;
    s.placements_.push_back(p);
  }
  return s;
}

Profile profile(const ParkingScheme& scheme) {
  const Place m = scheme.m();
  // Difference array over 0..m; a wrapping probe range is split in two.
  std::vector<std::int64_t> diff(static_cast<std::size_t>(m) + 1, 0);
  const auto tries = scheme.tries();
  const auto places = scheme.placements();
  for (std::size_t i = 0; i < tries.size(); ++i) {
    const Place a = tries[i] - 1;
    const Place b = places[i] - 1;
    if (a <= b) {
      ++diff[static_cast<std::size_t>(a)];
      --diff[static_cast<std::size_t>(b + 1)];
    } else {
      ++diff[static_cast<std::size_t>(a)];
      --diff[static_cast<std::size_t>(m)];
      ++diff[0];
      --diff[static_cast<std::size_t>(b + 1)];
    }
  }
  Profile out;
  out.h.resize(static_cast<std::size_t>(m));
  std::int64_t run = 0;
  for (Place k = 0; k < m; ++k) {
    run += diff[static_cast<std::size_t>(k)];
    out.h[static_cast<std::size_t>(k)] = run;
  }
  return out;
}

Profile profile_naive(const ParkingScheme& scheme) {
  const Place m = scheme.m();
  Profile out;
  out.h.assign(static_cast<std::size_t>(m), 0);
  const auto tries = scheme.tries();
  const auto places = scheme.placements();
  for (std::size_t i = 0; i < tries.size(); ++i) {
    Place p = tries[i];
    for (;;) {
      ++out.h[static_cast<std::size_t>(p - 1)];
      if (p == places[i]) break;
      p = p % m + 1;
    }
  }
  return out;
}

BlockDecomposition blocks(const ParkingScheme& scheme) {
  const Place m = scheme.m();
  std::vector<bool> occupied(static_cast<std::size_t>(m));
  std::vector<std::int64_t> car_at(static_cast<std::size_t>(m));
  for (Place p = 1; p <= m; ++p) {
    occupied[static_cast<std::size_t>(p - 1)] = scheme.occupied(p);
    car_at[static_cast<std::size_t>(p - 1)] = scheme.car_at(p);
  }
  return decompose(m, occupied, car_at);
}

std::vector<Place> uniform_tries(Place m, std::int64_t n, Rng& rng) {
  if (m < 1) throw std::invalid_argument("uniform_tries: m must be positive");
  if (n < 0) throw std::invalid_argument("uniform_tries: n must be nonnegative");
  std::vector<Place> tries(static_cast<std::size_t>(n));
  for (auto& t : tries) t = 1 + static_cast<Place>(rng.uniform_below(static_cast<std::uint64_t>(m)));
  return tries;
}

ParkingScheme simulate_uniform(Place m, std::int64_t n, Rng& rng) {
  if (n >= m) {
    throw std::invalid_argument("simulate_uniform: need n < m (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  }
  const auto tries = uniform_tries(m, n, rng);
  return park(m, tries);
}

ParkingScheme simulate_uniform(Place m, std::int64_t n, std::uint64_t seed) {
  Rng rng(seed);
  return simulate_uniform(m, n, rng);
}

std::vector<BlockDecomposition> arrival_trajectory(Place m, std::span<const Place> tries,
                                                   std::span<const std::int64_t> checkpoints) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 0 || checkpoints[i] >= m ||
        checkpoints[i] > static_cast<std::int64_t>(tries.size())) {
      throw std::invalid_argument("arrival_trajectory: checkpoint " +
                                  std::to_string(checkpoints[i]) + " out of range");
    }
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw std::invalid_argument("arrival_trajectory: checkpoints must be increasing");
    }
  }
  std::vector<BlockDecomposition> out;
  if (checkpoints.empty()) return out;
  const auto used = static_cast<std::size_t>(checkpoints.back());
  check_input(m, tries.first(used));

  std::vector<bool> occupied(static_cast<std::size_t>(m), false);
  std::vector<std::int64_t> car_at(static_cast<std::size_t>(m), 0);
  FreeList free(m);
  std::size_t next_checkpoint = 0;
  for (std::int64_t car = 0;; ++car) {
    while (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == car) {
      out.push_back(decompose(m, occupied, car_at));
      ++next_checkpoint;
    }
    if (next_checkpoint == checkpoints.size()) break;
    const Place p = free.find(tries[static_cast<std::size_t>(car)] - 1);
    free.occupy(p);
    occupied[static_cast<std::size_t>(p)] = true;
    car_at[static_cast<std::size_t>(p)] = car + 1;
  }
  return out;
}

std::vector<Place> rotate_tries(Place m, std::span<const Place> tries, std::int64_t r) {
  std::vector<Place> out(tries.begin(), tries.end());
  const std::int64_t shift = ((r % m) + m) % m;
  for (auto& t : out) t = (t - 1 + shift) % m + 1;
  return out;
}

void to_json(nlohmann::json& j, const BlockDecomposition& decomposition) {
  j = nlohmann::json::array();
  for (const auto& b : decomposition.blocks) j.push_back({b.start, b.size});
}

void to_json(nlohmann::json& j, const ParkingScheme& scheme) {
  j = nlohmann::json{{"m", scheme.m()},
                     {"tries", std::vector<Place>(scheme.tries().begin(), scheme.tries().end())},
                     {"placements", std::vector<Place>(scheme.placements().begin(),
                                                       scheme.placements().end())},
                     {"blocks", blocks(scheme)}};
}

}  // namespace parkphase
