#include "parkphase/coalescent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parkphase/coupling.hpp"
#include "parkphase/exact.hpp"

namespace parkphase {

namespace {

std::size_t ix(std::int64_t i) { return static_cast<std::size_t>(i); }

MergeEvent make_event(std::int64_t a, std::int64_t b) {
  return MergeEvent{a + b + 1, std::min(a, b), std::max(a, b)};
}

std::vector<std::int64_t> expand(const std::vector<std::int64_t>& histogram, MassConvention mass) {
  std::vector<std::int64_t> out;
  const std::int64_t bump = mass == MassConvention::with_empty ? 1 : 0;
  for (auto size = static_cast<std::int64_t>(histogram.size()) - 1; size >= 0; --size) {
    out.insert(out.end(), ix(histogram[ix(size)]), size + bump);
  }
  return out;
}

void apply(std::vector<std::int64_t>& histogram, const MergeEvent& e) {
  --histogram[ix(e.low)];
  --histogram[ix(e.high)];
  ++histogram[ix(e.merged)];
}

struct Dsu {
  explicit Dsu(std::size_t count) : up(count), size(count, 1) {
    std::iota(up.begin(), up.end(), std::size_t{0});
  }
  std::size_t find(std::size_t v) {
    while (up[v] != v) {
      up[v] = up[up[v]];
      v = up[v];
    }
    return v;
  }
  std::vector<std::size_t> up;
  std::vector<std::int64_t> size;
};

}  // namespace

CoalescentChain::CoalescentChain(std::int64_t m, std::vector<MergeEvent> events)
    : m_(m), events_(std::move(events)) {
  if (m < 1) throw std::invalid_argument("CoalescentChain: m must be positive");
  if (static_cast<std::int64_t>(events_.size()) != m - 1) {
    throw std::invalid_argument("CoalescentChain: need m - 1 events");
  }
  std::vector<std::int64_t> histogram(ix(m), 0);
  histogram[0] = m;
  for (const auto& e : events_) {
    if (e.low < 0 || e.low > e.high || e.merged != e.low + e.high + 1 || e.merged >= m) {
      throw std::invalid_argument("CoalescentChain: malformed merge event");
    }
    if (histogram[ix(e.low)] < 1 + (e.low == e.high ? 1 : 0) || histogram[ix(e.high)] < 1) {
      throw std::invalid_argument("CoalescentChain: event merges absent fragments");
    }
    apply(histogram, e);
  }
}

std::vector<std::int64_t> CoalescentChain::state(std::int64_t k, MassConvention mass) const {
  if (k < 0 || k >= m_) throw std::out_of_range("CoalescentChain::state: k outside 0..m-1");
  std::vector<std::int64_t> histogram(ix(m_), 0);
  histogram[0] = m_;
  for (std::int64_t i = 0; i < k; ++i) apply(histogram, events_[ix(i)]);
  return expand(histogram, mass);
}

std::vector<std::vector<std::int64_t>> CoalescentChain::states(MassConvention mass) const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(length());
  std::vector<std::int64_t> histogram(ix(m_), 0);
  histogram[0] = m_;
  out.push_back(expand(histogram, mass));
  for (const auto& e : events_) {
    apply(histogram, e);
    out.push_back(expand(histogram, mass));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> CoalescentChain::fragmentation_states(
    MassConvention mass) const {
  auto out = states(mass);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Vertex counts of every subtree of the original tree.
std::vector<std::int64_t> subtree_sizes(const LabeledTree& tree) {
  const auto k = tree.k();
  const auto children = tree.children();
  std::vector<std::int64_t> order{k};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto c : children[ix(order[i] - 1)]) order.push_back(c);
  }
  std::vector<std::int64_t> size(ix(k + 1), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != k) size[ix(tree.parent(*it))] += size[ix(*it)];
  }
  return size;
}

}  // namespace

CoalescentChain fragmentation_chain_deterministic(const LabeledTree& tree) {
  const auto m = tree.k();
  auto size = subtree_sizes(tree);
  std::vector<char> top(ix(m + 1), 0);
  top[ix(m)] = 1;
  std::vector<MergeEvent> events(ix(m - 1));
  for (std::int64_t j = m - 1; j >= 1; --j) {
    const auto s = size[ix(j)];
    auto u = tree.parent(j);
    while (!top[ix(u)]) {
      size[ix(u)] -= s;
      u = tree.parent(u);
    }
    const auto before = size[ix(u)] - 1;
    size[ix(u)] -= s;
    top[ix(j)] = 1;
    events[ix(j - 1)] = make_event(s - 1, before - s);
  }
  return CoalescentChain(m, std::move(events));
}

std::vector<PavlovForest> fragmentation_forests(const LabeledTree& tree) {
  const auto m = tree.k();
  std::vector<char> top(ix(m + 1), 0);
  top[ix(m)] = 1;
  std::vector<std::int64_t> order{m};
  std::vector<PavlovForest> out(ix(m));

  const auto snapshot = [&](std::int64_t k) {
    std::vector<std::int64_t> label(ix(m + 1), 0);
    for (std::size_t i = 0; i < order.size(); ++i) label[ix(order[i])] = static_cast<std::int64_t>(i) + 1;
    std::vector<ForestParent> parent;
    for (std::int64_t v = 1; v <= k; ++v) {
      const auto p = tree.parent(v);
      parent.push_back(top[ix(p)] ? ForestParent{true, label[ix(p)]} : ForestParent{false, p});
    }
    out[ix(k)] = PavlovForest(static_cast<std::int64_t>(order.size()), std::move(parent));
  };

  snapshot(m - 1);
  for (std::int64_t j = m - 1; j >= 1; --j) {
    auto u = tree.parent(j);
    while (!top[ix(u)]) u = tree.parent(u);
    top[ix(j)] = 1;
    order.insert(std::find(order.begin(), order.end(), u) + 1, j);
    snapshot(j - 1);
  }
  return out;
}

LabeledTree sample_shape(std::int64_t m, Rng& rng) { return random_labeled_tree(m, rng); }

RandomFragmentation fragmentation_chain_random(const LabeledTree& shape, std::uint64_t seed) {
  const auto m = shape.k();
  Rng rng(seed);
  // deletion[i-1] is the child end of the i-th deleted edge.
  std::vector<std::int64_t> deletion(ix(m - 1));
  std::iota(deletion.begin(), deletion.end(), std::int64_t{1});
  for (std::size_t i = deletion.size(); i > 1; --i) {
    std::swap(deletion[i - 1], deletion[rng.uniform_below(i)]);
  }

  Dsu dsu(ix(m + 1));
  std::vector<MergeEvent> events;
  events.reserve(ix(m - 1));
  for (auto it = deletion.rbegin(); it != deletion.rend(); ++it) {
    const auto a = dsu.find(ix(*it));
    const auto b = dsu.find(ix(shape.parent(*it)));
    events.push_back(make_event(dsu.size[a] - 1, dsu.size[b] - 1));
    dsu.up[a] = b;
    dsu.size[b] += dsu.size[a];
  }

  std::vector<std::int64_t> relabel(ix(m + 1), 0);
  relabel[ix(m)] = m;
  for (std::size_t i = 0; i < deletion.size(); ++i) {
    relabel[ix(deletion[i])] = m - 1 - static_cast<std::int64_t>(i);
  }
  std::vector<std::int64_t> parent(ix(m - 1), 0);
  for (std::int64_t v = 1; v < m; ++v) parent[ix(relabel[ix(v)] - 1)] = relabel[ix(shape.parent(v))];
  return RandomFragmentation{CoalescentChain(m, std::move(events)), LabeledTree(m, std::move(parent))};
}

CoalescentChain coalescent_from_parking(Place m, std::span<const Place> tries) {
  if (static_cast<std::int64_t>(tries.size()) != m - 1) {
    throw std::invalid_argument("coalescent_from_parking: need m - 1 tries");
  }
  const auto scheme = park(m, tries);
  if (!scheme.confined()) {
    throw std::invalid_argument("coalescent_from_parking: final scheme is not confined");
  }
  // Run lengths kept at both ends of each run; places 0 and m+1 are sentinels.
  std::vector<std::int64_t> run(ix(m + 2), 0);
  std::vector<char> occupied(ix(m + 2), 0);
  std::vector<MergeEvent> events;
  events.reserve(ix(m - 1));
  for (auto p : scheme.placements()) {
    const auto left = occupied[ix(p - 1)] ? run[ix(p - 1)] : 0;
    const auto right = occupied[ix(p + 1)] ? run[ix(p + 1)] : 0;
    occupied[ix(p)] = 1;
    const auto merged = left + right + 1;
    run[ix(p - left)] = merged;
    run[ix(p + right)] = merged;
    events.push_back(make_event(left, right));
  }
  return CoalescentChain(m, std::move(events));
}

TransitionEstimate transition_frequency_check(Place m, std::int64_t l, std::int64_t x,
                                              std::int64_t y, std::int64_t accepted,
                                              std::uint64_t seed) {
  if (accepted < 1) throw std::invalid_argument("transition_frequency_check: accepted must be >= 1");
  TransitionEstimate out;
  out.target = merge_probability(x, y, l, m).to_double();

  Rng rng(seed);
  const std::int64_t cap = std::max<std::int64_t>(1000, accepted * 1000);
  std::vector<Place> empties;
  std::vector<std::int64_t> gap;
  std::vector<std::size_t> with_x, with_y;
  while (out.accepted < accepted) {
    if (out.trials >= cap) {
      throw std::runtime_error("transition_frequency_check: acceptance rate below 1e-3 (" +
                               std::to_string(out.accepted) + " of " +
                               std::to_string(out.trials) + ")");
    }
    ++out.trials;
    const auto scheme = simulate_uniform(m, m - l, rng);
    empties.clear();
    for (Place p = 1; p <= m; ++p) {
      if (!scheme.occupied(p)) empties.push_back(p);
    }
    // gap[i]: cars between the previous empty place and empties[i].
    const auto count = empties.size();
    gap.assign(count, 0);
    with_x.clear();
    with_y.clear();
    for (std::size_t i = 0; i < count; ++i) {
      gap[i] = (i == 0) ? empties[0] - 1 + (m - empties[count - 1]) : empties[i] - empties[i - 1] - 1;
      if (gap[i] == x) with_x.push_back(i);
      if (gap[i] == y) with_y.push_back(i);
    }
    std::size_t first = 0, second = 0;
    if (x != y) {
      if (with_x.empty() || with_y.empty()) continue;
      first = with_x[rng.uniform_below(with_x.size())];
      second = with_y[rng.uniform_below(with_y.size())];
    } else {
      if (with_x.size() < 2) continue;
      const auto a = rng.uniform_below(with_x.size());
      auto b = rng.uniform_below(with_x.size() - 1);
      if (b >= a) ++b;
      first = with_x[a];
      second = with_x[b];
    }
    ++out.accepted;

    // The next car fills the first empty place at or after its try; the
    // gaps on either side of that place merge.
    const auto t = rng.uniform_int(1, m);
    auto q = static_cast<std::size_t>(std::lower_bound(empties.begin(), empties.end(), t) -
                                      empties.begin());
    if (q == count) q = 0;
    const auto r = (q + 1) % count;
    if ((q == first && r == second) || (q == second && r == first)) ++out.merges;
  }
  out.frequency = static_cast<double>(out.merges) / static_cast<double>(out.accepted);
  out.standard_error =
      std::sqrt(out.frequency * (1.0 - out.frequency) / static_cast<double>(out.accepted));
  return out;
}

std::vector<PointProcessSnapshot> point_process_extraction(const ParkingScheme& scheme,
                                                           std::span<const double> lambda_grid) {
  const auto m = scheme.m();
  const double root_m = std::sqrt(static_cast<double>(m));
  std::vector<PointProcessSnapshot> out;
  for (double lambda : lambda_grid) {
    if (!(lambda >= 0.0) || lambda * root_m > static_cast<double>(m)) {
      throw std::domain_error("point_process_extraction: need 0 <= lambda sqrt(m) <= m");
    }
    const auto n = static_cast<std::int64_t>(std::floor(static_cast<double>(m) - lambda * root_m));
    if (n >= m) throw std::domain_error("point_process_extraction: n(lambda) = m leaves no empty place");
    if (n > scheme.n()) {
      throw std::invalid_argument("point_process_extraction: scheme holds " +
                                  std::to_string(scheme.n()) + " cars, lambda needs " +
                                  std::to_string(n));
    }
    const auto prefix = scheme.tries().first(ix(n));
    const auto state = park(m, prefix);
    const auto v = centered_counts(m, prefix).v;

    std::vector<Place> empties;
    for (Place p = 1; p <= m; ++p) {
      if (!state.occupied(p)) empties.push_back(p);
    }
    PointProcessSnapshot snap{lambda, n, {}};
    const auto md = static_cast<double>(m);
    for (std::size_t i = 0; i < empties.size(); ++i) {
      const auto e = empties[i];
      const auto next = (i + 1 < empties.size()) ? empties[i + 1] : empties[0] + m;
      snap.atoms.push_back({static_cast<double>(((e - v) % m + m) % m) / md,
                            static_cast<double>(next - e) / md});
    }
    std::sort(snap.atoms.begin(), snap.atoms.end(),
              [](const auto& a, const auto& b) { return a.start < b.start; });
    out.push_back(std::move(snap));
  }
  return out;
}

}  // namespace parkphase
