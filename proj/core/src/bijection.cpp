#include "parkphase/bijection.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace parkphase {

namespace {

std::size_t ix(std::int64_t label) { return static_cast<std::size_t>(label - 1); }

// Detects cycles in a parent map over 1..count where next(v) <= 0 marks a
// terminal. state: 0 unvisited, 1 on stack, 2 done.
bool acyclic(std::int64_t count, const std::function<std::int64_t(std::int64_t)>& next) {
  std::vector<char> state(static_cast<std::size_t>(count), 0);
  std::vector<std::int64_t> path;
  for (std::int64_t s = 1; s <= count; ++s) {
    std::int64_t v = s;
    path.clear();
    while (v > 0 && state[ix(v)] == 0) {
      state[ix(v)] = 1;
      path.push_back(v);
      v = next(v);
    }
    if (v > 0 && state[ix(v)] == 1) return false;
    for (auto u : path) state[ix(u)] = 2;
  }
  return true;
}

}  // namespace

LabeledTree::LabeledTree(std::int64_t k, std::vector<std::int64_t> parent)
    : k_(k), parent_(std::move(parent)) {
  if (k < 1) throw std::invalid_argument("LabeledTree: k must be positive");
  if (static_cast<std::int64_t>(parent_.size()) != k - 1) {
    throw std::invalid_argument("LabeledTree: need exactly k-1 parent entries");
  }
  for (std::int64_t v = 1; v < k; ++v) {
    const auto p = parent_[ix(v)];
    if (p < 1 || p > k || p == v) {
      throw std::invalid_argument("LabeledTree: bad parent " + std::to_string(p) + " for v" +
                                  std::to_string(v));
    }
  }
  const bool ok = acyclic(k - 1, [this](std::int64_t v) {
    const auto p = parent_[ix(v)];
    return p == k_ ? std::int64_t{0} : p;
  });
  if (!ok) throw std::invalid_argument("LabeledTree: parent map has a cycle");
}

std::vector<std::vector<std::int64_t>> LabeledTree::children() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(k_));
  for (std::int64_t v = 1; v < k_; ++v) out[ix(parent_[ix(v)])].push_back(v);
  return out;
}

PavlovForest::PavlovForest(std::int64_t roots, std::vector<ForestParent> parent)
    : roots_(roots), parent_(std::move(parent)) {
  if (roots < 1) throw std::invalid_argument("PavlovForest: need at least one root");
  const auto n = this->n();
  for (std::int64_t v = 1; v <= n; ++v) {
    const auto& p = parent_[ix(v)];
    const auto bound = p.is_root ? roots : n;
    if (p.label < 1 || p.label > bound || (!p.is_root && p.label == v)) {
      throw std::invalid_argument("PavlovForest: bad parent label " + std::to_string(p.label) +
                                  " for v" + std::to_string(v));
    }
  }
  const bool ok = acyclic(n, [this](std::int64_t v) {
    const auto& p = parent_[ix(v)];
    return p.is_root ? std::int64_t{0} : p.label;
  });
  if (!ok) throw std::invalid_argument("PavlovForest: non-root parents form a cycle");
}

std::vector<std::int64_t> PavlovForest::tree_of() const {
  std::vector<std::int64_t> out(parent_.size(), 0);
  std::vector<std::int64_t> path;
  for (std::int64_t s = 1; s <= n(); ++s) {
    std::int64_t v = s;
    path.clear();
    std::int64_t root = 0;
    while (true) {
      if (out[ix(v)] != 0) {
        root = out[ix(v)];
        break;
      }
      path.push_back(v);
      const auto& p = parent_[ix(v)];
      if (p.is_root) {
        root = p.label;
        break;
      }
      v = p.label;
    }
    for (auto u : path) out[ix(u)] = root;
  }
  return out;
}

std::vector<std::int64_t> PavlovForest::tree_sizes() const {
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(roots_), 0);
  for (auto r : tree_of()) ++sizes[ix(r)];
  return sizes;
}

namespace {

struct Search {
  std::vector<Place> tries;
  std::vector<std::int64_t> queue_lengths;
};

Search label_ordered_search(const LabeledTree& tree) {
  const auto k = tree.k();
  const auto children = tree.children();
  Search out;
  out.tries.assign(static_cast<std::size_t>(k - 1), 0);
  std::priority_queue<std::int64_t, std::vector<std::int64_t>, std::greater<>> queue;
  for (auto c : children[ix(k)]) {
    out.tries[ix(c)] = 1;
    queue.push(c);
  }
  for (Place step = 1; !queue.empty(); ++step) {
    out.queue_lengths.push_back(static_cast<std::int64_t>(queue.size()));
    const auto head = queue.top();
    queue.pop();
    for (auto c : children[ix(head)]) {
      out.tries[ix(c)] = step + 1;
      queue.push(c);
    }
  }
  return out;
}

}  // namespace

ParkingScheme tree_to_confined(const LabeledTree& tree) {
  return park(tree.k(), label_ordered_search(tree).tries);
}

std::vector<std::int64_t> bfs_queue_lengths(const LabeledTree& tree) {
  return label_ordered_search(tree).queue_lengths;
}

LabeledTree confined_to_tree(const ParkingScheme& scheme) {
  const auto m = scheme.m();
  if (scheme.n() != m - 1 || !scheme.confined()) {
    throw std::invalid_argument("confined_to_tree: need a confined scheme with n = m - 1");
  }
  std::vector<std::int64_t> parent;
  parent.reserve(static_cast<std::size_t>(m - 1));
  for (auto t : scheme.tries()) parent.push_back(t == 1 ? m : scheme.car_at(t - 1));
  return LabeledTree(m, std::move(parent));
}

PavlovForest parking_to_forest(const ParkingScheme& scheme) {
  if (!scheme.confined()) throw std::invalid_argument("parking_to_forest: scheme is not confined");
  const auto m = scheme.m();
  // root_right[p-1]: label of the first empty place at or after p.
  std::vector<std::int64_t> root_right(static_cast<std::size_t>(m));
  std::int64_t label = scheme.empty_count();
  for (Place p = m; p >= 1; --p) {
    if (!scheme.occupied(p) && p != m) --label;
    root_right[ix(p)] = label;
  }
  std::vector<ForestParent> parent;
  parent.reserve(static_cast<std::size_t>(scheme.n()));
  for (auto t : scheme.tries()) {
    if (t > 1 && scheme.occupied(t - 1)) {
      parent.push_back({false, scheme.car_at(t - 1)});
    } else {
      parent.push_back({true, root_right[ix(t)]});
    }
  }
  return PavlovForest(scheme.empty_count(), std::move(parent));
}

ParkingScheme forest_to_parking(const PavlovForest& forest) {
  const auto n = forest.n();
  const auto l = forest.roots();
  const auto tree = forest.tree_of();
  std::vector<std::vector<std::int64_t>> members(static_cast<std::size_t>(l));
  for (std::int64_t v = 1; v <= n; ++v) members[ix(tree[ix(v)])].push_back(v);

  std::vector<Place> tries(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> local(static_cast<std::size_t>(n), 0);
  Place offset = 0;
  for (const auto& vs : members) {
    const auto size = static_cast<std::int64_t>(vs.size());
    for (std::int64_t i = 0; i < size; ++i) local[ix(vs[ix(i + 1)])] = i + 1;
    std::vector<std::int64_t> parent;
    parent.reserve(vs.size());
    for (auto v : vs) {
      const auto& p = forest.parent(v);
      parent.push_back(p.is_root ? size + 1 : local[ix(p.label)]);
    }
    const auto block = tree_to_confined(LabeledTree(size + 1, std::move(parent)));
    for (std::int64_t i = 0; i < size; ++i) tries[ix(vs[ix(i + 1)])] = offset + block.tries()[ix(i + 1)];
    offset += size + 1;
  }
  return park(n + l, tries);
}

LabeledTree prufer_decode(std::int64_t k, const std::vector<std::int64_t>& word) {
  if (k < 1) throw std::invalid_argument("prufer_decode: k must be positive");
  if (k == 1) return LabeledTree(1, {});
  if (static_cast<std::int64_t>(word.size()) != k - 2) {
    throw std::invalid_argument("prufer_decode: word length must be k - 2");
  }
  std::vector<std::int64_t> degree(static_cast<std::size_t>(k), 1);
  for (auto s : word) {
    if (s < 1 || s > k) throw std::invalid_argument("prufer_decode: letter outside 1..k");
    ++degree[ix(s)];
  }
  std::vector<std::vector<std::int64_t>> adjacent(static_cast<std::size_t>(k));
  const auto link = [&](std::int64_t a, std::int64_t b) {
    adjacent[ix(a)].push_back(b);
    adjacent[ix(b)].push_back(a);
  };
  // Linear-time decode: `leaf` is the smallest current leaf.
  std::int64_t ptr = 1;
  while (degree[ix(ptr)] != 1) ++ptr;
  std::int64_t leaf = ptr;
  for (auto s : word) {
    link(leaf, s);
    if (--degree[ix(s)] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ix(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  link(leaf, k);

  std::vector<std::int64_t> parent(static_cast<std::size_t>(k - 1), 0);
  std::vector<std::int64_t> stack{k};
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  seen[ix(k)] = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : adjacent[ix(x)]) {
      if (!seen[ix(y)]) {
        seen[ix(y)] = 1;
        parent[ix(y)] = x;
        stack.push_back(y);
      }
    }
  }
  return LabeledTree(k, std::move(parent));
}

LabeledTree random_labeled_tree(std::int64_t k, Rng& rng) {
  std::vector<std::int64_t> word(static_cast<std::size_t>(std::max<std::int64_t>(k - 2, 0)));
  for (auto& s : word) s = rng.uniform_int(1, k);
  return prufer_decode(k, word);
}

void to_json(nlohmann::json& j, const LabeledTree& tree) {
  nlohmann::json parent = nlohmann::json::object();
  for (std::int64_t v = 1; v < tree.k(); ++v) parent[std::to_string(v)] = tree.parent(v);
  j = {{"k", tree.k()}, {"root", tree.root()}, {"parent", parent}};
}

void to_json(nlohmann::json& j, const PavlovForest& forest) {
  nlohmann::json parent = nlohmann::json::object();
  for (std::int64_t v = 1; v <= forest.n(); ++v) {
    const auto& p = forest.parent(v);
    parent["v" + std::to_string(v)] = (p.is_root ? "r" : "v") + std::to_string(p.label);
  }
  j = {{"roots", forest.roots()}, {"n", forest.n()}, {"parent", parent}};
}

}  // namespace parkphase
