#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "oracles.hpp"
#include "parkphase/coalescent.hpp"
#include "parkphase/exact.hpp"

using namespace parkphase;

namespace {

using States = std::vector<std::vector<std::int64_t>>;

States parking_states_by_replay(Place m, const std::vector<Place>& tries) {
  States out;
  for (std::int64_t k = 0; k < m; ++k) {
    const std::vector<Place> prefix(tries.begin(), tries.begin() + k);
    out.push_back(oracle::gaps_with_zeros(m, oracle::park(m, prefix).car_at));
  }
  return out;
}

}  // namespace

TEST(Chain, StarAndPathsOnThreeVertices) {
  const auto star = fragmentation_chain_deterministic(LabeledTree(3, {3, 3}));
  EXPECT_EQ(star.fragmentation_states(),
            (States{{2}, {1, 0}, {0, 0, 0}}));
  const auto path = fragmentation_chain_deterministic(LabeledTree(3, {2, 3}));
  EXPECT_EQ(path.fragmentation_states(), (States{{2}, {1, 0}, {0, 0, 0}}));
  // Cutting v2 first detaches {v2} alone when v1 hangs from the root side.
  const auto other = fragmentation_chain_deterministic(LabeledTree(3, {3, 1}));
  EXPECT_EQ(other.states().size(), 3u);
  EXPECT_EQ(other.events()[1], (MergeEvent{2, 0, 1}));
}

TEST(Chain, MassConventions) {
  Rng rng(1);
  const auto tree = random_labeled_tree(40, rng);
  const auto chain = fragmentation_chain_deterministic(tree);
  const auto raw = chain.states();
  const auto heavy = chain.states(MassConvention::with_empty);
  for (std::int64_t k = 0; k < 40; ++k) {
    const auto& s = raw[static_cast<std::size_t>(k)];
    EXPECT_EQ(static_cast<std::int64_t>(s.size()), 40 - k);
    std::int64_t total = 0, mass = 0;
    for (auto x : s) total += x;
    for (auto x : heavy[static_cast<std::size_t>(k)]) mass += x;
    EXPECT_EQ(total, k);
    EXPECT_EQ(mass, 40);
    EXPECT_EQ(chain.state(k), s);
  }
  EXPECT_THROW(chain.state(40), std::out_of_range);
}

TEST(Chain, RejectsMalformedEvents) {
  EXPECT_THROW(CoalescentChain(3, {{1, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(CoalescentChain(3, {{2, 0, 1}, {1, 0, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(CoalescentChain(3, {{1, 0, 0}, {2, 0, 1}}));
}

TEST(Chain, DeterministicCutsMatchBruteForceFragments) {
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (const auto& parent : oracle::all_trees(m)) {
      const auto states = fragmentation_chain_deterministic(LabeledTree(m, parent)).states();
      for (std::int64_t k = 0; k < m; ++k) {
        ASSERT_EQ(states[static_cast<std::size_t>(k)], oracle::cut_sizes(m, parent, k));
      }
    }
  }
}

TEST(Chain, ForestsFollowParkingArrivals) {
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (const auto& parent : oracle::all_trees(m)) {
      const LabeledTree tree(m, parent);
      const auto scheme = tree_to_confined(tree);
      const auto forests = fragmentation_forests(tree);
      for (std::int64_t k = 0; k < m; ++k) {
        const auto prefix = scheme.tries().first(static_cast<std::size_t>(k));
        ASSERT_EQ(forests[static_cast<std::size_t>(k)], parking_to_forest(park(m, prefix)));
      }
    }
  }
}

TEST(Chain, ParkingChainMatchesReplay) {
  const auto c = coalescent_from_parking(3, std::vector<Place>{1, 1});
  EXPECT_EQ(c.states(), (States{{0, 0, 0}, {1, 0}, {2}}));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const Place m = 30;
    const auto tree = random_labeled_tree(m, rng);
    const auto image = tree_to_confined(tree);
    const std::vector<Place> tries(image.tries().begin(), image.tries().end());
    EXPECT_EQ(coalescent_from_parking(m, tries).states(), parking_states_by_replay(m, tries));
  }
  EXPECT_THROW(coalescent_from_parking(3, std::vector<Place>{3, 3}), std::invalid_argument);
  EXPECT_THROW(coalescent_from_parking(3, std::vector<Place>{1}), std::invalid_argument);
}

TEST(Chain, ThreeConstructionsAgree) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto shape = sample_shape(500, rng);
    const auto a = fragmentation_chain_random(shape, seed + 1000);
    const auto b = fragmentation_chain_deterministic(a.relabeled);
    const auto s = tree_to_confined(a.relabeled);
    const auto c = coalescent_from_parking(500, std::vector<Place>(s.tries().begin(), s.tries().end()));
    ASSERT_EQ(a.chain, b);
    ASSERT_EQ(b, c);
  }
}

TEST(Chain, RandomDeletionSmallCases) {
  const auto two = fragmentation_chain_random(LabeledTree(2, {2}), 5);
  EXPECT_EQ(two.chain.fragmentation_states(), (States{{1}, {0, 0}}));
  Rng rng(8);
  const auto r = fragmentation_chain_random(sample_shape(50, rng), 9);
  EXPECT_EQ(r.chain.state(0), std::vector<std::int64_t>(50, 0));
}

TEST(Chain, ExactLawAgreesOnSmallTables) {
  // Law of the chain from all confined arrival sequences versus the law from
  // all (tree, deletion order) pairs.
  for (std::int64_t m = 2; m <= 5; ++m) {
    std::map<std::vector<MergeEvent>, BigInt> from_parking, from_trees;
    BigInt parking_total = 0, tree_total = 0;
    oracle::for_each_tries(m, m - 1, [&](const oracle::Seq& t) {
      if (oracle::park(m, t).car_at.back() != 0) return;
      from_parking[coalescent_from_parking(m, t).events()] += 1;
      parking_total += 1;
    });
    for (const auto& parent : oracle::all_trees(m)) {
      std::vector<std::int64_t> order(static_cast<std::size_t>(m - 1));
      std::iota(order.begin(), order.end(), std::int64_t{1});
      do {
        // Deleting edges in `order` is the deterministic chain after relabeling.
        std::vector<std::int64_t> relabel(static_cast<std::size_t>(m + 1), 0);
        relabel[static_cast<std::size_t>(m)] = m;
        for (std::size_t i = 0; i < order.size(); ++i) {
          relabel[static_cast<std::size_t>(order[i])] = m - 1 - static_cast<std::int64_t>(i);
        }
        std::vector<std::int64_t> p(static_cast<std::size_t>(m - 1));
        for (std::int64_t v = 1; v < m; ++v) {
          p[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v)] - 1)] =
              relabel[static_cast<std::size_t>(parent[static_cast<std::size_t>(v - 1)])];
        }
        from_trees[fragmentation_chain_deterministic(LabeledTree(m, p)).events()] += 1;
        tree_total += 1;
      } while (std::next_permutation(order.begin(), order.end()));
    }
    ASSERT_EQ(from_parking.size(), from_trees.size());
    for (const auto& [events, count] : from_parking) {
      ASSERT_TRUE(from_trees.count(events));
      EXPECT_EQ(BigRational(count, parking_total), BigRational(from_trees[events], tree_total));
    }
  }
}

TEST(Transition, MatchesMergeProbability) {
  const auto est = transition_frequency_check(20, 5, 3, 2, 40000, 11);
  EXPECT_EQ(est.accepted, 40000);
  EXPECT_NEAR(est.target, 7.0 / 80.0, 1e-15);
  const double sigma = std::sqrt(est.target * (1 - est.target) / static_cast<double>(est.accepted));
  EXPECT_LE(std::abs(est.frequency - est.target), 3 * sigma);
}

TEST(Transition, LargerTable) {
  const auto est = transition_frequency_check(200, 20, 10, 4, 20000, 2);
  const double sigma = std::sqrt(est.target * (1 - est.target) / static_cast<double>(est.accepted));
  EXPECT_LE(std::abs(est.frequency - est.target), 3 * sigma);
}

TEST(Transition, SymmetricAndEdgeCases) {
  const auto xy = transition_frequency_check(20, 5, 3, 2, 20000, 4);
  const auto yx = transition_frequency_check(20, 5, 2, 3, 20000, 5);
  const double s = std::hypot(xy.standard_error, yx.standard_error);
  EXPECT_LE(std::abs(xy.frequency - yx.frequency), 3 * s);
  const auto same = transition_frequency_check(20, 5, 2, 2, 20000, 6);
  EXPECT_LE(std::abs(same.frequency - same.target), 3 * std::sqrt(same.target * (1 - same.target) / 20000));
  const auto two = transition_frequency_check(12, 2, 4, 6, 2000, 7);
  EXPECT_EQ(two.merges, two.accepted);
  EXPECT_DOUBLE_EQ(two.target, 1.0);
  EXPECT_THROW(transition_frequency_check(20, 1, 3, 2, 10, 1), std::domain_error);
  EXPECT_THROW(transition_frequency_check(2000, 1000, 900, 90, 5, 1), std::runtime_error);
}

TEST(PointProcess, PartitionAndSizes) {
  Rng rng(21);
  const Place m = 400;
  const auto scheme = simulate_uniform(m, m - 1, rng);
  const std::vector<double> grid{0.5, 1.0, 2.0, 5.0, 20.0};
  const auto snaps = point_process_extraction(scheme, grid);
  ASSERT_EQ(snaps.size(), grid.size());
  EXPECT_EQ(snaps.back().n, 0);
  EXPECT_EQ(snaps.back().atoms.size(), 400u);
  for (const auto& snap : snaps) {
    EXPECT_EQ(snap.n, static_cast<std::int64_t>(std::floor(400.0 - snap.lambda * 20.0)));
    std::int64_t total = 0;
    std::vector<std::int64_t> sizes;
    for (const auto& a : snap.atoms) {
      const auto w = std::llround(a.width * m);
      total += w;
      if (w > 1) sizes.push_back(w - 1);
    }
    EXPECT_EQ(total, m);
    EXPECT_DOUBLE_EQ(snap.atoms.front().start, 0.0);
    std::sort(sizes.rbegin(), sizes.rend());
    const auto prefix = scheme.tries().first(static_cast<std::size_t>(snap.n));
    EXPECT_EQ(sizes, blocks(park(m, prefix)).sorted_sizes);
  }
  EXPECT_THROW(point_process_extraction(scheme, std::vector<double>{21.0}), std::domain_error);
  EXPECT_THROW(point_process_extraction(scheme, std::vector<double>{0.0}), std::domain_error);
  const auto small = simulate_uniform(m, 10, rng);
  EXPECT_THROW(point_process_extraction(small, std::vector<double>{1.0}), std::invalid_argument);
}
