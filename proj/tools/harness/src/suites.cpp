#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "parkphase/bijection.hpp"
#include "parkphase/coalescent.hpp"
#include "parkphase/coupling.hpp"
#include "parkphase/exact.hpp"
#include "parkphase/harness.hpp"
#include "parkphase/lattice.hpp"

namespace parkphase::harness {
namespace {

using Params = std::map<std::string, std::string>;

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(double v) { return format_double(v); }

std::int64_t integer(const Params& p, const std::string& key) {
  const auto& s = p.at(key);
  std::int64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw std::invalid_argument("--" + key + ": expected an integer, got '" + s + "'");
  }
  return v;
}

double real(const Params& p, const std::string& key) {
  const auto& s = p.at(key);
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("--" + key + ": expected a number, got '" + s + "'");
  }
  return v;
}

std::vector<double> reals(const Params& p, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(p.at(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(real({{key, item}}, key));
  if (out.empty()) throw std::invalid_argument("--" + key + ": empty list");
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void one_of(const Params& p, const std::string& key, std::initializer_list<const char*> values) {
  for (const char* v : values) {
    if (p.at(key) == v) return;
  }
  std::string all;
  for (const char* v : values) all += std::string(all.empty() ? "" : ", ") + v;
  throw std::invalid_argument("--" + key + " must be one of: " + all);
}

GofReport report(const SuiteConfig& c, std::string name, std::string statistic, std::int64_t n, double value,
                 double tolerance) {
  return GofReport::make(std::move(name), std::move(statistic), n, value, tolerance, c.seed, c.hash());
}

// Calls f on each of the m^n tries sequences, last coordinate fastest.
void for_each_tries(Place m, std::int64_t n, const std::function<void(const std::vector<Place>&)>& f) {
  std::vector<Place> t(static_cast<std::size_t>(n), 1);
  while (true) {
    f(t);
    std::int64_t i = n - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == m) t[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return;
    ++t[static_cast<std::size_t>(i)];
  }
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// ------------------------------------------------------------------ simulate

void check_simulate(const Params& p) {
  const auto m = integer(p, "m"), l = integer(p, "l");
  require(m >= 1, "--m must be >= 1");
  require(l >= 1 && l <= m, "--l must lie in 1..m");
}

SuiteResult run_simulate(const SuiteConfig& c) {
  const auto m = integer(c.params, "m");
  const auto n = m - integer(c.params, "l");
  const auto& dump = c.params.at("dump-counts");
  SuiteResult out;
  out.table.header = {"replica", "m", "n", "blocks", "largest", "first_born", "v"};
  for (std::int64_t r = 0; r < c.replicas; ++r) {
    Rng rng = Rng::for_replica(c.seed, static_cast<std::uint64_t>(r));
    const auto scheme = simulate_uniform(m, n, rng);
    const auto d = blocks(scheme);
    const auto cc = centered_counts(scheme);
    out.table.rows.push_back({str(r), str(m), str(n), str(static_cast<std::int64_t>(d.blocks.size())),
                              d.sorted_sizes.empty() ? "0" : str(d.sorted_sizes.front()),
                              d.birth_order_sizes.empty() ? "0" : str(d.birth_order_sizes.front()), str(cc.v)});
    if (r == 0 && !dump.empty()) {
      std::ofstream f(dump, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + dump + " for writing");
      Table counts{{"k", "Y_k", "C_k"}, {}};
      for (Place k = 1; k <= m; ++k) counts.rows.push_back({str(k), str(cc.y_at(k)), str(cc.c_at(k))});
      write_csv(f, counts, c.hash());
      if (!f) throw std::runtime_error("write failed: " + dump);
    }
  }
  return out;
}

// ----------------------------------------------------------------- enumerate

void check_enumerate(const Params& p) {
  const auto m = integer(p, "m");
  require(m >= 1 && m <= 8, "--m must lie in 1..8 (m^(m-1) sequences are enumerated)");
}

SuiteResult run_enumerate(const SuiteConfig& c) {
  const auto m = integer(c.params, "m");
  SuiteResult out;
  out.table.header = {"m", "n", "check", "cases", "failures"};
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> totals;
  const auto record = [&](std::int64_t n, const std::string& check, std::int64_t cases, std::int64_t failures) {
    out.table.rows.push_back({str(m), str(n), check, str(cases), str(failures)});
    totals[check].first += cases;
    totals[check].second += failures;
  };
  for (std::int64_t n = 0; n < m; ++n) {
    std::int64_t cases = 0, naive = 0, v_empty = 0, prof = 0, rec = 0, records = 0, confined = 0;
    std::map<std::int64_t, std::int64_t> first_block;
    for_each_tries(m, n, [&](const std::vector<Place>& t) {
      ++cases;
      const auto s = park(m, t);
      const auto ref = park_naive(m, t);
      if (!std::equal(s.placements().begin(), s.placements().end(), ref.placements().begin(),
                      ref.placements().end())) {
        ++naive;
      }
      const auto cc = centered_counts(s);
      const auto h = profile_naive(ref);
      if (ref.occupied(cc.v)) ++v_empty;
      if (!(profile_from_counts(cc) == h)) ++prof;
      if (!(profile_by_recurrence(cc) == h)) ++rec;
      auto got = empty_places_as_records(cc);
      std::sort(got.begin(), got.end());
      std::vector<Place> empties;
      for (Place p = 1; p <= m; ++p) {
        if (!ref.occupied(p)) empties.push_back(p);
      }
      if (got != empties) ++records;
      if (ref.confined()) ++confined;
      if (n >= 1) {
        for (const auto& b : blocks(s).blocks) {
          if (b.birth == 1) ++first_block[b.size];
        }
      }
    });
    record(n, "park-vs-naive", cases, naive);
    record(n, "v-empty", cases, v_empty);
    record(n, "profile-from-counts", cases, prof);
    record(n, "profile-recurrence", cases, rec);
    record(n, "records-are-empties", cases, records);
    record(n, "confined-count", 1, BigInt(confined) == count_confined(m, n) ? 0 : 1);
    if (n >= 1 && n <= m - 2) {
      std::int64_t bad = 0;
      for (std::int64_t k = 1; k <= n; ++k) {
        if (phi(m, n, k).value() != BigRational(first_block[k], cases)) ++bad;
      }
      record(n, "first-block-law", n, bad);
    }
  }
  for (const auto& [check, ct] : totals) {
    out.reports.push_back(report(c, check, "failures", ct.first, static_cast<double>(ct.second), 0.0));
  }
  return out;
}

// ----------------------------------------------------------- verify-identity

void check_identity(const Params& p) {
  const auto mm = integer(p, "m-max");
  require(mm >= 3 && mm <= 400, "--m-max must lie in 3..400");
}

SuiteResult run_identity(const SuiteConfig& c) {
  const auto mm = integer(c.params, "m-max");
  SuiteResult out;
  out.table.header = {"m", "n", "lhs", "rhs", "holds"};
  std::int64_t cases = 0, failures = 0;
  for (std::int64_t m = 3; m <= mm; ++m) {
    for (std::int64_t n = 1; n <= m - 2; ++n) {
      const auto v = verify_identity(m, n);
      ++cases;
      if (!v.holds) ++failures;
      out.table.rows.push_back({str(m), str(n), v.lhs.str(), v.rhs.str(), v.holds ? "1" : "0"});
    }
  }
  out.reports.push_back(report(c, "identity", "failures", cases, static_cast<double>(failures), 0.0));
  return out;
}

// ---------------------------------------------------------------------- dist

void check_dist(const Params& p) {
  one_of(p, "table", {"phi", "f", "pavlov"});
  const auto m = integer(p, "m"), n = integer(p, "n");
  const auto lambda = real(p, "lambda");
  const auto points = integer(p, "points");
  if (p.at("table") == "phi") {
    require(m >= 2 && m <= 100000, "--m must lie in 2..100000");
    require(n >= 1 && n <= m - 1, "--n must lie in 1..m-1");
  } else {
    require(lambda > 0, "--lambda must be > 0");
    require(points >= 1 && points <= 10000, "--points must lie in 1..10000");
  }
}

SuiteResult run_dist(const SuiteConfig& c) {
  const auto& table = c.params.at("table");
  const auto lambda = real(c.params, "lambda");
  const auto points = integer(c.params, "points");
  SuiteResult out;
  if (table == "phi") {
    const auto m = integer(c.params, "m"), n = integer(c.params, "n");
    out.table.header = {"m", "n", "k", "phi", "phi_value", "log_phi"};
    // Exact rationals stay cheap while m^n has a few thousand digits.
    const bool exact = static_cast<double>(n) * std::log10(static_cast<double>(m)) < 4000;
    for (std::int64_t k = 1; k <= n; ++k) {
      const auto lp = static_cast<double>(log_phi(m, n, k));
      if (exact) {
        const auto p = phi(m, n, k);
        out.table.rows.push_back({str(m), str(n), str(k), p.str(), str(p.to_double()), str(lp)});
      } else {
        out.table.rows.push_back({str(m), str(n), str(k), "", str(std::exp(lp)), str(lp)});
      }
    }
  } else if (table == "f") {
    out.table.header = {"lambda", "x", "density", "cdf"};
    for (std::int64_t i = 1; i <= points; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(points + 1);
      out.table.rows.push_back({str(lambda), str(x), str(limit_density(lambda, x)), str(limit_cdf(lambda, x))});
    }
  } else {
    out.table.header = {"lambda", "x", "cdf"};
    for (std::int64_t i = 1; i <= points; ++i) {
      const double x = 0.25 + 0.75 * static_cast<double>(i) / static_cast<double>(points);
      out.table.rows.push_back({str(lambda), str(x), str(largest_block_cdf(lambda, x))});
    }
  }
  return out;
}

// ------------------------------------------------------------ bijection-check

void check_bijection(const Params& p) {
  const auto k = integer(p, "k-max"), m = integer(p, "m-max");
  require(k >= 1 && k <= 9, "--k-max must lie in 1..9");
  require(m >= 1 && m <= 8, "--m-max must lie in 1..8");
}

SuiteResult run_bijection(const SuiteConfig& c) {
  const auto kmax = integer(c.params, "k-max"), mmax = integer(c.params, "m-max");
  SuiteResult out;
  out.table.header = {"kind", "size", "n", "count", "expected", "failures"};
  std::int64_t total = 0, bad_total = 0;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    std::int64_t count = 0, bad = 0;
    const auto visit = [&](const LabeledTree& tree) {
      ++count;
      const auto s = tree_to_confined(tree);
      if (!(confined_to_tree(s) == tree) || !(tree_to_confined(confined_to_tree(s)) == s)) ++bad;
    };
    if (k <= 2) {
      visit(k == 1 ? LabeledTree(1, {}) : LabeledTree(2, {2}));
    } else {
      for_each_tries(k, k - 2, [&](const std::vector<Place>& word) { visit(prufer_decode(k, word)); });
    }
    const BigInt expected = k >= 2 ? ipow(k, k - 2) : BigInt(1);
    if (BigInt(count) != expected) ++bad;
    total += count;
    bad_total += bad;
    out.table.rows.push_back({"tree", str(k), str(k - 1), str(count), expected.str(), str(bad)});
  }
  for (Place m = 1; m <= mmax; ++m) {
    for (std::int64_t n = 0; n < m; ++n) {
      std::int64_t count = 0, bad = 0;
      for_each_tries(m, n, [&](const std::vector<Place>& t) {
        const auto s = park(m, t);
        if (!s.confined()) return;
        ++count;
        const auto f = parking_to_forest(s);
        if (!(forest_to_parking(f) == s) || !(parking_to_forest(forest_to_parking(f)) == f)) ++bad;
      });
      const BigInt expected = n == 0 ? BigInt(1) : BigInt(m - n) * ipow(m, n - 1);
      if (BigInt(count) != expected) ++bad;
      total += count;
      bad_total += bad;
      out.table.rows.push_back({"confined", str(m), str(n), str(count), expected.str(), str(bad)});
    }
  }
  out.reports.push_back(report(c, "bijection-round-trips", "failures", total, static_cast<double>(bad_total), 0.0));
  return out;
}

// ---------------------------------------------------------------- coalescent

void check_coalescent(const Params& p) {
  one_of(p, "mode", {"equality", "chain", "transition", "points"});
  const auto m = integer(p, "m");
  require(m >= 2 && m <= 1000000, "--m must lie in 2..1000000");
  const auto tm = integer(p, "transition-m"), l = integer(p, "l"), x = integer(p, "x"), y = integer(p, "y");
  if (p.at("mode") == "transition") {
    require(l >= 2 && x >= 1 && y >= 1 && x + y <= tm - l, "transition needs l >= 2, x, y >= 1, x + y <= m - l");
    require(integer(p, "accepted") >= 1, "--accepted must be >= 1");
  }
  if (p.at("mode") == "points") {
    for (double lam : reals(p, "grid")) require(lam > 0, "--grid values must be > 0");
  }
}

SuiteResult run_coalescent(const SuiteConfig& c) {
  const auto& mode = c.params.at("mode");
  const auto m = integer(c.params, "m");
  SuiteResult out;
  const auto build = [&](Rng& rng) {
    const auto shape = sample_shape(m, rng);
    auto a = fragmentation_chain_random(shape, rng.next());
    auto b = fragmentation_chain_deterministic(a.relabeled);
    const auto image = tree_to_confined(a.relabeled);
    auto cc = coalescent_from_parking(m, std::vector<Place>(image.tries().begin(), image.tries().end()));
    return std::array<CoalescentChain, 3>{std::move(a.chain), std::move(b), std::move(cc)};
  };
  if (mode == "equality") {
    out.table.header = {"replica", "m", "agree"};
    std::int64_t bad = 0;
    for (std::int64_t r = 0; r < c.replicas; ++r) {
      Rng rng = Rng::for_replica(c.seed, static_cast<std::uint64_t>(r));
      const auto chains = build(rng);
      const bool agree = chains[0] == chains[1] && chains[1] == chains[2];
      if (!agree) ++bad;
      out.table.rows.push_back({str(r), str(m), agree ? "1" : "0"});
    }
    out.reports.push_back(report(c, "omega-equality", "failures", c.replicas, static_cast<double>(bad), 0.0));
  } else if (mode == "chain") {
    out.table.header = {"k", "construction", "state"};
    Rng rng(c.seed);
    const auto chains = build(rng);
    const char* names[] = {"random-deletion", "deterministic-cuts", "parking"};
    for (std::int64_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < 3; ++i) out.table.rows.push_back({str(k), names[i], join(chains[i].state(k))});
    }
  } else if (mode == "transition") {
    const auto tm = integer(c.params, "transition-m"), l = integer(c.params, "l");
    const auto x = integer(c.params, "x"), y = integer(c.params, "y");
    const auto est = transition_frequency_check(tm, l, x, y, integer(c.params, "accepted"), c.seed);
    const double sigma = std::sqrt(est.target * (1 - est.target) / static_cast<double>(est.accepted));
    const double z = std::abs(est.frequency - est.target) / sigma;
    out.table.header = {"m", "l", "x", "y", "accepted", "trials", "merges", "frequency", "target", "target_exact", "z"};
    out.table.rows.push_back({str(tm), str(l), str(x), str(y), str(est.accepted), str(est.trials), str(est.merges),
                              str(est.frequency), str(est.target), merge_probability(x, y, l, tm).str(), str(z)});
    out.reports.push_back(report(c, "merge-probability", "sigma", est.accepted, z, 3.0));
  } else {
    out.table.header = {"replica", "lambda", "n", "start", "width"};
    const auto grid = reals(c.params, "grid");
    for (std::int64_t r = 0; r < c.replicas; ++r) {
      Rng rng = Rng::for_replica(c.seed, static_cast<std::uint64_t>(r));
      const auto scheme = simulate_uniform(m, m - 1, rng);
      for (const auto& snap : point_process_extraction(scheme, grid)) {
        for (const auto& atom : snap.atoms) {
          out.table.rows.push_back({str(r), str(snap.lambda), str(snap.n), str(atom.start), str(atom.width)});
        }
      }
    }
  }
  return out;
}

// --------------------------------------------------------------------- limit

void check_limit(const Params& p) {
  one_of(p, "stat", {"B", "R1", "Sigma", "decompose", "size-biased"});
  require(real(p, "lambda") > 0, "--lambda must be > 0");
  const auto n = integer(p, "resolution");
  require(n >= 16 && n <= 10000000, "--resolution must lie in 16..10^7");
  require(integer(p, "k") >= 1, "--k must be >= 1");
  require(integer(p, "rhos") >= 1, "--rhos must be >= 1");
  const auto w = real(p, "min-width");
  require(w >= 0 && w < 1, "--min-width must lie in [0, 1)");
  const auto grid = reals(p, "grid");
  require(std::all_of(grid.begin(), grid.end(), [](double g) { return g >= 0; }), "--grid values must be >= 0");
}

SuiteResult run_limit(const SuiteConfig& c) {
  const auto& stat = c.params.at("stat");
  const auto lambda = real(c.params, "lambda");
  const auto n = integer(c.params, "resolution");
  SuiteResult out;
  const auto replica = [&](std::int64_t r) { return Rng::for_replica(c.seed, static_cast<std::uint64_t>(r)); };

  if (stat == "B") {
    out.table.header = {"replica", "b1", "b2", "b3"};
    std::vector<double> b1;
    for (std::int64_t r = 0; r < c.replicas; ++r) {
      Rng rng = replica(r);
      const auto w = excursion_widths(sample_excursion(n, rng), lambda).widths;
      std::vector<std::string> row{str(r)};
      for (std::size_t i = 0; i < 3; ++i) row.push_back(i < w.size() ? str(w[i]) : "0");
      out.table.rows.push_back(row);
      b1.push_back(w.empty() ? 0.0 : w.front());
    }
    for (double x : {0.5, 0.6, 0.75, 0.9}) {
      const double emp = static_cast<double>(std::count_if(b1.begin(), b1.end(), [&](double b) { return b <= x; })) /
                         static_cast<double>(b1.size());
      out.reports.push_back(report(c, "B1-cdf-at-" + str(x), "abs", c.replicas,
                                   std::abs(emp - largest_block_cdf(lambda, x)), 0.03));
    }
  } else if (stat == "R1") {
    out.table.header = {"replica", "r1", "g", "d"};
    std::vector<double> r1;
    for (std::int64_t r = 0; r < c.replicas; ++r) {
      Rng rng = replica(r);
      const auto e = sample_excursion(n, rng);
      const auto b = sample_R1(e, lambda, rng.uniform01());
      out.table.rows.push_back({str(r), str(b.width), str(b.g), str(b.d)});
      r1.push_back(b.width);
    }
    out.reports.push_back(report(c, "R1-law", "KS", c.replicas,
                                 ks_distance(r1, [&](double x) { return limit_cdf(lambda, x); }), 0.03));
  } else if (stat == "Sigma") {
    out.table.header = {"replica", "lambda", "sigma"};
    auto grid = reals(c.params, "grid");
    std::sort(grid.begin(), grid.end());
    std::int64_t non_monotone = 0, above = 0;
    const auto at_one = std::find(grid.begin(), grid.end(), 1.0);
    for (std::int64_t r = 0; r < c.replicas; ++r) {
      Rng rng = replica(r);
      const auto e = sample_excursion(n, rng);
      const auto s = subordinator_path(e, rng.uniform01(), grid);
      for (std::size_t i = 0; i < grid.size(); ++i) out.table.rows.push_back({str(r), str(grid[i]), str(s.sigma[i])});
      if (!std::is_sorted(s.sigma.begin(), s.sigma.end())) ++non_monotone;
      if (at_one != grid.end() && s.sigma[static_cast<std::size_t>(at_one - grid.begin())] > 1.0) ++above;
    }
    out.reports.push_back(report(c, "Sigma-monotone", "failures", c.replicas, static_cast<double>(non_monotone), 0.0));
    if (at_one != grid.end()) {
      const double p = static_cast<double>(above) / static_cast<double>(c.replicas);
      out.reports.push_back(report(c, "P(Sigma(1)>1)", "abs", c.replicas,
                                   std::abs(p - std::erf(1.0 / std::numbers::sqrt2)), 0.02));
    }
  } else if (stat == "decompose") {
    out.table.header = {"replica", "r1", "max_q", "max_r"};
    const auto min_width = real(c.params, "min-width");
    std::vector<double> r1, qmax;
    for (std::int64_t r = 0; r < c.replicas; ++r) {
      Rng rng = replica(r);
      const auto e = sample_excursion(n, rng);
      const double rho = rng.uniform01(), w = rng.uniform01();
      try {
        const auto d = decompose(e, lambda, rho, w);
        out.table.rows.push_back({str(r), str(d.r1), str(d.q.max_value()), str(d.r_shifted.max_value())});
        if (d.r1 >= min_width) {
          r1.push_back(d.r1);
          qmax.push_back(d.q.max_value());
        }
      } catch (const std::domain_error&) {
        out.table.rows.push_back({str(r), "1", "", ""});
      }
    }
    if (r1.size() >= 3) {
      out.reports.push_back(report(c, "corr(R1,max q)", "abs", static_cast<std::int64_t>(r1.size()),
                                   std::abs(correlation(r1, qmax)), 0.05));
    }
  } else {
    out.table.header = {"replica", "j", "s"};
    const auto k = integer(c.params, "k");
    const auto rhos = integer(c.params, "rhos");
    std::vector<double> last;
    for (std::int64_t r = 0; r < c.replicas; ++r) {
      Rng rng = replica(r);
      const auto e = sample_excursion(n, rng);
      std::vector<double> rho(static_cast<std::size_t>(rhos));
      for (auto& u : rho) u = rng.uniform01();
      const auto s = size_biased_sums(e, lambda, rho, k);
      for (std::size_t j = 0; j < s.size(); ++j) out.table.rows.push_back({str(r), str(static_cast<std::int64_t>(j + 1)), str(s[j])});
      last.push_back(s.back());
    }
    // Reference: sum of k squared Gaussians over lambda^2 plus that sum.
    Rng gauss(mix64(c.seed));
    std::vector<double> ref(static_cast<std::size_t>(std::max<std::int64_t>(40 * c.replicas, 10000)));
    for (auto& v : ref) {
      double q = 0;
      for (std::int64_t j = 0; j < k; ++j) {
        const double g = gauss.normal();
        q += g * g;
      }
      v = q / (lambda * lambda + q);
    }
    out.reports.push_back(report(c, "S" + str(k) + "-law", "KS", c.replicas, ks_two_sample(last, ref), 0.03));
  }
  return out;
}

struct Suite {
  const char* name;
  Params defaults;
  std::int64_t replicas;
  void (*check)(const Params&);
  SuiteResult (*run)(const SuiteConfig&);
};

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites{
      {"simulate", {{"m", "10000"}, {"l", "100"}, {"dump-counts", ""}}, 10, check_simulate, run_simulate},
      {"enumerate", {{"m", "6"}}, 1, check_enumerate, run_enumerate},
      {"verify-identity", {{"m-max", "30"}}, 1, check_identity, run_identity},
      {"dist", {{"table", "phi"}, {"m", "10"}, {"n", "8"}, {"lambda", "1"}, {"points", "20"}}, 1, check_dist, run_dist},
      {"bijection-check", {{"k-max", "7"}, {"m-max", "6"}}, 1, check_bijection, run_bijection},
      {"coalescent",
       {{"mode", "equality"},
        {"m", "100"},
        {"transition-m", "20"},
        {"l", "5"},
        {"x", "3"},
        {"y", "2"},
        {"accepted", "100000"},
        {"grid", "0.5,1,2"}},
       100,
       check_coalescent,
       run_coalescent},
      {"limit",
       {{"stat", "R1"},
        {"lambda", "1"},
        {"resolution", "10000"},
        {"k", "2"},
        {"rhos", "4096"},
        {"min-width", "0.05"},
        {"grid", "0.25,0.5,1,2"}},
       5000,
       check_limit,
       run_limit},
  };
  return suites;
}

const Suite& find(const std::string& name) {
  for (const auto& s : registry()) {
    if (name == s.name) return s;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.emplace_back(s.name);
  return out;
}

std::map<std::string, std::string> suite_defaults(const std::string& suite) { return find(suite).defaults; }

SuiteConfig validate(SuiteConfig config) {
  const auto& suite = find(config.suite);
  for (const auto& [k, v] : config.params) {
    if (!suite.defaults.contains(k)) throw std::invalid_argument("suite " + config.suite + " has no parameter --" + k);
  }
  for (const auto& [k, v] : suite.defaults) config.params.try_emplace(k, v);
  if (config.replicas < 0) throw std::invalid_argument("--replicas must be >= 1");
  if (config.replicas == 0) config.replicas = suite.replicas;
  suite.check(config.params);
  return config;
}

SuiteResult run_suite(const SuiteConfig& config) { return find(config.suite).run(config); }

}  // namespace parkphase::harness
