// parkphase: command-line front end for the suites in parkphase/harness.hpp.
//
// Exit status: 0 when every report passes, 1 when some report fails, 2 for a
// usage or configuration error, 3 for a runtime failure such as I/O.

#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "parkphase/harness.hpp"

namespace {

const std::map<std::string, std::string> kDescriptions{
    {"simulate", "uniform parking runs; --dump-counts writes k, Y_k, C_k for replica 0"},
    {"enumerate", "exhaustive oracles over all m^n tries sequences for one m"},
    {"verify-identity", "exact check of the m^n block-size identity up to --m-max"},
    {"dist", "tables of phi (exact), the limit density f, or the largest-block CDF (pavlov)"},
    {"bijection-check", "round trips tree <-> confined scheme <-> forest, with counts"},
    {"coalescent", "chains from three constructions: equality, chain, transition, points"},
    {"limit", "lattice limit objects: B, R1, Sigma, decompose, size-biased"},
};

}  // namespace

int main(int argc, char** argv) {
  namespace h = parkphase::harness;
  CLI::App app{"Linear-probing parking: simulation, exact laws and limit checks"};
  app.require_subcommand(1);

  struct Common {
    std::uint64_t seed = h::kDefaultSeed;
    std::int64_t replicas = 0;
    std::string out;
    std::string format = "csv";
    bool fresh = false;
  } common;
  std::map<std::string, std::map<std::string, std::string>> values;

  for (const auto& name : h::suite_names()) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->add_option("--seed", common.seed, "random seed")->capture_default_str();
    sub->add_option("--replicas", common.replicas, "replica count (0 = suite default)");
    sub->add_option("--out", common.out, "output file (default stdout)");
    sub->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--fresh-seed", common.fresh, "draw the seed from the system entropy source");
    for (const auto& [key, def] : h::suite_defaults(name)) {
      sub->add_option("--" + key, values[name][key], def.empty() ? "" : "default " + def);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* chosen = app.get_subcommands().front();
  h::SuiteConfig config;
  config.suite = chosen->get_name();
  config.seed = common.seed;
  config.replicas = common.replicas;
  for (const auto& [key, v] : values[config.suite]) {
    if (chosen->count("--" + key) > 0) config.params[key] = v;
  }
  if (common.fresh) {
    std::random_device rd;
    config.seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    std::fprintf(stderr, "seed %llu\n", static_cast<unsigned long long>(config.seed));
  }

  const std::string suite = config.suite;
  try {
    config = h::validate(std::move(config));
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "parkphase %s: %s\n", suite.c_str(), e.what());
    return 2;
  }

  try {
    const auto result = h::run_suite(config);
    h::emit(config, result, common.format == "json" ? h::Format::json : h::Format::csv, common.out);
    for (const auto& r : result.reports) {
      std::fprintf(stderr, "[%s] %s %s=%s tol=%s n=%lld\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                   r.statistic.c_str(), h::format_double(r.value).c_str(), h::format_double(r.tolerance).c_str(),
                   static_cast<long long>(r.sample_size));
    }
    return result.exit_code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "parkphase %s: %s\n", config.suite.c_str(), e.what());
    return 3;
  }
}
