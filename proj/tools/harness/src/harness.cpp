#include "parkphase/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace parkphase::harness {

std::string SuiteConfig::canonical() const {
  std::string s = "suite=" + suite + ";seed=" + std::to_string(seed) + ";replicas=" + std::to_string(replicas);
  for (const auto& [k, v] : params) s += ";" + k + "=" + v;
  return s;
}

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const GofReport& r) { return r.pass; });
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const Table& table, const std::string& hash) {
  const auto line = [&](const std::vector<std::string>& cells, const std::string& last) {
    for (const auto& c : cells) os << csv_field(c) << ',';
    os << csv_field(last) << "\r\n";
  };
  line(table.header, "config_hash");
  for (const auto& row : table.rows) line(row, hash);
}

namespace {

// Integers that fit in 64 bits and decimals become JSON numbers; anything else
// (big integers, exact fractions, labels) stays a string.
nlohmann::json cell_value(const std::string& s) {
  if (s.empty()) return nullptr;
  std::int64_t i = 0;
  const char* end = s.data() + s.size();
  if (auto r = std::from_chars(s.data(), end, i); r.ec == std::errc() && r.ptr == end) return i;
  if (s.find_first_of(".eE") != std::string::npos || s == "inf" || s == "nan") {
    double d = 0.0;
    if (auto r = std::from_chars(s.data(), end, d); r.ec == std::errc() && r.ptr == end && std::isfinite(d)) return d;
  }
  return s;
}

}  // namespace

void write_json(std::ostream& os, const SuiteConfig& config, const SuiteResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < result.table.header.size(); ++i) {
      obj[result.table.header[i]] = cell_value(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::json j;
  j["suite"] = config.suite;
  j["config"] = {{"seed", config.seed}, {"replicas", config.replicas}, {"params", config.params}};
  j["config_hash"] = config.hash();
  j["columns"] = result.table.header;
  j["rows"] = rows;
  j["reports"] = result.reports;
  j["pass"] = result.pass();
  os << j.dump(2) << '\n';
}

void emit(const SuiteConfig& config, const SuiteResult& result, Format format, const std::string& path) {
  const auto write = [&](std::ostream& os) {
    if (format == Format::csv) {
      write_csv(os, result.table, config.hash());
    } else {
      write_json(os, config, result);
    }
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace parkphase::harness
