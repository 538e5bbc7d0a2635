#include <gtest/gtest.h>

#include <sstream>

#include "parkphase/harness.hpp"

using namespace parkphase::harness;

TEST(Harness, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::ostringstream os;
  write_csv(os, Table{{"x", "y"}, {{"1", "2 3"}}}, "abc");
  EXPECT_EQ(os.str(), "x,y,config_hash\r\n1,2 3,abc\r\n");
}

TEST(Harness, CanonicalFormCoversDefaults) {
  SuiteConfig c;
  c.suite = "enumerate";
  const auto v = validate(c);
  EXPECT_EQ(v.canonical(), "suite=enumerate;seed=20240601;replicas=1;m=6");
  EXPECT_EQ(v.hash().size(), 16u);
  SuiteConfig explicit_default = c;
  explicit_default.params["m"] = "6";
  EXPECT_EQ(validate(explicit_default).hash(), v.hash());
  explicit_default.seed = 1;
  EXPECT_NE(validate(explicit_default).hash(), v.hash());
}

TEST(Harness, RejectsBadConfigBeforeRunning) {
  SuiteConfig c;
  c.suite = "nope";
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.suite = "enumerate";
  c.params["m"] = "9";
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.params["m"] = "six";
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.params = {{"colour", "red"}};
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.params = {{"mode", "equality"}};
  c.suite = "limit";
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.params = {{"stat", "R1"}, {"lambda", "-1"}};
  EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(Harness, SuitesReportAndPass) {
  SuiteConfig c;
  c.suite = "verify-identity";
  c.params["m-max"] = "12";
  const auto r = run_suite(validate(c));
  EXPECT_EQ(r.table.rows.size(), 55u);  // sum over m = 3..12 of m - 2
  ASSERT_EQ(r.reports.size(), 1u);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Harness, FailingReportGivesNonzeroExit) {
  SuiteResult r;
  r.reports.push_back(parkphase::GofReport::make("x", "abs", 1, 0.5, 0.1, 0, "h"));
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Harness, JsonIsOneObject) {
  SuiteConfig c;
  c.suite = "dist";
  c.params = {{"table", "phi"}, {"m", "5"}, {"n", "3"}};
  const auto v = validate(c);
  std::ostringstream os;
  write_json(os, v, run_suite(v));
  const auto s = os.str();
  EXPECT_NE(s.find("\"config_hash\": \"" + v.hash() + "\""), std::string::npos);
  EXPECT_NE(s.find("\"phi\": \""), std::string::npos);  // exact fractions stay strings
}

TEST(Harness, UnwritablePathIsNamed) {
  SuiteConfig c;
  c.suite = "verify-identity";
  const auto v = validate(c);
  try {
    emit(v, SuiteResult{}, Format::csv, "/nonexistent-dir/out.csv");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
  }
}

TEST(Harness, DoublesRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}
