#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "config.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace flopgw::cli;

TEST(CliConfig, ParseRange) {
  EXPECT_EQ(parse_range("1..3"), std::make_pair(1, 3));
  EXPECT_EQ(parse_range("4"), std::make_pair(4, 4));
  EXPECT_THROW(parse_range("a..3"), UsageError);
  EXPECT_THROW(parse_range("1..3x"), UsageError);
}

TEST(CliConfig, ParseSample) {
  const auto [a, b] = parse_sample("0.3,0 0.7,-0.1");
  EXPECT_DOUBLE_EQ(a.real(), 0.3);
  EXPECT_DOUBLE_EQ(b.imag(), -0.1);
  EXPECT_THROW(parse_sample("0.3,0"), UsageError);
}

TEST(CliConfig, DefaultsAndValidation) {
  RunConfig cfg;
  EXPECT_EQ(cfg.r_min, 1);
  EXPECT_EQ(cfg.r_max, 3);
  EXPECT_EQ(cfg.order, 10);
  EXPECT_EQ(cfg.dmax, 10);
  EXPECT_EQ(cfg.rmatrix_order, 2);
  EXPECT_NO_THROW(validate(cfg));
  cfg.dmax = 0;
  EXPECT_THROW(validate(cfg), UsageError);
}

TEST(CliConfig, EnvFileOverlay) {
  const std::string path = testing::TempDir() + "flopgw_cfg.json";
  std::ofstream(path) << R"({"r": "2..4", "dmax": 6, "format": "csv"})";
  setenv("FLOPGW_CONFIG", path.c_str(), 1);
  RunConfig cfg;
  apply_json(cfg, *load_env_config());
  unsetenv("FLOPGW_CONFIG");
  EXPECT_EQ(cfg.r_min, 2);
  EXPECT_EQ(cfg.r_max, 4);
  EXPECT_EQ(cfg.dmax, 6);
  EXPECT_EQ(cfg.format, Format::csv);
  EXPECT_EQ(cfg.order, 10);
  EXPECT_FALSE(load_env_config().has_value());
  EXPECT_THROW(apply_json(cfg, nlohmann::json{{"format", "xml"}}), UsageError);
}

TEST(CliReport, EmptyJson) {
  std::ostringstream os;
  emit(Report{"flop", {}, {}, 0.0}, Format::json, os);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_EQ(j["suite"], "flop");
  EXPECT_TRUE(j["entries"].is_array());
  EXPECT_TRUE(j["entries"].empty());
  EXPECT_FALSE(j.contains("seconds"));
}

TEST(CliReport, TextMarks) {
  Report rep{"x", {}, {{"a", "x/a", {{"r", 1}}, true, "0"}, {"b", "x/b", {}, false, "1/2"}}, 0.0};
  std::ostringstream os;
  emit(rep, Format::text, os);
  EXPECT_EQ(os.str(), "✓ a [x/a] r=1\n✗ b [x/b] residual: 1/2\n");
  EXPECT_FALSE(rep.all_pass());
}

TEST(CliReport, CyclotomicJson) {
  using flopgw::algebra::CycNumber;
  EXPECT_EQ(cyc_json(CycNumber(flopgw::algebra::Rational(-1, 3))), "-1/3");
  const auto z = cyc_json(CycNumber::zeta(flopgw::algebra::CyclotomicField::make(4), 1));
  EXPECT_EQ(z["order"], 4);
  EXPECT_EQ(z["coeffs"], nlohmann::json::array({"0/1", "1/1"}));
}

TEST(CliTable, GenusOneCsv) {
  RunConfig cfg;
  cfg.r_min = cfg.r_max = 1;
  cfg.dmax = 5;
  cfg.format = Format::csv;
  std::ostringstream os;
  emit_genus1_table(cfg, os);
  EXPECT_EQ(os.str(), "d,invariant\n1,1/12\n2,1/24\n3,1/36\n4,1/48\n5,1/60\n");
}

TEST(CliSuite, DeterministicAndPassing) {
  RunConfig cfg;
  cfg.r_max = 2;
  std::ostringstream a, b;
  const auto r1 = run_suite("all", cfg);
  emit(r1, Format::json, a);
  emit(run_suite("all", cfg), Format::json, b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_TRUE(r1.all_pass());
  for (const auto& e : r1.entries) EXPECT_FALSE(e.anchor.empty());
  EXPECT_THROW(run_suite("nope", cfg), UsageError);
}

TEST(CliSuite, FailureIsReported) {
  RunConfig cfg;
  cfg.r_min = cfg.r_max = 1;
  cfg.tolerance = 1e-30;
  const auto rep = run_suite("batyrev", cfg);
  EXPECT_FALSE(rep.all_pass());
}
