#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "tdmarel/config.hpp"
#include "tdmarel/errors.hpp"

namespace tdmarel {
namespace {

constexpr const char* kTable1 = R"({
  "tdma": {"t_cyc_ms": {"start": 4, "end": 10, "step": 0.25}, "t_max_ms": 40},
  "zones": [{"t_z_ms": 1500, "model": {"type": "constant", "p": 0.1}}]
})";

std::string config_error_path(const std::string& text, ConfigOptions opts = {}) {
  try {
    parse_config(text, opts);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(ParseConfig, SweepDocument) {
  const ParsedConfig cfg = parse_config(kTable1);
  const auto* spec = std::get_if<SweepSpec>(&cfg.request);
  ASSERT_NE(spec, nullptr);
  EXPECT_EQ(sweep_grid(*spec).size(), 25u);
  EXPECT_EQ(spec->t_max_ms, 40.0);
  EXPECT_EQ(spec->zone.passing_time_ms(), 1500.0);
  EXPECT_TRUE(cfg.warnings.empty());
}

TEST(ParseConfig, EvalComposeSimulate) {
  const auto eval = parse_config(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
    "zones": [{"length_m": 25, "speed_mps": 20, "model": {"type": "radio", "a": 10, "b": 20}}]})");
  const auto* e = std::get_if<EvalRequest>(&eval.request);
  ASSERT_NE(e, nullptr);
  EXPECT_DOUBLE_EQ(e->zone.passing_time_ms(), 1250.0);

  const auto compose = parse_config(R"({"tdma": {"t_cyc_ms": 5, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1500, "length_m": null, "model": {"type": "constant", "p": 0.1}},
              {"t_z_ms": 800, "model": {"type": "radar", "a": 0.3, "b": 0.2, "t_cycles": 20}}]})");
  const auto* c = std::get_if<ComposeRequest>(&compose.request);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->zones.size(), 2u);

  const auto sim = parse_config(R"({"tdma": {"t_cyc_ms": 5, "t_max_ms": 40},
    "zones": [{"t_z_ms": 100, "model": {"type": "constant", "p": 0.5}}],
    "simulate": {"trials": 1000, "seed": 18446744073709551615}})");
  const auto* s = std::get_if<SimulateRequest>(&sim.request);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->trials, 1000u);
  EXPECT_EQ(s->seed, 18446744073709551615ULL);
}

TEST(ParseConfig, RadarConstraintNamed) {
  try {
    parse_config(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
      "zones": [{"t_z_ms": 1500, "model": {"type": "radar", "a": 0.4, "b": 0.5, "t_cycles": 10}}]})");
    FAIL();
  } catch (const InvalidParameterError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("a - b > 0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("/zones/0/model"), std::string::npos) << msg;
  }
}

TEST(ParseConfig, AmbiguousDuration) {
  EXPECT_EQ(config_error_path(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1500, "length_m": 30, "speed_mps": 20,
               "model": {"type": "constant", "p": 0.1}}]})"),
            "/zones/0");
}

TEST(ParseConfig, MissingDuration) {
  EXPECT_EQ(config_error_path(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
    "zones": [{"length_m": 30, "model": {"type": "constant", "p": 0.1}}]})"),
            "/zones/0");
}

TEST(ParseConfig, SchemaErrorsCarryPointerPaths) {
  EXPECT_EQ(config_error_path("{"), "");
  EXPECT_EQ(config_error_path(R"({"zones": []})"), "");
  EXPECT_EQ(config_error_path(R"({"tdma": {"t_cyc_ms": "4", "t_max_ms": 40},
    "zones": [{"t_z_ms": 1, "model": {"type": "constant", "p": 0.1}}]})"),
            "/tdma/t_cyc_ms");
  EXPECT_EQ(config_error_path(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40}, "zones": []})"),
            "/zones");
  EXPECT_EQ(config_error_path(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1, "model": {"type": "laser"}}]})"),
            "/zones/0/model/type");
  EXPECT_EQ(config_error_path(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1, "model": {"type": "radio", "a": 10}}]})"),
            "/zones/0/model");
}

TEST(ParseConfig, UnknownKeysStrictAndLenient) {
  const std::string doc = R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40, "jitter": 1},
    "zones": [{"t_z_ms": 1500, "model": {"type": "constant", "p": 0.1, "a": 3}}]})";
  EXPECT_EQ(config_error_path(doc), "/tdma/jitter");
  ConfigOptions lenient;
  lenient.lenient = true;
  const ParsedConfig cfg = parse_config(doc, lenient);
  EXPECT_EQ(cfg.warnings.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<EvalRequest>(cfg.request));
}

TEST(ParseConfig, DomainViolations) {
  EXPECT_THROW(parse_config(R"({"tdma": {"t_cyc_ms": 0, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1, "model": {"type": "constant", "p": 0.1}}]})"),
               InvalidParameterError);
  EXPECT_THROW(parse_config(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1, "model": {"type": "radio", "a": 30, "b": 20}}]})"),
               InvalidParameterError);
  EXPECT_THROW(parse_config(R"({"tdma": {"t_cyc_ms": {"start": 4, "end": 3, "step": 1}, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1, "model": {"type": "constant", "p": 0.1}}]})"),
               InvalidParameterError);
}

TEST(ParseConfig, SlowCycleWarns) {
  const ParsedConfig cfg = parse_config(R"({"tdma": {"t_cyc_ms": 50, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1500, "model": {"type": "constant", "p": 0.1}}]})");
  ASSERT_EQ(cfg.warnings.size(), 1u);
}

TEST(ParseConfig, FileModelResolvesAgainstConfigDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "tdmarel_config_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "p.txt") << "0.5\n0.5\n0.5\n";
  std::ofstream(dir / "run.json")
      << R"({"tdma": {"t_cyc_ms": 1, "t_max_ms": 1},
             "zones": [{"t_z_ms": 1, "model": {"type": "file", "path": "p.txt"}}]})";
  const ParsedConfig cfg = parse_config_file(dir / "run.json");
  const auto& req = std::get<EvalRequest>(cfg.request);
  const FailureRow row = zone_failure_probability(req.zone, req.timing);
  EXPECT_EQ(row.n, 3u);
  EXPECT_DOUBLE_EQ(row.p_fail, 0.375);
  std::filesystem::remove_all(dir);
}

TEST(ParseConfig, MissingFiles) {
  EXPECT_THROW(parse_config_file("/nonexistent/run.json"), IoError);
  EXPECT_THROW(parse_config(R"({"tdma": {"t_cyc_ms": 4, "t_max_ms": 40},
    "zones": [{"t_z_ms": 1, "model": {"type": "file", "path": "/nonexistent/p.txt"}}]})"),
               IoError);
}

}  // namespace
}  // namespace tdmarel
