#include <gtest/gtest.h>

#include <sstream>

#include "tdmarel/errors.hpp"
#include "tdmarel/golden.hpp"
#include "tdmarel/report.hpp"

namespace tdmarel {
namespace {

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(Formatting, CycleLength) {
  EXPECT_EQ(format_t_cyc(4.0), "4");
  EXPECT_EQ(format_t_cyc(4.25), "4.25");
  EXPECT_EQ(format_t_cyc(10.5), "10.5");
  EXPECT_EQ(format_t_cyc(1.0 / 3.0), "0.333333");
  EXPECT_EQ(format_t_cyc(1500), "1500");
}

TEST(Formatting, Probability) {
  EXPECT_EQ(format_probability(3.3e-9), "3.30000000e-9");
  EXPECT_EQ(format_probability(0.00133218), "1.33218000e-3");
  EXPECT_EQ(format_probability(0.5), "5.00000000e-1");
  EXPECT_EQ(format_probability(1.0), "1.00000000e0");
  EXPECT_EQ(format_probability(0.0), "0.00000000e0");
  EXPECT_EQ(format_probability(1.234567891e-120), "1.23456789e-120");
}

TEST(EmitCsv, SingleRow) {
  FailureReport r;
  r.rows.push_back({4, 377, 10, 11, 3.3e-9});
  std::ostringstream out;
  emit_csv(r, out);
  EXPECT_EQ(out.str(), "t_cyc_ms,n,k_tol,p_fail\n4,377,10,3.30000000e-9\n");
}

TEST(EmitCsv, EmptyReportIsHeaderOnly) {
  std::ostringstream out;
  emit_csv(FailureReport{}, out);
  EXPECT_EQ(out.str(), "t_cyc_ms,n,k_tol,p_fail\n");
}

TEST(SweepGrid, ReferenceGridHas25Points) {
  const auto g = sweep_grid(golden::constant_preset());
  ASSERT_EQ(g.size(), 25u);
  EXPECT_EQ(g.front(), 4.0);
  EXPECT_EQ(g.back(), 10.0);
}

TEST(SweepGrid, EndpointTolerance) {
  SweepSpec s = golden::constant_preset();
  s.t_cyc_start_ms = 0.1;
  s.t_cyc_step_ms = 0.1;
  s.t_cyc_end_ms = 0.3;  // 0.1 + 2 * 0.1 is 0.30000000000000004
  EXPECT_EQ(sweep_grid(s).size(), 3u);
  s.t_cyc_start_ms = s.t_cyc_end_ms = 4;
  EXPECT_EQ(sweep_grid(s).size(), 1u);
}

TEST(SweepGrid, InvalidGrids) {
  SweepSpec s = golden::constant_preset();
  s.t_cyc_step_ms = 0;
  EXPECT_THROW(sweep_grid(s), InvalidParameterError);
  s = golden::constant_preset();
  s.t_cyc_end_ms = 3;
  EXPECT_THROW(sweep_grid(s), InvalidParameterError);
  s = golden::constant_preset();
  s.t_cyc_start_ms = -1;
  EXPECT_THROW(sweep_grid(s), InvalidParameterError);
}

TEST(RunSweep, ConstantPresetRow) {
  const FailureReport r = run_sweep(golden::constant_preset());
  ASSERT_EQ(r.rows.size(), 25u);
  const FailureRow& row = r.rows[5];
  EXPECT_EQ(row.t_cyc_ms, 5.25);
  EXPECT_EQ(row.n, 288u);
  EXPECT_EQ(row.k_tol, 7u);
  EXPECT_NEAR(row.p_fail, 2.53e-6, 0.01 * 2.53e-6);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_LT(r.rows[i - 1].t_cyc_ms, r.rows[i].t_cyc_ms);
  }
}

TEST(RunSweep, CsvAndPlotLineCounts) {
  const FailureReport r = run_sweep(golden::constant_preset());
  std::ostringstream csv, plot;
  emit_csv(r, csv);
  emit_plot_data(r, plot);
  EXPECT_EQ(count_lines(csv.str()), 26u);
  EXPECT_EQ(count_lines(plot.str()), 26u);
  EXPECT_EQ(plot.str().rfind("# t_cyc_ms p_fail\n4 3.3", 0), 0u);
}

TEST(RunSweep, ByteIdenticalAcrossRuns) {
  std::ostringstream a, b;
  emit_csv(run_sweep(golden::radio_prime_preset()), a);
  emit_csv(run_sweep(golden::radio_prime_preset()), b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(RunSweep, Eq5ConventionKeepsCycleCounts) {
  const FailureReport t = run_sweep(golden::constant_preset());
  const FailureReport e = run_sweep(golden::constant_preset(), ThresholdConvention::Eq5);
  for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(t.rows[i].n, e.rows[i].n);
}

TEST(CsvRoundTrip, RecoversNineSignificantDigits) {
  for (const SweepSpec& spec : {golden::constant_preset(), golden::radio_preset()}) {
    const FailureReport r = run_sweep(spec);
    std::stringstream buf;
    emit_csv(r, buf);
    const auto rows = parse_csv(buf);
    ASSERT_EQ(rows.size(), r.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(rows[i].t_cyc_ms, r.rows[i].t_cyc_ms);
      EXPECT_EQ(rows[i].n, r.rows[i].n);
      EXPECT_EQ(rows[i].k_tol, r.rows[i].k_tol);
      EXPECT_NEAR(rows[i].p_fail, r.rows[i].p_fail, 5e-9 * r.rows[i].p_fail);
    }
  }
}

TEST(CsvRoundTrip, RejectsMalformed) {
  std::istringstream bad_header("a,b\n");
  EXPECT_THROW(parse_csv(bad_header), ParseError);
  std::istringstream bad_row("t_cyc_ms,n,k_tol,p_fail\n4,x,10,1e-9\n");
  EXPECT_THROW(parse_csv(bad_row), ParseError);
}

TEST(ProfilePlot, RadarAndRadioShapes) {
  std::ostringstream radar;
  emit_profile_plot(make_profile(RadarModel{0.3, 0.2, 10}, 25), radar);
  std::istringstream lines(radar.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "# i p_i");
  for (int i = 1; i <= 10; ++i) std::getline(lines, line);
  EXPECT_EQ(line.rfind("10 3.00000000e-1", 0), 0u);

  std::ostringstream radio;
  const ErrorProfile p = make_profile(RadioModel{10, 20}, 9);
  emit_profile_plot(p, radio);
  EXPECT_EQ(count_lines(radio.str()), 10u);
  EXPECT_NE(radio.str().find("\n1 " + format_probability(p.p(9)) + "\n"), std::string::npos);
  EXPECT_NE(radio.str().find("\n9 " + format_probability(p.p(1)) + "\n"), std::string::npos);
}

TEST(EmitPretty, ContainsMetadataAndRows) {
  std::ostringstream out;
  emit_pretty(run_sweep(golden::constant_preset()), out);
  EXPECT_NE(out.str().find("constant(p=0.1)"), std::string::npos);
  EXPECT_NE(out.str().find("convention: tables"), std::string::npos);
  EXPECT_NE(out.str().find("3.30400840e-9"), std::string::npos);
}

}  // namespace
}  // namespace tdmarel
