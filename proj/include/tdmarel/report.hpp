#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tdmarel/mission.hpp"

namespace tdmarel {

/// Grid endpoints within this many ms of `end` are kept.
inline constexpr double kGridTolerance = 1e-9;

struct SweepSpec {
  double t_cyc_start_ms = 0.0;
  double t_cyc_end_ms = 0.0;
  double t_cyc_step_ms = 0.0;
  double t_max_ms = 0.0;
  EmiZone zone;
};

/// t_cyc values start, start + step, ..., up to end (inclusive within
/// kGridTolerance). Throws InvalidParameterError on an invalid grid.
std::vector<double> sweep_grid(const SweepSpec& spec);

struct FailureReport {
  std::vector<FailureRow> rows;  // strictly ascending t_cyc_ms
  std::string model;
  double t_z_ms = 0.0;
  double t_max_ms = 0.0;
  ThresholdConvention convention = ThresholdConvention::Tables;
};

FailureReport run_sweep(const SweepSpec& spec,
                        ThresholdConvention convention = ThresholdConvention::Tables);

/// "%.6f" with trailing zeros (and a bare trailing point) removed.
std::string format_t_cyc(double t_cyc_ms);
/// Nine significant digits, lowercase e, no exponent sign for positive
/// exponents and no leading zeros: 3.30000000e-9, 1.50000000e0.
std::string format_probability(double p);

/// Header `t_cyc_ms,n,k_tol,p_fail`, then one line per row, LF endings.
void emit_csv(const FailureReport& report, std::ostream& out);

/// `# t_cyc_ms p_fail` then "t_cyc p_fail" lines.
void emit_plot_data(const FailureReport& report, std::ostream& out);

/// `# i p_i` then "i p_i" lines for i = 1..n.
void emit_profile_plot(const ErrorProfile& profile, std::ostream& out);

/// Aligned human-readable table with a metadata preamble.
void emit_pretty(const FailureReport& report, std::ostream& out);

/// Parses what emit_csv writes. Throws ParseError on malformed input.
std::vector<FailureRow> parse_csv(std::istream& in);

}  // namespace tdmarel
