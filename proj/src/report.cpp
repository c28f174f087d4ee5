#include "tdmarel/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "tdmarel/errors.hpp"

namespace tdmarel {

namespace {

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("error writing report output");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

template <class T>
T parse_field(const std::string& s, std::size_t line_no, const char* name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line_no, std::string("bad ") + name + " field '" + s + "'");
  }
  return value;
}

}  // namespace

std::vector<double> sweep_grid(const SweepSpec& spec) {
  if (!(spec.t_cyc_start_ms > 0.0)) throw InvalidParameterError("sweep: start > 0 violated");
  if (!(spec.t_cyc_step_ms > 0.0)) throw InvalidParameterError("sweep: step > 0 violated");
  if (!(spec.t_cyc_start_ms <= spec.t_cyc_end_ms + kGridTolerance)) {
    throw InvalidParameterError("sweep: start <= end violated");
  }
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double t = spec.t_cyc_start_ms + static_cast<double>(i) * spec.t_cyc_step_ms;
    if (t > spec.t_cyc_end_ms + kGridTolerance) break;
    grid.push_back(t);
  }
  return grid;
}

FailureReport run_sweep(const SweepSpec& spec, ThresholdConvention convention) {
  FailureReport report;
  report.model = describe(spec.zone.model);
  report.t_z_ms = spec.zone.passing_time_ms();
  report.t_max_ms = spec.t_max_ms;
  report.convention = convention;
  for (double t_cyc : sweep_grid(spec)) {
    report.rows.push_back(
        zone_failure_probability(spec.zone, TdmaTiming{t_cyc, spec.t_max_ms}, convention));
  }
  return report;
}

std::string format_t_cyc(double t_cyc_ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", t_cyc_ms);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8e", p);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;  // inf / nan
  std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  bool negative = false;
  if (!exponent.empty() && (exponent[0] == '+' || exponent[0] == '-')) {
    negative = exponent[0] == '-';
    exponent.erase(0, 1);
  }
  exponent.erase(0, std::min(exponent.find_first_not_of('0'), exponent.size() - 1));
  return mantissa + "e" + (negative ? "-" : "") + exponent;
}

void emit_csv(const FailureReport& report, std::ostream& out) {
  out << "t_cyc_ms,n,k_tol,p_fail\n";
  for (const FailureRow& r : report.rows) {
    out << format_t_cyc(r.t_cyc_ms) << ',' << r.n << ',' << r.k_tol << ','
        << format_probability(r.p_fail) << '\n';
  }
  check_stream(out);
}

void emit_plot_data(const FailureReport& report, std::ostream& out) {
  out << "# t_cyc_ms p_fail\n";
  for (const FailureRow& r : report.rows) {
    out << format_t_cyc(r.t_cyc_ms) << ' ' << format_probability(r.p_fail) << '\n';
  }
  check_stream(out);
}

void emit_profile_plot(const ErrorProfile& profile, std::ostream& out) {
  out << "# i p_i\n";
  for (std::size_t i = 1; i <= profile.size(); ++i) {
    out << i << ' ' << format_probability(profile.p(i)) << '\n';
  }
  check_stream(out);
}

void emit_pretty(const FailureReport& report, std::ostream& out) {
  out << "model:      " << report.model << '\n'
      << "t_z_ms:     " << format_t_cyc(report.t_z_ms) << '\n'
      << "t_max_ms:   " << format_t_cyc(report.t_max_ms) << '\n'
      << "convention: " << to_string(report.convention) << "\n\n";
  out << std::right << std::setw(10) << "T_cyc(ms)" << std::setw(8) << "n" << std::setw(8)
      << "k_tol" << std::setw(18) << "P_fail" << '\n';
  for (const FailureRow& r : report.rows) {
    out << std::setw(10) << format_t_cyc(r.t_cyc_ms) << std::setw(8) << r.n << std::setw(8)
        << r.k_tol << std::setw(18) << format_probability(r.p_fail) << '\n';
  }
  check_stream(out);
}

std::vector<FailureRow> parse_csv(std::istream& in) {
  std::vector<FailureRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "t_cyc_ms,n,k_tol,p_fail") throw ParseError(1, "unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 4) throw ParseError(line_no, "expected 4 fields");
    FailureRow r;
    r.t_cyc_ms = parse_field<double>(f[0], line_no, "t_cyc_ms");
    r.n = parse_field<std::size_t>(f[1], line_no, "n");
    r.k_tol = parse_field<std::size_t>(f[2], line_no, "k_tol");
    r.k_fail = r.k_tol + 1;
    r.p_fail = parse_field<double>(f[3], line_no, "p_fail");
    rows.push_back(r);
  }
  if (line_no == 0) throw ParseError(0, "empty CSV");
  return rows;
}

}  // namespace tdmarel
