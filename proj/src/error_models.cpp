#include "tdmarel/error_models.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tdmarel/errors.hpp"

namespace tdmarel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void validate(const ErrorModelSpec& spec) {
  std::visit(
      overloaded{
          [](const ConstantModel& m) {
            if (!(m.p >= 0.0 && m.p <= 1.0)) {
              throw InvalidParameterError("constant: 0 <= p <= 1 violated (p = " + num(m.p) + ")");
            }
          },
          [](const RadioModel& m) {
            if (!(m.a > 0.0)) throw InvalidParameterError("radio: a > 0 violated");
            if (!(m.b > 0.0)) throw InvalidParameterError("radio: b > 0 violated");
            if (!(m.a <= m.b)) {
              throw InvalidParameterError("radio: a <= b violated (a = " + num(m.a) +
                                          ", b = " + num(m.b) + ")");
            }
          },
          [](const RadarModel& m) {
            if (!(m.a - m.b > 0.0)) {
              throw InvalidParameterError("radar: a - b > 0 violated (a = " + num(m.a) +
                                          ", b = " + num(m.b) + ")");
            }
            if (!(m.a + m.b <= 1.0)) {
              throw InvalidParameterError("radar: a + b <= 1 violated (a = " + num(m.a) +
                                          ", b = " + num(m.b) + ")");
            }
            if (!(m.period_cycles > 0.0)) {
              throw InvalidParameterError("radar: t_cycles > 0 violated");
            }
          },
          [](const MeasuredModel& m) {
            // Surfaces the offending index through ErrorProfile's check.
            try {
              ErrorProfile{m.probs};
            } catch (const InvalidProbabilityError& e) {
              throw InvalidParameterError(std::string("measured profile: ") + e.what());
            }
          },
      },
      spec);
}

std::string describe(const ErrorModelSpec& spec) {
  return std::visit(
      overloaded{
          [](const ConstantModel& m) { return "constant(p=" + num(m.p) + ")"; },
          [](const RadioModel& m) { return "radio(a=" + num(m.a) + ", b=" + num(m.b) + ")"; },
          [](const RadarModel& m) {
            return "radar(a=" + num(m.a) + ", b=" + num(m.b) + ", t_cycles=" +
                   num(m.period_cycles) + ")";
          },
          [](const MeasuredModel& m) {
            return "file(" + m.source + ", n=" + std::to_string(m.probs.size()) + ")";
          },
      },
      spec);
}

ErrorProfile make_profile(const ErrorModelSpec& spec, std::size_t n) {
  if (n == 0) throw InvalidParameterError("profile length n must be >= 1");
  validate(spec);

  std::vector<double> probs(n);
  std::visit(
      overloaded{
          [&](const ConstantModel& m) { std::fill(probs.begin(), probs.end(), m.p); },
          [&](const RadioModel& m) {
            const double centre = (static_cast<double>(n) + 1.0) / 2.0;
            for (std::size_t i = 1; i <= n; ++i) {
              const double d = centre - static_cast<double>(i);
              probs[i - 1] = m.a / (d * d + m.b);
            }
          },
          [&](const RadarModel& m) {
            if (!(m.period_cycles < static_cast<double>(n))) {
              throw InvalidParameterError("radar: t_cycles < n violated (t_cycles = " +
                                          num(m.period_cycles) + ", n = " + std::to_string(n) +
                                          ")");
            }
            const double omega = 2.0 * std::numbers::pi / m.period_cycles;
            for (std::size_t i = 1; i <= n; ++i) {
              probs[i - 1] = m.a + m.b * std::sin(omega * static_cast<double>(i));
            }
          },
          [&](const MeasuredModel& m) {
            if (m.probs.size() != n) {
              throw LengthMismatchError("measured profile has " + std::to_string(m.probs.size()) +
                                        " cycles but the zone spans n = " + std::to_string(n));
            }
            probs = m.probs;
          },
      },
      spec);

  for (std::size_t i = 0; i < n; ++i) {
    if (!(probs[i] >= 0.0 && probs[i] <= 1.0)) {
      throw InvalidParameterError(describe(spec) + " yields p_" + std::to_string(i + 1) + " = " +
                                  num(probs[i]) + " outside [0, 1]");
    }
  }
  return ErrorProfile(std::move(probs));
}

ErrorProfile load_profile(std::istream& in) {
  std::vector<double> probs;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    double value = 0.0;
    const char* first = line.data();
    const char* last = first + line.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError(line_no, "cannot parse '" + line + "' as a probability");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ProfileRangeError(line_no, "probability " + line + " is outside [0, 1]");
    }
    probs.push_back(value);
  }
  if (in.bad()) throw IoError("error reading profile stream");
  if (probs.empty()) throw ParseError(0, "profile contains no data lines");
  return ErrorProfile(std::move(probs));
}

ErrorProfile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profile file '" + path + "'");
  return load_profile(in);
}

void write_profile(const ErrorProfile& profile, std::ostream& out) {
  char buf[32];
  for (double p : profile.probs()) {
    std::snprintf(buf, sizeof buf, "%.17g\n", p);
    out << buf;
  }
  if (!out) throw IoError("error writing profile");
}

}  // namespace tdmarel
