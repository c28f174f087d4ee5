#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "tdmarel/run_law.hpp"

namespace tdmarel {

// Every cycle of the zone errs with the same probability.
struct ConstantModel {
  double p = 0.0;
};

// Transmitter near the road; field falls off with the squared distance to
// the zone centre:  p_i = a / (((n+1)/2 - i)^2 + b).  Requires 0 < a <= b.
struct RadioModel {
  double a = 0.0;
  double b = 0.0;
};

// Rotating radar beam:  p_i = a + b sin(2 pi i / period_cycles).
// Requires a - b > 0, a + b <= 1 and 0 < period_cycles < n.
struct RadarModel {
  double a = 0.0;
  double b = 0.0;
  double period_cycles = 0.0;
};

// Profile measured in the field, used as-is. Its length fixes n.
struct MeasuredModel {
  std::vector<double> probs;
  std::string source;
};

using ErrorModelSpec = std::variant<ConstantModel, RadioModel, RadarModel, MeasuredModel>;

/// Throws InvalidParameterError naming the violated constraint. Radar period
/// against n is checked by make_profile.
void validate(const ErrorModelSpec& spec);

/// Short human-readable description, e.g. "radio(a=10, b=20)".
std::string describe(const ErrorModelSpec& spec);

/// Builds p_1..p_n for the model. Values outside [0, 1] are reported as an
/// InvalidParameterError, never clamped. n == 0 is rejected; a measured
/// model must have exactly n entries.
ErrorProfile make_profile(const ErrorModelSpec& spec, std::size_t n);

/// Reads one probability per line. Blank lines and lines starting with '#'
/// are skipped; CRLF is accepted. Throws ParseError for unparsable lines,
/// ProfileRangeError for values outside [0, 1] and ParseError(0, ...) for
/// input without data lines.
ErrorProfile load_profile(std::istream& in);
ErrorProfile load_profile_file(const std::string& path);

/// Writes the profile in the format load_profile reads, 17 significant digits.
void write_profile(const ErrorProfile& profile, std::ostream& out);

}  // namespace tdmarel
