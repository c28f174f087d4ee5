#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "tdmarel/error_models.hpp"

namespace tdmarel {

/// How the application tolerance T_max maps to a failure threshold.
///
/// Tables: k_tol = floor(T_max / T_cyc) cycles are tolerated and the
///   application fails iff the longest erroneous run reaches k_tol + 1.
///   This reproduces the published constant-p sweep.
/// Eq5: k = ceil(T_max / T_cyc) and the application fails iff the run
///   reaches k (so k_tol = k - 1).
enum class ThresholdConvention { Tables, Eq5 };

std::string to_string(ThresholdConvention c);

struct TdmaTiming {
  double t_cyc_ms = 0.0;
  double t_max_ms = 0.0;

  /// A single lost cycle already exceeds the tolerance.
  bool tolerance_below_cycle() const { return t_cyc_ms > t_max_ms; }
};

/// One perturbation zone, crossed at constant speed.
struct EmiZone {
  struct Length {
    double length_m = 0.0;
    double speed_mps = 0.0;
  };

  std::optional<double> t_z_ms;
  std::optional<Length> road;
  ErrorModelSpec model;

  static EmiZone from_time(double t_z_ms, ErrorModelSpec model);
  static EmiZone from_length(double length_m, double speed_mps, ErrorModelSpec model);

  /// Passing-through time in ms; 1000 * length / speed for road lengths.
  double passing_time_ms() const;
};

struct FailureRow {
  double t_cyc_ms = 0.0;
  std::size_t n = 0;
  std::size_t k_tol = 0;   // longest tolerated erroneous run
  std::size_t k_fail = 0;  // run length that fails the application
  double p_fail = 0.0;
};

/// Worst-case number of cycles touched by a zone: ceil(t_z / t_cyc) + 2.
/// The two extra cycles cover the boundary cycle corrupted at zone exit and
/// the late consumption of the next valid cycle's last replica.
std::size_t zone_to_cycles(double t_z_ms, double t_cyc_ms);

/// floor(t_max / t_cyc): consecutive erroneous cycles the application survives.
std::size_t tolerance_to_k(double t_max_ms, double t_cyc_ms);

/// Failure run length for the given convention.
std::size_t failure_threshold(double t_max_ms, double t_cyc_ms, ThresholdConvention c);

FailureRow zone_failure_probability(const EmiZone& zone, const TdmaTiming& timing,
                                    ThresholdConvention convention = ThresholdConvention::Tables);

/// Probability that at least one of several independent zones fails the
/// application: 1 - prod(1 - p_fail_j). Full recovery between zones.
double compose_zones(std::span<const FailureRow> rows);

}  // namespace tdmarel
