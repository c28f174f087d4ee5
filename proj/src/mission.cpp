#include "tdmarel/mission.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tdmarel/errors.hpp"

namespace tdmarel {

namespace {

// Ratios such as 40 / 0.1 are not exact in binary; snap values within this
// distance of an integer before rounding.
constexpr double kRatioSnap = 1e-9;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << name << " must be positive and finite (got " << v << ")";
    throw InvalidParameterError(os.str());
  }
}

std::size_t ceil_ratio(double num, double den) {
  return static_cast<std::size_t>(std::ceil(num / den - kRatioSnap));
}

std::size_t floor_ratio(double num, double den) {
  return static_cast<std::size_t>(std::floor(num / den + kRatioSnap));
}

}  // namespace

std::string to_string(ThresholdConvention c) {
  return c == ThresholdConvention::Tables ? "tables" : "eq5";
}

EmiZone EmiZone::from_time(double t_z_ms, ErrorModelSpec model) {
  require_positive(t_z_ms, "t_z_ms");
  EmiZone z;
  z.t_z_ms = t_z_ms;
  z.model = std::move(model);
  return z;
}

EmiZone EmiZone::from_length(double length_m, double speed_mps, ErrorModelSpec model) {
  require_positive(length_m, "length_m");
  require_positive(speed_mps, "speed_mps");
  EmiZone z;
  z.road = Length{length_m, speed_mps};
  z.model = std::move(model);
  return z;
}

double EmiZone::passing_time_ms() const {
  if (t_z_ms.has_value() == road.has_value()) {
    throw InvalidParameterError("zone needs exactly one of t_z_ms or length_m/speed_mps");
  }
  if (t_z_ms) {
    require_positive(*t_z_ms, "t_z_ms");
    return *t_z_ms;
  }
  require_positive(road->length_m, "length_m");
  require_positive(road->speed_mps, "speed_mps");
  return 1000.0 * road->length_m / road->speed_mps;
}

std::size_t zone_to_cycles(double t_z_ms, double t_cyc_ms) {
  require_positive(t_z_ms, "t_z_ms");
  require_positive(t_cyc_ms, "t_cyc_ms");
  return ceil_ratio(t_z_ms, t_cyc_ms) + 2;
}

std::size_t tolerance_to_k(double t_max_ms, double t_cyc_ms) {
  require_positive(t_max_ms, "t_max_ms");
  require_positive(t_cyc_ms, "t_cyc_ms");
  return floor_ratio(t_max_ms, t_cyc_ms);
}

std::size_t failure_threshold(double t_max_ms, double t_cyc_ms, ThresholdConvention c) {
  if (c == ThresholdConvention::Tables) return tolerance_to_k(t_max_ms, t_cyc_ms) + 1;
  require_positive(t_max_ms, "t_max_ms");
  require_positive(t_cyc_ms, "t_cyc_ms");
  return ceil_ratio(t_max_ms, t_cyc_ms);
}

FailureRow zone_failure_probability(const EmiZone& zone, const TdmaTiming& timing,
                                    ThresholdConvention convention) {
  FailureRow row;
  row.t_cyc_ms = timing.t_cyc_ms;
  row.n = zone_to_cycles(zone.passing_time_ms(), timing.t_cyc_ms);
  row.k_fail = failure_threshold(timing.t_max_ms, timing.t_cyc_ms, convention);
  row.k_tol = row.k_fail - 1;
  row.p_fail = failure_probability(make_profile(zone.model, row.n), row.k_fail);
  return row;
}

double compose_zones(std::span<const FailureRow> rows) {
  if (rows.empty()) throw InvalidParameterError("compose_zones needs at least one zone");
  // Accumulated as f + g(1 - f) with f >= g rather than 1 - prod(1 - p):
  // exact for a single zone and never below the largest term.
  double failed = 0.0;
  for (const FailureRow& r : rows) {
    if (!(r.p_fail >= 0.0 && r.p_fail <= 1.0)) {
      throw InvalidProbabilityError("zone failure probability outside [0, 1]");
    }
    const double hi = std::max(failed, r.p_fail);
    const double lo = std::min(failed, r.p_fail);
    failed = hi + lo * (1.0 - hi);
  }
  return failed;
}

}  // namespace tdmarel
