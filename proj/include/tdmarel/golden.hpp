#pragma once

#include <array>
#include <cstddef>

#include "tdmarel/report.hpp"

// Published reference sweeps for a 1500 ms zone and a 40 ms application
// tolerance, T_cyc from 4 ms to 10 ms in 0.25 ms steps.
namespace tdmarel::golden {

inline constexpr double kZoneMs = 1500.0;
inline constexpr double kToleranceMs = 40.0;
inline constexpr double kGridStartMs = 4.0;
inline constexpr double kGridEndMs = 10.0;
inline constexpr double kGridStepMs = 0.25;
inline constexpr double kConstantP = 0.1;

struct ConstantRow {
  double t_cyc_ms;
  double p_fail;
  std::size_t n;
  std::size_t k_tol;
};

// Constant-P, p = 0.1.
inline constexpr std::array<ConstantRow, 25> kConstantTable{{
    {4.00, 3.30e-09, 377, 10},   {4.25, 3.12e-08, 355, 9},    {4.50, 2.95e-07, 336, 8},
    {4.75, 2.79e-07, 318, 8},    {5.00, 2.65e-07, 302, 8},    {5.25, 2.53e-06, 288, 7},
    {5.50, 2.41e-06, 275, 7},    {5.75, 2.31e-05, 263, 6},    {6.00, 2.21e-05, 252, 6},
    {6.25, 2.12e-05, 242, 6},    {6.50, 2.04e-05, 233, 6},    {6.75, 1.98e-04, 225, 5},
    {7.00, 1.91e-04, 217, 5},    {7.25, 1.84e-04, 209, 5},    {7.50, 1.77e-04, 202, 5},
    {7.75, 1.72e-04, 196, 5},    {8.00, 1.67e-04, 190, 5},    {8.25, 0.00161977, 184, 4},
    {8.50, 0.00157484, 179, 4},  {8.75, 0.0015299, 174, 4},   {9.00, 0.00148497, 169, 4},
    {9.25, 0.00144902, 165, 4},  {9.50, 0.00140408, 160, 4},  {9.75, 0.00136813, 156, 4},
    {10.00, 0.00133218, 152, 4},
}};

struct RadioRow {
  double t_cyc_ms;
  double p_fail;        // a = 10, b = 20
  double p_fail_prime;  // a = 11, b = 19
  std::size_t n;
  std::size_t k_tol;
};

inline constexpr std::array<RadioRow, 25> kRadioTable{{
    {4.00, 2.22e-08, 8.19e-08, 377, 10},
    {4.25, 2.94e-07, 9.73e-07, 355, 9},
    {4.50, 3.30e-06, 9.82e-06, 336, 8},
    {4.75, 3.30e-06, 9.82e-06, 318, 8},
    {5.00, 3.30e-06, 9.82e-06, 302, 8},
    {5.25, 3.12e-05, 8.32e-05, 288, 7},
    {5.50, 3.12e-05, 8.32e-05, 275, 7},
    {5.75, 2.46e-04, 5.86e-04, 263, 6},
    {6.00, 2.46e-04, 5.86e-04, 252, 6},
    {6.25, 2.46e-04, 5.86e-04, 242, 6},
    {6.50, 2.46e-04, 5.86e-04, 233, 6},
    {6.75, 0.001609891, 0.00340238, 225, 5},
    {7.00, 0.001609891, 0.00340238, 217, 5},
    {7.25, 0.001609891, 0.00340238, 209, 5},
    {7.50, 0.001609891, 0.00340238, 202, 5},
    {7.75, 0.001609891, 0.00340238, 196, 5},
    {8.00, 0.001609891, 0.00340238, 190, 5},
    {8.25, 0.008690406, 0.01621666, 184, 4},
    {8.50, 0.008690406, 0.01621666, 179, 4},
    {8.75, 0.008690406, 0.01621666, 174, 4},
    {9.00, 0.008690406, 0.01621666, 169, 4},
    {9.25, 0.008690406, 0.01621666, 165, 4},
    {9.50, 0.008690406, 0.01621666, 160, 4},
    {9.75, 0.008690406, 0.01621666, 156, 4},
    {10.00, 0.008690406, 0.01621666, 152, 4},
}};

inline constexpr RadioModel kRadio{10.0, 20.0};
inline constexpr RadioModel kRadioPrime{11.0, 19.0};

inline SweepSpec preset(ErrorModelSpec model) {
  return SweepSpec{kGridStartMs, kGridEndMs, kGridStepMs, kToleranceMs,
                   EmiZone::from_time(kZoneMs, std::move(model))};
}

inline SweepSpec constant_preset() { return preset(ConstantModel{kConstantP}); }
inline SweepSpec radio_preset() { return preset(kRadio); }
inline SweepSpec radio_prime_preset() { return preset(kRadioPrime); }

}  // namespace tdmarel::golden
