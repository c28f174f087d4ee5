#pragma once

#include <cstddef>
#include <cstdint>

#include "tdmarel/run_law.hpp"

namespace tdmarel {

/// Largest profile enumerate_exact accepts (2^25 sequences).
inline constexpr std::size_t kMaxEnumerationCycles = 25;

struct EnumerationResult {
  double failing_mass = 0.0;  // P(longest run >= k)
  double total_mass = 0.0;    // sums to 1 up to rounding
};

/// Walks every error/success sequence of the profile and accumulates the
/// probability of those whose longest error run reaches k.
/// Throws InvalidParameterError for k == 0 or n > kMaxEnumerationCycles.
EnumerationResult enumerate_outcomes(const ErrorProfile& profile, std::size_t k);

double enumerate_exact(const ErrorProfile& profile, std::size_t k);

struct McEstimate {
  double p_hat = 0.0;
  std::uint64_t trials = 0;
  double std_err = 0.0;  // sqrt(p_hat (1 - p_hat) / trials)
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of P(longest run >= k).
///
/// Trial t draws from its own xoshiro256** stream, seeded through SplitMix64
/// from (seed, t). Results depend only on (profile, k, trials, seed), not on
/// `threads`. threads == 0 picks std::thread::hardware_concurrency().
McEstimate mc_estimate(const ErrorProfile& profile, std::size_t k, std::uint64_t trials,
                       std::uint64_t seed, unsigned threads = 0);

}  // namespace tdmarel
