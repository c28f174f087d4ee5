#pragma once

// Hand-rolled generators and brute-force oracles shared by the test suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tdmarel/run_law.hpp"

namespace tdmarel::testing {

inline std::vector<double> random_probs(std::mt19937_64& rng, std::size_t n, double lo = 0.0,
                                        double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> p(n);
  for (auto& x : p) x = u(rng);
  return p;
}

/// A profile that mixes exact zeros, exact ones and interior values.
inline std::vector<double> spiky_probs(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(n);
  for (auto& x : p) {
    const int c = pick(rng);
    x = c == 0 ? 0.0 : c == 1 ? 1.0 : u(rng);
  }
  return p;
}

/// P(longest run of ones >= k), or its complement when `surviving` is set,
/// by summing over all 2^n bit patterns. Independent of the library: no
/// recurrence, no recursion.
inline double brute_force_failure(const std::vector<double>& p, std::size_t k,
                                  bool surviving = false) {
  const std::size_t n = p.size();
  long double failing = 0.0L;  // extended precision keeps the oracle below 1e-15
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    long double mass = 1.0L;
    std::size_t run = 0;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool err = (mask >> i) & 1U;
      mass *= err ? static_cast<long double>(p[i]) : 1.0L - p[i];
      run = err ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    if ((longest >= k) != surviving) failing += mass;
  }
  return static_cast<double>(failing);
}

}  // namespace tdmarel::testing
