#include "tdmarel/run_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tdmarel/errors.hpp"

namespace tdmarel {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbabilityError(std::string(what) + " = " + std::to_string(p) +
                                  " is outside [0, 1]");
  }
}

// The closed form alternates over terms that reach ~1e15 at n = 377, p = 0.5,
// k = 2 while the sum is ~1e-35; 50 significant digits absorb that.
using Wide = boost::multiprecision::cpp_bin_float_50;

// C(a, b), zero outside 0 <= b <= a.
Wide choose(long a, long b) {
  if (b < 0 || a < 0 || b > a) return Wide(0);
  b = std::min(b, a - b);
  Wide c = 1;
  for (long i = 1; i <= b; ++i) {
    c = c * (a - b + i) / i;
  }
  return c;
}

}  // namespace

ErrorProfile::ErrorProfile(std::vector<double> probs) : probs_(std::move(probs)) {
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0 && probs_[i] <= 1.0)) {
      throw InvalidProbabilityError("p_" + std::to_string(i + 1) + " = " +
                                    std::to_string(probs_[i]) + " is outside [0, 1]");
    }
  }
}

double ErrorProfile::min() const {
  return probs_.empty() ? 0.0 : *std::min_element(probs_.begin(), probs_.end());
}

double ErrorProfile::max() const {
  return probs_.empty() ? 0.0 : *std::max_element(probs_.begin(), probs_.end());
}

RunLawTable longest_run_law(const ErrorProfile& profile, std::size_t k) {
  if (k == 0) throw InvalidParameterError("run threshold k must be >= 1");

  const std::size_t n = profile.size();
  std::vector<double> u(n + 1, 1.0);

  for (std::size_t j = k; j <= n; ++j) {
    // lambda_j: a run of exactly k errors ends at j, preceded by a success
    // at j-k (or by the start of the zone).
    double lambda = profile.q(j - k);
    for (std::size_t i = j - k + 1; i <= j && lambda != 0.0; ++i) lambda *= profile.p(i);

    const double before = j >= k + 1 ? u[j - k - 1] : 1.0;
    // Rounding can push a vanishing tail a few ulps below zero.
    u[j] = std::max(0.0, u[j - 1] - lambda * before);
  }
  return RunLawTable(k, std::move(u));
}

double failure_probability(const ErrorProfile& profile, std::size_t k_fail) {
  return longest_run_law(profile, k_fail).failure();
}

double reliability_constant_p(std::size_t n, std::size_t k, double p) {
  require_probability(p, "p");
  if (k == 0) throw InvalidParameterError("run threshold k must be >= 1");
  if (p == 0.0 || n < k) return 1.0;
  if (p == 1.0) return 0.0;

  const Wide pw = p;
  const Wide qw = Wide(1) - pw;
  const auto nl = static_cast<long>(n);
  const auto kl = static_cast<long>(k);
  const long m_max = (nl + 1) / (kl + 1);

  Wide sum = 1;  // m = 0
  for (long m = 1; m <= m_max; ++m) {
    const long rest = nl - m * kl;
    const Wide bracket = choose(rest, m - 1) + qw * choose(rest, m);
    if (bracket == 0) continue;
    const Wide term = pow(pw, m * kl) * pow(qw, m - 1) * bracket;
    sum += (m % 2 == 0) ? term : Wide(-term);
  }
  return std::clamp(sum.convert_to<double>(), 0.0, 1.0);
}

bool stochastic_dominance_check(const ErrorProfile& lo, const ErrorProfile& hi,
                                std::size_t k, double slack) {
  if (lo.size() != hi.size()) {
    throw LengthMismatchError("profiles differ in length: " + std::to_string(lo.size()) +
                              " vs " + std::to_string(hi.size()));
  }
  for (std::size_t i = 1; i <= lo.size(); ++i) {
    if (hi.p(i) < lo.p(i)) {
      throw NotDominatingError("hi does not dominate lo at cycle " + std::to_string(i));
    }
  }
  const RunLawTable u_lo = longest_run_law(lo, k);
  const RunLawTable u_hi = longest_run_law(hi, k);
  for (std::size_t j = 0; j <= lo.size(); ++j) {
    if (u_lo[j] + slack < u_hi[j]) return false;
  }
  return true;
}

}  // namespace tdmarel
