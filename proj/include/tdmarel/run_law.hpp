#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tdmarel {

/// Per-cycle error probabilities p_1..p_n of one zone. Every entry lies in
/// [0, 1]; the constructor enforces it.
class ErrorProfile {
 public:
  ErrorProfile() = default;
  explicit ErrorProfile(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  bool empty() const noexcept { return probs_.empty(); }

  /// 1-based access, matching cycle numbering.
  double p(std::size_t cycle) const { return probs_.at(cycle - 1); }
  /// 1 - p_i, with q_0 = 1.
  double q(std::size_t cycle) const { return cycle == 0 ? 1.0 : 1.0 - p(cycle); }

  std::span<const double> probs() const noexcept { return probs_; }

  double min() const;
  double max() const;

  friend bool operator==(const ErrorProfile&, const ErrorProfile&) = default;

 private:
  std::vector<double> probs_;
};

/// u_j = P(L_j < k) for j = 0..n, where L_j is the longest run of erroneous
/// cycles among the first j.
class RunLawTable {
 public:
  RunLawTable(std::size_t k, std::vector<double> values)
      : k_(k), values_(std::move(values)) {}

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return values_.size() - 1; }

  double operator[](std::size_t j) const { return values_.at(j); }
  double reliability() const { return values_.back(); }
  double failure() const { return 1.0 - values_.back(); }

  std::span<const double> values() const noexcept { return values_; }

 private:
  std::size_t k_;
  std::vector<double> values_;
};

/// Exact law of the longest error run, by the first-passage recurrence
///
///   u_j = u_{j-1} - lambda_j * u_{j-k-1},   j >= k
///   lambda_j = q_{j-k} * p_{j-k+1} * ... * p_j   (q_0 = 1, u_{-1} = 1)
///
/// with u_j = 1 for j < k. O(n*k); products are recomputed per j so zero
/// probabilities need no special handling.
///
/// Throws InvalidParameterError when k == 0.
RunLawTable longest_run_law(const ErrorProfile& profile, std::size_t k);

/// P(L_n >= k_fail) = 1 - u_n(k_fail).
double failure_probability(const ErrorProfile& profile, std::size_t k_fail);

/// Closed-form reliability R(k, n; p) of a linear consecutive-k-out-of-n:F
/// system with identical component failure probability p:
///
///   sum_{m=0}^{floor((n+1)/(k+1))} (-1)^m p^{mk} q^{m-1}
///       [ C(n-mk, m-1) + q C(n-mk, m) ]
///
/// using C(a, b) = 0 for b < 0 or b > a, so the m = 0 term is exactly 1.
/// The sum is accumulated with 50 significant digits because its terms
/// cancel heavily for large n with moderate p. Beyond a few hundred cycles
/// the cancellation can outgrow even that; prefer longest_run_law there.
double reliability_constant_p(std::size_t n, std::size_t k, double p);

/// Checks that the run law under `lo` dominates the one under `hi` at every
/// j, as required when hi is pointwise >= lo. Returns false only on a
/// numerical defect; invalid inputs throw LengthMismatchError or
/// NotDominatingError.
bool stochastic_dominance_check(const ErrorProfile& lo, const ErrorProfile& hi,
                                std::size_t k, double slack = 1e-12);

}  // namespace tdmarel
