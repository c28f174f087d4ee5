#include "tdmarel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "tdmarel/errors.hpp"

namespace tdmarel {

namespace {

struct Walker {
  std::span<const double> p;
  std::size_t k;
  EnumerationResult acc;

  void visit(std::size_t i, double mass, std::size_t run, bool failed) {
    if (i == p.size()) {
      acc.total_mass += mass;
      if (failed) acc.failing_mass += mass;
      return;
    }
    const std::size_t err_run = run + 1;
    visit(i + 1, mass * p[i], err_run, failed || err_run >= k);
    visit(i + 1, mass * (1.0 - p[i]), 0, failed);
  }
};

constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
  }

  std::uint64_t operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }
  std::uint64_t s_[4];
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t a = seed;
  std::uint64_t b = trial ^ 0xD1B54A32D192ED03ULL;
  return splitmix64(a) ^ splitmix64(b);
}

// Cycle i errs when the top 53 bits of the draw fall below p_i * 2^53.
std::vector<std::uint64_t> error_thresholds(std::span<const double> probs) {
  constexpr double kScale = 9007199254740992.0;  // 2^53
  std::vector<std::uint64_t> t(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    t[i] = static_cast<std::uint64_t>(std::ldexp(probs[i], 53));
    if (probs[i] >= 1.0) t[i] = static_cast<std::uint64_t>(kScale);
  }
  return t;
}

bool run_trial(const std::vector<std::uint64_t>& thresholds, std::size_t k, Xoshiro256ss& rng) {
  std::size_t run = 0;
  for (std::uint64_t th : thresholds) {
    if ((rng() >> 11) < th) {
      if (++run >= k) return true;
    } else {
      run = 0;
    }
  }
  return false;
}

}  // namespace

EnumerationResult enumerate_outcomes(const ErrorProfile& profile, std::size_t k) {
  if (k == 0) throw InvalidParameterError("run threshold k must be >= 1");
  if (profile.size() > kMaxEnumerationCycles) {
    throw InvalidParameterError("enumeration limited to n <= " +
                                std::to_string(kMaxEnumerationCycles) + " (got n = " +
                                std::to_string(profile.size()) + ")");
  }
  Walker w{profile.probs(), k, {}};
  w.visit(0, 1.0, 0, false);
  return w.acc;
}

double enumerate_exact(const ErrorProfile& profile, std::size_t k) {
  return enumerate_outcomes(profile, k).failing_mass;
}

McEstimate mc_estimate(const ErrorProfile& profile, std::size_t k, std::uint64_t trials,
                       std::uint64_t seed, unsigned threads) {
  if (k == 0) throw InvalidParameterError("run threshold k must be >= 1");
  if (trials == 0) throw InvalidParameterError("trials must be >= 1");

  const auto thresholds = error_thresholds(profile.probs());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  // Contiguous trial ranges per worker; integer hit counts make the sum
  // independent of the split.
  std::vector<std::uint64_t> hits(threads, 0);
  auto work = [&](unsigned w) {
    const std::uint64_t begin = trials * w / threads;
    const std::uint64_t end = trials * (w + 1) / threads;
    std::uint64_t h = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      Xoshiro256ss rng(trial_seed(seed, t));
      if (run_trial(thresholds, k, rng)) ++h;
    }
    hits[w] = h;
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::uint64_t total = 0;
  for (auto h : hits) total += h;

  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.p_hat = static_cast<double>(total) / static_cast<double>(trials);
  est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  return est;
}

}  // namespace tdmarel
