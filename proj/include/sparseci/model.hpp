#pragma once

#include <cstdint>
#include <vector>

namespace sparseci {

/// Full experiment configuration for the Gaussian mean model X ~ N(theta, sigma^2 I).
///   d           dimension
///   s           sparsity budget (number of allowed nonzeros), 1 <= s <= d
///   a           minimum nonzero signal magnitude, a > 0
///   sigma       known noise standard deviation
///   alpha       non-coverage level of the confidence set, in (0,1)
///   alpha_prime selector tolerance, in (0, alpha)
///   delta       target true negative rate of the selector, in (0,1)
struct ProblemParams {
  std::int64_t d = 0;
  std::int64_t s = 0;
  double a = 0.0;
  double sigma = 1.0;
  double alpha = 0.05;
  double alpha_prime = 0.025;
  double delta = 0.7;

  void validate() const;  // throws std::invalid_argument
  double snr() const { return a / sigma; }
};

enum class Side { one_sided, two_sided };
enum class SignPattern { all_positive, all_negative, alternating };

/// A mean vector together with the parameter space it was declared to live in.
/// Construction checks membership: at most s nonzeros, each >= a (one-sided)
/// or |.| >= a (two-sided).
class MeanVector {
 public:
  MeanVector(std::vector<double> theta, Side side, std::int64_t s, double a);

  const std::vector<double>& theta() const noexcept { return theta_; }
  Side side() const noexcept { return side_; }
  std::int64_t dim() const noexcept { return static_cast<std::int64_t>(theta_.size()); }
  const std::vector<std::int32_t>& support() const noexcept { return support_; }

 private:
  std::vector<double> theta_;
  Side side_;
  std::vector<std::int32_t> support_;
};

/// One draw X ~ N(theta, sigma^2 I).
struct Observation {
  std::vector<double> x;
  double sigma = 1.0;

  std::int64_t dim() const noexcept { return static_cast<std::int64_t>(x.size()); }
};

/// A sparse confidence set: a selected index set S plus per-index bounds.
/// For j not in S the interval is exactly {0} (lower = upper = 0); one-sided
/// constructors produce upper = +inf on S.
struct SparseConfidenceSet {
  std::vector<std::int32_t> selected;  // sorted, unique
  std::vector<double> lower;
  std::vector<double> upper;

  std::int64_t dim() const noexcept { return static_cast<std::int64_t>(lower.size()); }
  /// Membership test: theta_j == 0 off S and lower_j <= theta_j <= upper_j on S.
  bool covers(const MeanVector& mean) const;
};

/// theta with the first s coordinates set to +-snr*sigma (per sign pattern)
/// and the rest zero. AllPositive yields a one-sided vector, the other
/// patterns two-sided ones; membership against (params.s, params.a) is checked.
MeanVector make_spike_vector(const ProblemParams& params, double snr, SignPattern pattern);

/// Deterministic sampling of X ~ N(theta, sigma^2 I): the same (theta, sigma,
/// seed) always yields bit-identical output regardless of call context.
Observation sample_observation(const MeanVector& theta, double sigma, std::uint64_t seed);

// Counter-based generator primitives (SplitMix64 stream in counter form).
// Pure functions of their inputs, so replications can be evaluated in any
// order or on any number of workers without changing the draws.
std::uint64_t counter_hash(std::uint64_t key, std::uint64_t counter) noexcept;
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t hi, std::uint64_t lo) noexcept;
double counter_uniform(std::uint64_t key, std::uint64_t counter) noexcept;  // (0,1)
double counter_normal(std::uint64_t key, std::uint64_t counter);            // N(0,1)

}  // namespace sparseci
