#pragma once

#include <utility>

namespace sparseci {

/// A probability value, validated to lie in [0,1] on construction.
/// Converts implicitly to double so arithmetic on probabilities stays natural.
class Probability {
 public:
  Probability(double v);  // throws std::domain_error outside [0,1] or on NaN
  operator double() const noexcept { return value_; }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Standard normal density.
double std_normal_pdf(double z) noexcept;

/// Standard normal c.d.f. Phi(z).
/// Evaluated through the complementary error function, so the result keeps
/// full relative accuracy in the lower tail (needed for arguments around
/// Phi^{-1}(1e-6) and beyond). Absolute error <= 1e-15 for |z| <= 8.
/// Throws std::domain_error on non-finite input.
Probability std_normal_cdf(double z);

/// log Phi(z), stable arbitrarily deep into the lower tail.
double log_std_normal_cdf(double z);

/// Upper tail 1 - Phi(z) with full relative accuracy for large z.
double std_normal_upper_tail(double z);

/// Standard normal quantile Phi^{-1}(p) for p in (0,1).
/// Rational initial approximation (Wichura, AS 241) followed by two Newton
/// corrections on Phi(z) - p; round trip |Phi(Phi^{-1}(p)) - p| stays below
/// 1e-14 * max(p, 1-p). Throws std::domain_error for p in {0,1}.
double std_normal_quantile(Probability p);

/// Sandwich bounds for the Gaussian upper tail: returns (lower, upper) with
///   lower < 1 - Phi(y) <= upper,
/// lower = sqrt(2/pi) e^{-y^2/2} / (y + sqrt(y^2 + 4)),
/// upper = sqrt(2/pi) e^{-y^2/2} / (y + sqrt(y^2 + 8/pi)).
/// Requires y > 0.
std::pair<Probability, Probability> tail_sandwich(double y);

/// Sandwich bounds for the Gaussian quantile: returns (lower, upper) with
///   lower <= Phi^{-1}(1 - 1/t) <= upper,
/// lower = sqrt((2 log t - log log t - C)_+), upper = sqrt(2 log t - log log t),
/// where C = 2 log 4 + log pi. Requires t > 2.
std::pair<double, double> quantile_sandwich(double t);

}  // namespace sparseci
