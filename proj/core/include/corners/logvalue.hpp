#pragma once

#include <cmath>
#include <limits>

// Log-domain arithmetic helpers.  Throughout the library, nonnegative
// quantities that can over/underflow (densities, polytope integrands,
// Vandermonde products) are carried as their natural logarithm, with
// -infinity encoding an exact zero.

namespace corners {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow; handles -inf operands.
inline double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = a > b ? a : b;
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

// log(1 - exp(-x)) for x > 0, stable in both the x->0 and x->inf regimes.
inline double log1mexp(double x) {
  if (x <= 0) return kNegInf;  // by convention: 1 - e^{-0} = 0
  static const double kLog2 = std::log(2.0);
  return x > kLog2 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
}

// log|e^{-a} - e^{-b}| for a, b >= 0, stable when a and b are close or large.
inline double log_abs_diff_exp_neg(double a, double b) {
  double lo = a < b ? a : b;
  return -lo + log1mexp(std::fabs(a - b));
}

// Streaming log-sum-exp accumulator for sums of nonnegative terms given in
// log form.  Rescales on the fly so the running sum stays representable.
class LogSum {
 public:
  void add(double lg) {
    if (lg == kNegInf) return;
    if (lg <= shift_) {
      sum_ += std::exp(lg - shift_);
      return;
    }
    // New dominant term: rescale the accumulated sum.
    sum_ = sum_ * std::exp(shift_ - lg) + 1.0;
    shift_ = lg;
  }

  // log of the accumulated sum; -inf if nothing was added.
  double log_value() const {
    if (sum_ == 0.0) return kNegInf;
    return shift_ + std::log(sum_);
  }

  bool empty() const { return sum_ == 0.0; }

 private:
  double shift_ = kNegInf;
  double sum_ = 0.0;
};

}  // namespace corners
