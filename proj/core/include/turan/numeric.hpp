#pragma once

#include <cmath>

namespace turan {

/// Neumaier-compensated sum that also tracks the sum of absolute values of
/// the terms, the natural scale for a relative residual.
template <class Real>
class TermSum {
 public:
  void add(Real term) noexcept {
    const Real t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::abs(term);
  }
  void sub(Real term) noexcept { add(-term); }

  Real value() const noexcept { return sum_ + comp_; }
  Real magnitude() const noexcept { return magnitude_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
  Real magnitude_ = 0;
};

/// |value| / (1 + magnitude) where both are mantissas sharing the binary
/// exponent `exponent`, so the "1" is 2^-exponent at mantissa scale.
inline double relative_to_scale(double value, double magnitude, int exponent) {
  const double one = std::ldexp(1.0, -exponent);
  const double denom = one + magnitude;
  if (!std::isfinite(denom)) return 0.0;
  return value / denom;
}

}  // namespace turan
