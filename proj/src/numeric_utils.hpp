#pragma once

#include <cmath>

namespace casimir4d::detail {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// ln(1 - exp(-t)) for t > 0, accurate at both ends (Maechler 2012).
inline double log1mexp(double t) noexcept {
  constexpr double kLn2 = 0.693147180559945309417232121458;
  return t <= kLn2 ? std::log(-std::expm1(-t)) : std::log1p(-std::exp(-t));
}

}  // namespace casimir4d::detail
