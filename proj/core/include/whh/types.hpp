#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace whh {

/// Weight parameter lambda in [0,1]. Density and moment operations require an
/// interior weight; mean operations extend to the endpoints by definition
/// (lambda=0 selects the first argument, lambda=1 the second).
class Weight {
 public:
  explicit Weight(double lambda) : lambda_(lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
      throw std::domain_error("Weight: lambda must be finite and in [0,1], got " +
                              std::to_string(lambda));
    }
  }

  double lambda() const noexcept { return lambda_; }
  bool interior() const noexcept { return lambda_ > 0.0 && lambda_ < 1.0; }
  Weight complement() const noexcept { return Weight(1.0 - lambda_); }

  void require_interior(const char* where) const {
    if (!interior()) {
      throw std::domain_error(std::string(where) + ": requires interior lambda in (0,1), got " +
                              std::to_string(lambda_));
    }
  }

 private:
  double lambda_;
};

/// Sub-interval [a,b] of [0,1] with a < b.
struct SubInterval {
  double a;
  double b;

  SubInterval(double a_, double b_) : a(a_), b(b_) {
    if (!(a >= 0.0) || !(b <= 1.0) || !(a < b)) {
      throw std::domain_error("SubInterval: need 0 <= a < b <= 1, got [" + std::to_string(a_) +
                              ", " + std::to_string(b_) + "]");
    }
  }

  static SubInterval unit() { return SubInterval(0.0, 1.0); }
  bool is_unit() const noexcept { return a == 0.0 && b == 1.0; }
};

/// Ordered pair of refinement coefficients, 0 <= lower <= upper.
struct CoefficientPair {
  double lower;
  double upper;

  CoefficientPair(double lo, double hi) : lower(lo), upper(hi) {
    if (!(lo >= 0.0) || !(lo <= hi)) {
      throw std::logic_error("CoefficientPair: need 0 <= lower <= upper, got (" +
                             std::to_string(lo) + ", " + std::to_string(hi) + ")");
    }
  }
};

}  // namespace whh
