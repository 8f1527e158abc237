#pragma once

#include <cmath>
#include <stdexcept>

namespace oppbounds {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = 1.57079632679489661923;

/// An angle restricted to [0, pi/2], the domain of every bound in this
/// library. Construction fails outside that interval.
class Radians {
public:
  explicit Radians(double v) : value_(v) {
    if (!(v >= 0.0 && v <= kHalfPi))
      throw std::domain_error("Radians: angle must lie in [0, pi/2]");
  }
  double value() const { return value_; }

private:
  double value_;
};

/// The positive shape parameter of the two-sided sine bound.
class PosParam {
public:
  explicit PosParam(double v) : value_(v) {
    if (!(v > 0.0))
      throw std::domain_error("PosParam: parameter must be positive");
  }
  double value() const { return value_; }

private:
  double value_;
};

/// Coefficients (a, b, c) of the generalized Cusa bound c sin x / (a + b cos x).
///
/// Requires a, b, c > 0 with 2b <= c <= a+b and additionally a >= 2b. The
/// extra constraint is needed for the strict bound to hold: a = b = 1, c = 2
/// satisfies 2b <= c <= a+b yet gives 2 sin x/(1+cos x) = 2 tan(x/2) > x.
struct CusaTriple {
  double a;
  double b;
  double c;

  CusaTriple(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0))
      throw std::domain_error("CusaTriple: coefficients must be positive");
    if (!(2.0 * b <= c && c <= a + b))
      throw std::domain_error("CusaTriple: requires 2b <= c <= a+b");
    if (!(2.0 * b <= a))
      throw std::domain_error("CusaTriple: requires a >= 2b");
  }
};

/// c sin x / (1 + p cos x), the common shape of both sides of the two-sided
/// bound on x. The denominator is >= 1 on the domain, so the value is finite.
double oppenheim_bound(Radians x, PosParam p, double c);

/// sin x / x with the removable singularity filled in: returns 1 at x = 0 and
/// switches to the truncated series 1 - x^2/6 below 2^-26.
double sinc(Radians x);

/// (1 + cos x) / 2, a lower bound for sinc on (0, pi/2].
double cusa_lower_simple(Radians x);

/// (1 + 2 cos x)/3 + x sin x / 6, a refined lower bound for sinc on (0, pi/2].
double cusa_lower_refined(Radians x);

/// c sin x / (a + b cos x); strictly below x on the open interval (0, pi/2).
/// Rejects the endpoints, where the strict bound is not claimed.
double cusa_general(Radians x, const CusaTriple& t);

}  // namespace oppbounds
