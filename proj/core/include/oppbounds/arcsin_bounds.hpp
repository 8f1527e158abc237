#pragma once

#include "oppbounds/core_bounds.hpp"

namespace oppbounds {

/// A dimensionless argument in [0, 1], the domain of the arcsin bounds.
class UnitArg {
public:
  explicit UnitArg(double v) : value_(v) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::domain_error("UnitArg: argument must lie in [0, 1]");
  }
  double value() const { return value_; }

private:
  double value_;
};

/// 3t / (2 + sqrt(1-t^2)); <= arcsin t on [0, 1].
double shafer_lower(UnitArg t);

/// 6 (sqrt(1+t) - sqrt(1-t)) / (4 + sqrt(1+t) + sqrt(1-t)); between
/// shafer_lower and arcsin on (0, 1).
double shafer_middle(UnitArg t);

/// pi t / (2 + sqrt(1-t^2)); >= arcsin t, with equality at t = 1.
double fink_upper(UnitArg t);

/// pi t/(pi-2) / (2/(pi-2) + sqrt(1-t^2)); >= arcsin t, equality at t = 1.
/// Dominated-by-none caveat does not apply: this is pointwise at or below
/// fink_upper on the whole interval.
double malesevic_upper(UnitArg t);

/// pi (4-pi) t / (2/(pi-2) + sqrt(1-t^2)); <= arcsin t on [0, 1].
double zhu_lower_a(UnitArg t);

/// (pi t / 2) / (1 + sqrt(1-t^2)); <= arcsin t, equality at t = 1.
double zhu_lower_b(UnitArg t);

/// c t / (1 + p sqrt(1-t^2)): the image of oppenheim_bound under t = sin x,
/// so every (q, r, p) sine-bound triple yields an arcsin bound. The classical
/// forms are recovered after scaling numerator and denominator by 1/a:
///   shafer_lower  <->  (p, c) = (1/2, 3/2)
///   fink_upper    <->  (p, c) = (1/2, pi/2)
///   zhu_lower_b   <->  (p, c) = (1, pi/2)
double oppenheim_to_arcsin(PosParam p, double c, UnitArg t);

}  // namespace oppbounds
