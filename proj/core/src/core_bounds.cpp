#include "oppbounds/core_bounds.hpp"

namespace oppbounds {

namespace {
// Below this threshold sin x / x is evaluated by series; 2^-26.
constexpr double kSincSeriesCutoff = 1.4901161193847656e-8;
}  // namespace

double oppenheim_bound(Radians x, PosParam p, double c) {
  if (!(c > 0.0)) throw std::domain_error("oppenheim_bound: c must be positive");
  const double xv = x.value();
  return c * std::sin(xv) / (1.0 + p.value() * std::cos(xv));
}

double sinc(Radians x) {
  const double xv = x.value();
  if (xv < kSincSeriesCutoff) return 1.0 - xv * xv / 6.0;
  return std::sin(xv) / xv;
}

double cusa_lower_simple(Radians x) { return (1.0 + std::cos(x.value())) / 2.0; }

double cusa_lower_refined(Radians x) {
  const double xv = x.value();
  return (1.0 + 2.0 * std::cos(xv)) / 3.0 + xv * std::sin(xv) / 6.0;
}

double cusa_general(Radians x, const CusaTriple& t) {
  const double xv = x.value();
  if (xv == 0.0 || xv == kHalfPi)
    throw std::domain_error("cusa_general: strict bound holds on (0, pi/2) only");
  return t.c * std::sin(xv) / (t.a + t.b * std::cos(xv));
}

}  // namespace oppbounds
