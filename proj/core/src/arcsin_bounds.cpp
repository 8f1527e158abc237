#include "oppbounds/arcsin_bounds.hpp"

namespace oppbounds {

namespace {
// sqrt(1 - t^2) computed as sqrt((1-t)(1+t)) to keep accuracy near t = 1.
double sqrt_one_minus_sq(double t) { return std::sqrt((1.0 - t) * (1.0 + t)); }
}  // namespace

double shafer_lower(UnitArg t) {
  const double tv = t.value();
  return 3.0 * tv / (2.0 + sqrt_one_minus_sq(tv));
}

double shafer_middle(UnitArg t) {
  const double tv = t.value();
  const double sp = std::sqrt(1.0 + tv);
  const double sm = std::sqrt(1.0 - tv);
  return 6.0 * (sp - sm) / (4.0 + sp + sm);
}

double fink_upper(UnitArg t) {
  const double tv = t.value();
  return kPi * tv / (2.0 + sqrt_one_minus_sq(tv));
}

double malesevic_upper(UnitArg t) {
  const double tv = t.value();
  const double scale = kPi - 2.0;
  return (kPi * tv / scale) / (2.0 / scale + sqrt_one_minus_sq(tv));
}

double zhu_lower_a(UnitArg t) {
  const double tv = t.value();
  return kPi * (4.0 - kPi) * tv / (2.0 / (kPi - 2.0) + sqrt_one_minus_sq(tv));
}

double zhu_lower_b(UnitArg t) {
  const double tv = t.value();
  return kPi / 2.0 * tv / (1.0 + sqrt_one_minus_sq(tv));
}

double oppenheim_to_arcsin(PosParam p, double c, UnitArg t) {
  if (!(c > 0.0))
    throw std::domain_error("oppenheim_to_arcsin: c must be positive");
  const double tv = t.value();
  return c * tv / (1.0 + p.value() * sqrt_one_minus_sq(tv));
}

}  // namespace oppbounds
