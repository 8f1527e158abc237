#include "oppbounds/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oppbounds/roots.hpp"

namespace oppbounds {

namespace {

constexpr double kTwoOverPi = 2.0 / kPi;
constexpr int kMaxDepth = 60;

double integrand(double x) { return sinc(Radians(x)); }

double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = integrand(lm), frm = integrand(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= kMaxDepth)
    throw std::runtime_error("si_half_pi: subdivision budget exhausted");
  return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double IntegralBoundSet::width() const {
  if (!lower || !upper)
    throw std::logic_error("IntegralBoundSet::width: one-sided set");
  return *upper - *lower;
}

double si_half_pi(double tol) {
  if (!(tol > 0.0)) throw std::domain_error("si_half_pi: tol must be positive");
  const double a = 0.0, b = kHalfPi;
  const double fa = integrand(a), fb = integrand(b);
  const double m = 0.5 * (a + b);
  const double fm = integrand(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(a, b, fa, fm, fb, whole, tol, 0);
}

IntegralBoundSet bound_set_p_half() {
  return {"p_half", 1.0 + 1.0 / kPi, 2.0 * (kPi + 1.0) / 3.0,
          "two-sided sine bound integrated at p = 1/2"};
}

IntegralBoundSet bound_set_p_two_over_pi() {
  return {"p_two_over_pi", (4.0 + kPi * kPi) / (2.0 * (2.0 + kPi)),
          1.0 + 4.0 / (kPi * kPi),
          "two-sided sine bound integrated at p = 2/pi"};
}

double upper_envelope(double p) {
  return (2.0 * p + kPi) / (8.0 * p * (1.0 - p * p));
}

double lower_envelope(double p) {
  return std::min(kTwoOverPi, 1.0 / (1.0 + p)) * (p + kHalfPi);
}

IntegralBoundSet mid_regime_bounds(PosParam p) {
  const double pv = p.value();
  if (!(pv > 0.5 && pv < kTwoOverPi))
    throw std::domain_error("mid_regime_bounds: requires 1/2 < p < 2/pi");
  return {"mid_regime", lower_envelope(pv), upper_envelope(pv),
          "two-sided sine bound integrated in the middle regime"};
}

IntegralBoundSet bound_set_optimized() {
  return {"optimized", maximize_lower_bound().value,
          upper_envelope(optimal_p0_numeric()),
          "middle-regime enclosure optimized over p"};
}

IntegralBoundSet bound_set_prior_wide() {
  return {"prior_wide", 4.0 / 3.0, (kPi + 1.0) / 3.0,
          "earlier two-sided enclosure"};
}

IntegralBoundSet bound_set_prior_lower() {
  return {"prior_lower", (kPi + 5.0) / 6.0, std::nullopt,
          "earlier refined lower bound"};
}

double optimal_p0_numeric() {
  // Stationarity of the upper envelope: U'(p) = 0 reduces to the cubic
  // 4p^3 + 3 pi p^2 - pi = 0 (validated by finite differences in the tests).
  auto cubic = [](double p) { return 4.0 * p * p * p + 3.0 * kPi * p * p - kPi; };
  const double lo = 0.5, hi = kTwoOverPi;
  if (!(cubic(lo) < 0.0 && cubic(hi) > 0.0))
    throw std::runtime_error("optimal_p0_numeric: stationarity cubic has no bracket");
  return brent_root(cubic, lo, hi);
}

double optimal_p0_closed_form() {
  const double theta =
      std::atan(4.0 * std::sqrt(kPi * kPi - 4.0) / (kPi * kPi - 8.0));
  return kPi / 4.0 *
         (std::cos(theta / 3.0) + std::sqrt(3.0) * std::sin(theta / 3.0) - 1.0);
}

LowerBoundMax maximize_lower_bound() {
  // Golden-section search; the envelope is unimodal with a kink at its peak.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.5, b = kTwoOverPi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = lower_envelope(c), fd = lower_envelope(d);
  for (int i = 0; i < 200 && (b - a) > 1e-15; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = lower_envelope(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = lower_envelope(d);
    }
  }
  const double p = 0.5 * (a + b);
  return {p, lower_envelope(p)};
}

}  // namespace oppbounds
