#pragma once

#include <optional>
#include <string>

#include "oppbounds/core_bounds.hpp"

namespace oppbounds {

/// A named enclosure for the sine integral over [0, pi/2]. Either side may be
/// absent; when both are present, lower < upper.
struct IntegralBoundSet {
  std::string name;
  std::optional<double> lower;
  std::optional<double> upper;
  std::string provenance;

  double width() const;  // requires both sides
};

/// The integral of sin x / x over [0, pi/2], by adaptive Simpson subdivision
/// with an embedded error estimate, to absolute error <= tol. Throws
/// std::runtime_error if the subdivision budget runs out first.
double si_half_pi(double tol);

/// (1 + 1/pi, 2(pi+1)/3): the integrated two-sided bound specialized at p = 1/2.
IntegralBoundSet bound_set_p_half();

/// ((4+pi^2)/(2(2+pi)), 1 + 4/pi^2): the integrated bound at p = 2/pi.
IntegralBoundSet bound_set_p_two_over_pi();

/// (min(2/pi, 1/(1+p)) (p + pi/2), (2p+pi)/(8p(1-p^2))) for 1/2 < p < 2/pi.
IntegralBoundSet mid_regime_bounds(PosParam p);

/// The best enclosure obtainable from mid_regime_bounds: lower maximized over
/// p (value 2(1 - 1/pi)), upper minimized at p = optimal_p0.
IntegralBoundSet bound_set_optimized();

/// (4/3, (pi+1)/3): the earlier enclosure this family improves on.
IntegralBoundSet bound_set_prior_wide();

/// ((pi+5)/6, -): the earlier refined lower bound.
IntegralBoundSet bound_set_prior_lower();

/// Upper envelope U(p) = (2p+pi)/(8p(1-p^2)) on (1/2, 2/pi).
double upper_envelope(double p);

/// Lower envelope L(p) = min(2/pi, 1/(1+p)) (p + pi/2) on (1/2, 2/pi).
double lower_envelope(double p);

/// Minimizer of the upper envelope, found by bracketing the root of the
/// stationarity cubic 4p^3 + 3 pi p^2 - pi on (1/2, 2/pi).
double optimal_p0_numeric();

/// The same minimizer by its trigonometric closed form
/// p0 = (pi/4){cos(t/3) + sqrt(3) sin(t/3) - 1}, t = arctan(4 sqrt(pi^2-4)/(pi^2-8)).
double optimal_p0_closed_form();

struct LowerBoundMax {
  double p;      // maximizer of the lower envelope
  double value;  // the maximum, 2(1 - 1/pi)
};

/// Maximize the lower envelope over (1/2, 2/pi) by golden-section search.
LowerBoundMax maximize_lower_bound();

}  // namespace oppbounds
