#pragma once

#include "oppbounds/core_bounds.hpp"

namespace oppbounds {

/// The four p-intervals that determine the best-constant formulas:
/// Low (0, 1/2), MidA [1/2, pi/2 - 1), MidB [pi/2 - 1, 2/pi), High [2/pi, inf).
enum class RegimeTag { Low, MidA, MidB, High };

struct Regime {
  RegimeTag tag;
  double lo;  // left cutoff of the tag's p-interval
  double hi;  // right cutoff (infinity for High)
};

enum class ConstantSource { PaperFormula, NumericOpt };

/// A (q, r) pair of bound constants: q the greatest lower constant, r the
/// least upper constant, with 0 < q <= r.
struct ConstantPair {
  double q;
  double r;
  ConstantSource q_source;
  ConstantSource r_source;
};

/// sin x / (x (1 + p cos x)); the ratio whose extrema give the best
/// constants. Returns the limit 1/(1+p) at x = 0.
double oppenheim_ratio(Radians x, PosParam p);

/// Closed-form derivative of oppenheim_ratio, factored as
/// (x - sin x cos x)(p - critical_param(x)) / (p x cos x + x)^2.
/// The factored form is 0/0 at x = 0, which is rejected.
double oppenheim_ratio_deriv(Radians x, PosParam p);

/// (sin x - x cos x) / (x - sin x cos x): the parameter value p for which x
/// is the stationary point of the ratio. Strictly increasing from 1/2 (limit
/// at 0) to 2/pi (at pi/2); evaluated by series ratio below x = 0.25.
double critical_param(Radians x);

/// 2x^2 + x sin 2x + 2 cos 2x - 2; positive on (0, pi/2), driving the
/// monotonicity of critical_param. Series branch below x = 0.2.
double aux_g(Radians x);

/// 2x cos 2x + 4x - 3 sin 2x, the derivative of aux_g. Series branch below
/// x = 0.2.
double aux_g_deriv(Radians x);

/// 8 (tan x - x) sin x cos x, the second derivative of aux_g; evaluated as
/// the equivalent 8 sin x (sin x - x cos x) near pi/2 where tan blows up.
double aux_g_second(Radians x);

/// The unique stationary point x* in (0, pi/2) of the ratio, i.e. the root
/// of critical_param(x) = p. Requires 1/2 < p < 2/pi.
Radians critical_point(PosParam p);

/// Which of the four p-intervals p falls into. Boundary points belong to the
/// interval closed on the left.
Regime classify(PosParam p);

/// The (q, r) formulas by regime:
/// Low -> (p+1, pi/2); MidA -> (4p(1-p^2), pi/2); MidB -> (4p(1-p^2), p+1);
/// High -> (pi/2, p+1).
ConstantPair paper_constants(PosParam p);

/// Best constants computed from the monotonicity structure of the ratio:
/// q = 1/sup, r = 1/inf over (0, pi/2]. In the middle regimes the supremum
/// sits at critical_point(p) and r = max(pi/2, 1+p).
ConstantPair numeric_constants(PosParam p);

}  // namespace oppbounds
