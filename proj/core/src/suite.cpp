#include "oppbounds/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "oppbounds/arcsin_bounds.hpp"
#include "oppbounds/quadrature.hpp"

namespace oppbounds {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoOverPi = 2.0 / kPi;

std::string fmt_p(const char* base, double p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s[p=%.4f]", base, p);
  return buf;
}

ScalarFn ratio_fn(double p) {
  return [p](double x) { return oppenheim_ratio(Radians(x), PosParam(p)); };
}

// x vs c sin x / (1 + p cos x) soundness checks for a constant pair.
CheckReport lower_check(const std::string& name, double p, double q,
                        const GridSpec& grid, bool strict) {
  return check_inequality(
      name, [p, q](double x) { return oppenheim_bound(Radians(x), PosParam(p), q); },
      [](double x) { return x; }, grid, strict, 4.0 * kEps);
}

CheckReport upper_check(const std::string& name, double p, double r,
                        const GridSpec& grid, bool strict) {
  return check_inequality(
      name, [](double x) { return x; },
      [p, r](double x) { return oppenheim_bound(Radians(x), PosParam(p), r); },
      grid, strict, 4.0 * kEps);
}

CheckReport simple_report(const std::string& name, bool passed, double margin,
                          double x = 0.0) {
  CheckReport r;
  r.name = name;
  r.passed = passed;
  r.worst_margin = margin;
  r.worst_x = x;
  return r;
}

// A probe passes iff the deliberately broken check fails.
CheckReport invert(CheckReport r) {
  r.passed = !r.passed;
  return r;
}

int leading_digits2(double v) { return static_cast<int>(std::floor(v * 100.0)); }

// sin x - x cos x and x - sin x cos x lose all their leading digits near 0;
// below 0.5 both are summed from their Taylor series instead so the ratio
// check is not swamped by cancellation noise.
double vanishing_num(double x) {
  if (x >= 0.5) return std::sin(x) - x * std::cos(x);
  double sum = 0.0, fact = 6.0, sign = 1.0, xp = x * x * x;
  for (int k = 1; k <= 12; ++k) {
    sum += sign * 2.0 * k * xp / fact;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    sign = -sign;
    xp *= x * x;
  }
  return sum;
}

double vanishing_den(double x) {
  if (x >= 0.5) return x - std::sin(x) * std::cos(x);
  double sum = 0.0, fact = 6.0, sign = 1.0, pow4 = 4.0, xp = x * x * x;
  for (int k = 1; k <= 12; ++k) {
    sum += sign * pow4 * xp / fact;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    sign = -sign;
    pow4 *= 4.0;
    xp *= x * x;
  }
  return sum;
}

}  // namespace

std::vector<double> standard_p_sweep() {
  std::vector<double> ps;
  for (int i = 0; i < 47; ++i)
    ps.push_back(0.05 + (3.0 - 0.05) * i / 46.0);
  ps.push_back(0.5);
  ps.push_back(kHalfPi - 1.0);
  ps.push_back(kTwoOverPi);
  std::sort(ps.begin(), ps.end());
  return ps;
}

std::vector<CheckReport> run_standard_suite(const SuiteOptions& options) {
  std::vector<CheckReport> out;
  const std::size_t n = options.grid_points;
  const GridSpec closed{0.0, kHalfPi, n};
  const GridSpec open_lo{0.0, kHalfPi, n, true, false};
  const GridSpec interior{0.0, kHalfPi, n, true, true};
  const GridSpec mono{0.05, kHalfPi, n};
  const GridSpec unit{0.0, 1.0, n};

  // --- Oppenheim soundness sweep, paper and numeric constants ---
  const auto sweep = standard_p_sweep();
  for (double p : sweep) {
    const ConstantPair paper = paper_constants(PosParam(p));
    out.push_back(lower_check(fmt_p("oppenheim_lower", p), p, paper.q, closed, false));
    out.push_back(upper_check(fmt_p("oppenheim_upper", p), p, paper.r, closed, false));
    const ConstantPair num = numeric_constants(PosParam(p));
    out.push_back(lower_check(fmt_p("numeric_lower", p), p, num.q, closed, false));
    out.push_back(upper_check(fmt_p("numeric_upper", p), p, num.r, closed, false));
    const Regime reg = classify(PosParam(p));
    if (reg.tag == RegimeTag::MidA || reg.tag == RegimeTag::MidB) {
      out.push_back(simple_report(fmt_p("paper_q_sound", p),
                                  paper.q <= num.q + 1e-12,
                                  num.q + 1e-12 - paper.q));
    }
  }

  // --- Monotonicity trichotomy ---
  for (double p : {kTwoOverPi, 0.7, 1.0, 3.0})
    out.push_back(
        check_monotone(fmt_p("ratio_increasing", p), ratio_fn(p), mono,
                       Direction::Increasing));
  for (double p : {0.1, 0.3, 0.5})
    out.push_back(
        check_monotone(fmt_p("ratio_decreasing", p), ratio_fn(p), mono,
                       Direction::Decreasing));
  for (double p : {0.52, 0.55, 0.6, 0.63})
    out.push_back(check_unimodal_max(fmt_p("ratio_unimodal", p), ratio_fn(p), mono));

  // --- Proof-chain signs on the interior grid ---
  auto positive = [&](const std::string& name, const ScalarFn& f) {
    return check_inequality(
        name, [](double) { return 0.0; }, f, interior, true, 0.0);
  };
  out.push_back(positive("aux_g_second_positive",
                         [](double x) { return aux_g_second(Radians(x)); }));
  out.push_back(positive("aux_g_deriv_positive",
                         [](double x) { return aux_g_deriv(Radians(x)); }));
  out.push_back(
      positive("aux_g_positive", [](double x) { return aux_g(Radians(x)); }));
  out.push_back(check_monotone(
      "critical_param_increasing",
      [](double x) { return critical_param(Radians(x)); }, interior,
      Direction::Increasing));
  for (double p : {0.3, 0.55, 1.0}) {
    out.push_back(positive(fmt_p("deriv_sign_matches", p), [p](double x) {
      const double d = oppenheim_ratio_deriv(Radians(x), PosParam(p));
      const double s = p - critical_param(Radians(x));
      return d * s;  // same sign <=> positive product
    }));
  }

  // --- Gradient check: closed form vs central finite differences ---
  {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(1e-3, kHalfPi - 1e-3);
    std::uniform_real_distribution<double> up(0.05, 3.0);
    double worst = std::numeric_limits<double>::infinity();
    double worst_x = 0.0;
    for (int i = 0; i < 200; ++i) {
      double x = ux(rng), p = up(rng);
      // relative comparison needs a denominator bounded away from zero
      while (std::fabs(p - critical_param(Radians(x))) < 1e-3) p = up(rng);
      const double step = 6e-6 * (1.0 + x);
      const double fd = (oppenheim_ratio(Radians(x + step), PosParam(p)) -
                         oppenheim_ratio(Radians(x - step), PosParam(p))) /
                        (2.0 * step);
      const double cf = oppenheim_ratio_deriv(Radians(x), PosParam(p));
      const double rel = std::fabs(fd - cf) / std::fabs(cf);
      const double margin = 1e-6 - rel;
      if (margin < worst) {
        worst = margin;
        worst_x = x;
      }
    }
    out.push_back(simple_report("gradient_check", worst >= 0.0, worst, worst_x));
  }

  // --- Limits ---
  {
    const double e1 = std::fabs(critical_param(Radians(1e-6)) - 0.5);
    out.push_back(simple_report("limit_h_small", e1 <= 1e-9, 1e-9 - e1, 1e-6));
    const bool exact = critical_param(Radians(kHalfPi)) == kTwoOverPi;
    out.push_back(simple_report("limit_h_endpoint", exact, exact ? 0.0 : -1.0,
                                kHalfPi));
    for (double p : {0.3, 1.0}) {
      const double e =
          std::fabs(oppenheim_ratio(Radians(1e-8), PosParam(p)) - 1.0 / (1.0 + p));
      out.push_back(simple_report(fmt_p("limit_ratio_small", p), e <= 1e-12,
                                  1e-12 - e, 1e-8));
    }
  }

  // --- Best-constant oracle equivalence ---
  for (double p : sweep) {
    const ConstantPair num = numeric_constants(PosParam(p));
    const ConstantPair bf = brute_force_constants(PosParam(p), 1000000);
    const double err = std::max(std::fabs(num.q - bf.q), std::fabs(num.r - bf.r));
    out.push_back(simple_report(fmt_p("constants_oracle", p), err <= 1e-8,
                                1e-8 - err));
  }

  // --- Cusa family ---
  out.push_back(check_inequality(
      "cusa_lower_simple_holds",
      [](double x) { return cusa_lower_simple(Radians(x)); },
      [](double x) { return sinc(Radians(x)); }, open_lo, false, 4.0 * kEps));
  out.push_back(check_inequality(
      "cusa_lower_refined_holds",
      [](double x) { return cusa_lower_refined(Radians(x)); },
      [](double x) { return sinc(Radians(x)); }, open_lo, false, 4.0 * kEps));
  {
    std::mt19937 rng(98765);
    std::uniform_real_distribution<double> ua(0.5, 3.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    CheckReport agg = simple_report("cusa_general_random", true,
                                    std::numeric_limits<double>::infinity());
    for (int i = 0; i < 20; ++i) {
      const double a = ua(rng);
      const double b = (0.1 + 0.9 * u01(rng)) * a / 2.0;
      const double c = 2.0 * b + u01(rng) * (a - b);
      const CusaTriple t(a, b, c);
      const CheckReport r = check_inequality(
          "cusa_triple", [t](double x) { return cusa_general(Radians(x), t); },
          [](double x) { return x; }, interior, true, 0.0);
      if (r.worst_margin < agg.worst_margin) {
        agg.worst_margin = r.worst_margin;
        agg.worst_x = r.worst_x;
      }
      agg.passed = agg.passed && r.passed;
    }
    out.push_back(agg);
  }

  // --- Shafer-Fink family ---
  auto arcsin_fn = [](double t) { return std::asin(t); };
  auto chain = [&](const char* name, const ScalarFn& lo_fn, const ScalarFn& hi_fn) {
    return check_inequality(name, lo_fn, hi_fn, unit, false, 4.0 * kEps);
  };
  out.push_back(chain("arcsin_chain_shafer_lower_middle",
                      [](double t) { return shafer_lower(UnitArg(t)); },
                      [](double t) { return shafer_middle(UnitArg(t)); }));
  out.push_back(chain("arcsin_chain_middle_arcsin",
                      [](double t) { return shafer_middle(UnitArg(t)); }, arcsin_fn));
  out.push_back(chain("arcsin_chain_arcsin_fink", arcsin_fn,
                      [](double t) { return fink_upper(UnitArg(t)); }));
  out.push_back(chain("arcsin_chain_arcsin_malesevic", arcsin_fn,
                      [](double t) { return malesevic_upper(UnitArg(t)); }));
  out.push_back(chain("arcsin_lower_zhu_a",
                      [](double t) { return zhu_lower_a(UnitArg(t)); }, arcsin_fn));
  out.push_back(chain("arcsin_lower_zhu_b",
                      [](double t) { return zhu_lower_b(UnitArg(t)); }, arcsin_fn));
  out.push_back(chain("arcsin_upper_dominance",
                      [](double t) { return malesevic_upper(UnitArg(t)); },
                      [](double t) { return fink_upper(UnitArg(t)); }));
  {
    const double e = std::max(
        {std::fabs(fink_upper(UnitArg(1.0)) - kHalfPi),
         std::fabs(malesevic_upper(UnitArg(1.0)) - kHalfPi),
         std::fabs(zhu_lower_b(UnitArg(1.0)) - kHalfPi)});
    out.push_back(simple_report("arcsin_endpoint_equalities", e <= 4.0 * kEps,
                                4.0 * kEps - e, 1.0));
  }
  {
    double worst = std::numeric_limits<double>::infinity();
    double worst_t = 0.0;
    for (std::size_t i = 0; i < unit.points; ++i) {
      const double t = unit.at(i);
      const double lhs = oppenheim_to_arcsin(PosParam(1.0), kHalfPi, UnitArg(t));
      const double rhs = zhu_lower_b(UnitArg(t));
      const double rel =
          std::fabs(lhs - rhs) / std::max(std::fabs(rhs), kEps);
      const double margin = 2.0 * kEps - rel;
      if (margin < worst) {
        worst = margin;
        worst_t = t;
      }
    }
    out.push_back(simple_report("arcsin_bridge_identity", worst >= 0.0, worst,
                                worst_t));
  }

  // --- Sine integral ---
  {
    const double si = si_half_pi(options.tol);
    const double si_fine = si_half_pi(options.tol / 2.0);
    out.push_back(simple_report("si_self_consistency",
                                std::fabs(si - si_fine) <= options.tol,
                                options.tol - std::fabs(si - si_fine)));
    auto inside = [&](const IntegralBoundSet& set) {
      double margin = std::numeric_limits<double>::infinity();
      if (set.lower) margin = std::min(margin, si - *set.lower);
      if (set.upper) margin = std::min(margin, *set.upper - si);
      out.push_back(simple_report("si_inside_" + set.name, margin > 0.0, margin));
    };
    inside(bound_set_p_half());
    inside(bound_set_p_two_over_pi());
    inside(bound_set_optimized());
    inside(bound_set_prior_wide());
    inside(bound_set_prior_lower());

    const bool digits_ok =
        leading_digits2(*bound_set_p_half().lower) == 131 &&
        leading_digits2(*bound_set_p_half().upper) == 276 &&
        leading_digits2(*bound_set_p_two_over_pi().lower) == 134 &&
        leading_digits2(*bound_set_p_two_over_pi().upper) == 140 &&
        leading_digits2(*bound_set_optimized().lower) == 136 &&
        leading_digits2(*bound_set_optimized().upper) == 137 &&
        leading_digits2(*bound_set_prior_wide().lower) == 133 &&
        leading_digits2(*bound_set_prior_wide().upper) == 138 &&
        leading_digits2(*bound_set_prior_lower().lower) == 135;
    out.push_back(simple_report("printed_digits", digits_ok, digits_ok ? 1.0 : -1.0));

    const double p0n = optimal_p0_numeric();
    const double p0c = optimal_p0_closed_form();
    out.push_back(simple_report("p0_agreement", std::fabs(p0n - p0c) <= 1e-12,
                                1e-12 - std::fabs(p0n - p0c), p0n));
    const double step = 1e-5;
    const double fd_slope =
        (upper_envelope(p0n + step) - upper_envelope(p0n - step)) / (2.0 * step);
    out.push_back(simple_report("p0_stationarity", std::fabs(fd_slope) <= 1e-8,
                                1e-8 - std::fabs(fd_slope), p0n));
    out.push_back(simple_report(
        "p0_in_mid_regime", p0n > 0.5 && p0n < kTwoOverPi && leading_digits2(p0n) == 52,
        std::min(p0n - 0.5, kTwoOverPi - p0n), p0n));

    const double w1 = bound_set_p_half().width();
    const double w2 = bound_set_p_two_over_pi().width();
    const double w3 = bound_set_optimized().width();
    out.push_back(simple_report("width_ordering", w3 < w2 && w2 < w1,
                                std::min(w2 - w3, w1 - w2)));
    const LowerBoundMax lmax = maximize_lower_bound();
    const double lexp = 2.0 * (1.0 - 1.0 / kPi);
    out.push_back(simple_report("lower_max_value",
                                std::fabs(lmax.value - lexp) <= 1e-9,
                                1e-9 - std::fabs(lmax.value - lexp), lmax.p));
    const double improve = std::min(
        {lexp - (kPi + 5.0) / 6.0, (kPi + 5.0) / 6.0 - 4.0 / 3.0,
         (kPi + 1.0) / 3.0 - upper_envelope(p0n)});
    out.push_back(simple_report("improvement_over_prior", improve > 0.0, improve));
  }

  // --- Monotone l'Hospital rule instance ---
  out.push_back(lhospital_monotone_check(
      "lhospital_ratio_instance", vanishing_num, vanishing_den,
      [](double x) { return x * std::sin(x); },
      [](double x) { return 2.0 * std::sin(x) * std::sin(x); }, interior));

  // --- Sharpness probes (inverted: the probe passes iff the check fails) ---
  if (options.sharpness) {
    out.push_back(invert(
        lower_check("probe_paper_q_plus[p=1]", 1.0, kHalfPi + 1e-4, open_lo, true)));
    out.push_back(invert(
        upper_check("probe_paper_r_minus[p=1]", 1.0, 2.0 - 1e-4, open_lo, true)));
    for (double p : sweep) {
      const ConstantPair num = numeric_constants(PosParam(p));
      out.push_back(invert(lower_check(fmt_p("probe_numeric_q_plus", p), p,
                                       num.q + 1e-6, open_lo, true)));
      out.push_back(invert(upper_check(fmt_p("probe_numeric_r_minus", p), p,
                                       num.r - 1e-6, open_lo, true)));
    }
  }

  return out;
}

}  // namespace oppbounds
