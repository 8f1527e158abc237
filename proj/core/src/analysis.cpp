#include "oppbounds/analysis.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "oppbounds/roots.hpp"

namespace oppbounds {

namespace {

constexpr double kTwoOverPi = 2.0 / kPi;
constexpr double kMidCut = kHalfPi - 1.0;

// Taylor coefficients of sin x - x cos x = sum_{k>=1} (-1)^{k+1} 2k x^{2k+1}/(2k+1)!
// and x - sin x cos x = sum_{k>=1} (-1)^{k+1} 4^k x^{2k+1}/(2k+1)!, with the
// common x^3 factored out. Eight terms cover x < 0.25 to full precision.
constexpr int kRatioTerms = 8;

constexpr std::array<double, kRatioTerms> ratio_num_coeffs() {
  std::array<double, kRatioTerms> c{};
  double fact = 6.0;  // (2k+1)! for k = 1
  double sign = 1.0;
  for (int k = 1; k <= kRatioTerms; ++k) {
    c[k - 1] = sign * 2.0 * k / fact;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    sign = -sign;
  }
  return c;
}

constexpr std::array<double, kRatioTerms> ratio_den_coeffs() {
  std::array<double, kRatioTerms> c{};
  double fact = 6.0;
  double sign = 1.0;
  double pow4 = 4.0;
  for (int k = 1; k <= kRatioTerms; ++k) {
    c[k - 1] = sign * pow4 / fact;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    sign = -sign;
    pow4 *= 4.0;
  }
  return c;
}

double eval_poly(const std::array<double, kRatioTerms>& c, double u) {
  double acc = c[kRatioTerms - 1];
  for (int i = kRatioTerms - 2; i >= 0; --i) acc = acc * u + c[i];
  return acc;
}

// aux_g = sum c_{2k} x^{2k}, k >= 3: from 2x^2, x sin 2x and 2 cos 2x - 2 the
// x^2 and x^4 terms cancel exactly.
constexpr std::array<double, 7> kGSeries = {
    8.8888888888888888889e-2,   // x^6   (= 4/45)
    -1.2698412698412698413e-2,  // x^8
    8.4656084656084656085e-4,   // x^10
    -3.4204478648923093368e-5,  // x^12
    9.3968347936601904856e-7,   // x^14
    -1.8793669587320380971e-8,  // x^16
    2.8661369741011474248e-10,  // x^18
};

// aux_g_deriv = sum c_{2k+1} x^{2k+1}, k >= 2 (the x and x^3 terms cancel).
constexpr std::array<double, 7> kGDerivSeries = {
    5.3333333333333333333e-1,   // x^5   (= 8/15)
    -1.0158730158730158730e-1,  // x^7
    8.4656084656084656085e-3,   // x^9
    -4.1045374378707712041e-4,  // x^11
    1.3155568711124266680e-5,   // x^13
    -3.0069871339712609554e-7,  // x^15
    5.1590465533820653646e-9,   // x^17
};

}  // namespace

double oppenheim_ratio(Radians x, PosParam p) {
  return sinc(x) / (1.0 + p.value() * std::cos(x.value()));
}

double oppenheim_ratio_deriv(Radians x, PosParam p) {
  const double xv = x.value();
  if (xv == 0.0)
    throw std::domain_error("oppenheim_ratio_deriv: factored form is 0/0 at x = 0");
  const double pv = p.value();
  const double cx = std::cos(xv);
  const double num = (xv - std::sin(xv) * cx) * (pv - critical_param(x));
  const double den = pv * xv * cx + xv;
  return num / (den * den);
}

double critical_param(Radians x) {
  const double xv = x.value();
  if (xv == 0.0) return 0.5;
  if (xv == kHalfPi) return kTwoOverPi;  // cos(pi/2) != 0 in doubles
  if (xv < 0.25) {
    static constexpr auto num = ratio_num_coeffs();
    static constexpr auto den = ratio_den_coeffs();
    const double u = xv * xv;
    return eval_poly(num, u) / eval_poly(den, u);
  }
  const double sx = std::sin(xv), cx = std::cos(xv);
  return (sx - xv * cx) / (xv - sx * cx);
}

double aux_g(Radians x) {
  const double xv = x.value();
  if (xv < 0.2) {
    const double u = xv * xv;
    double acc = kGSeries[kGSeries.size() - 1];
    for (int i = static_cast<int>(kGSeries.size()) - 2; i >= 0; --i)
      acc = acc * u + kGSeries[i];
    return acc * u * u * u;
  }
  return 2.0 * xv * xv + xv * std::sin(2.0 * xv) + 2.0 * std::cos(2.0 * xv) - 2.0;
}

double aux_g_deriv(Radians x) {
  const double xv = x.value();
  if (xv < 0.2) {
    const double u = xv * xv;
    double acc = kGDerivSeries[kGDerivSeries.size() - 1];
    for (int i = static_cast<int>(kGDerivSeries.size()) - 2; i >= 0; --i)
      acc = acc * u + kGDerivSeries[i];
    return acc * u * u * xv;
  }
  return 2.0 * xv * std::cos(2.0 * xv) + 4.0 * xv - 3.0 * std::sin(2.0 * xv);
}

double aux_g_second(Radians x) {
  const double xv = x.value();
  const double sx = std::sin(xv), cx = std::cos(xv);
  if (xv >= 1.0) return 8.0 * sx * (sx - xv * cx);
  return 8.0 * (std::tan(xv) - xv) * sx * cx;
}

Radians critical_point(PosParam p) {
  const double pv = p.value();
  if (!(pv > 0.5 && pv < kTwoOverPi))
    throw std::domain_error(
        "critical_point: no interior stationary point unless 1/2 < p < 2/pi");
  const double root = brent_root(
      [pv](double x) { return critical_param(Radians(x)) - pv; }, 1e-8, kHalfPi);
  return Radians(std::clamp(root, 0.0, kHalfPi));
}

Regime classify(PosParam p) {
  const double pv = p.value();
  if (pv < 0.5) return {RegimeTag::Low, 0.0, 0.5};
  if (pv < kMidCut) return {RegimeTag::MidA, 0.5, kMidCut};
  if (pv < kTwoOverPi) return {RegimeTag::MidB, kMidCut, kTwoOverPi};
  return {RegimeTag::High, kTwoOverPi, std::numeric_limits<double>::infinity()};
}

ConstantPair paper_constants(PosParam p) {
  const double pv = p.value();
  ConstantPair out{0.0, 0.0, ConstantSource::PaperFormula, ConstantSource::PaperFormula};
  switch (classify(p).tag) {
    case RegimeTag::Low:
      out.q = pv + 1.0;
      out.r = kHalfPi;
      break;
    case RegimeTag::MidA:
      out.q = 4.0 * pv * (1.0 - pv * pv);
      out.r = kHalfPi;
      break;
    case RegimeTag::MidB:
      out.q = 4.0 * pv * (1.0 - pv * pv);
      out.r = pv + 1.0;
      break;
    case RegimeTag::High:
      out.q = kHalfPi;
      out.r = pv + 1.0;
      break;
  }
  return out;
}

ConstantPair numeric_constants(PosParam p) {
  const double pv = p.value();
  ConstantPair out{0.0, 0.0, ConstantSource::NumericOpt, ConstantSource::NumericOpt};
  if (pv <= 0.5) {
    // ratio strictly decreasing: sup at 0+, inf at pi/2
    out.q = 1.0 + pv;
    out.r = kHalfPi;
  } else if (pv >= kTwoOverPi) {
    // ratio strictly increasing: sup at pi/2, inf at 0+
    out.q = kHalfPi;
    out.r = 1.0 + pv;
  } else {
    const Radians xstar = critical_point(p);
    out.q = 1.0 / oppenheim_ratio(xstar, p);
    out.r = std::max(kHalfPi, 1.0 + pv);
  }
  return out;
}

}  // namespace oppbounds
