#include "oppbounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace oppbounds {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double eval_or_rethrow(const ScalarFn& f, double x, const std::string& name) {
  try {
    return f(x);
  } catch (const std::exception& e) {
    std::ostringstream os;
    os << name << ": evaluation failed at x = " << x << " (" << e.what() << ")";
    throw std::runtime_error(os.str());
  }
}

// Minimum direction-adjusted consecutive difference of f over the grid.
void min_consecutive_diff(const ScalarFn& f, const GridSpec& grid, double sign,
                          const std::string& name, double& worst,
                          double& worst_x) {
  worst = std::numeric_limits<double>::infinity();
  worst_x = grid.at(0);
  double prev = eval_or_rethrow(f, grid.at(0), name);
  for (std::size_t i = 1; i < grid.points; ++i) {
    const double x = grid.at(i);
    const double cur = eval_or_rethrow(f, x, name);
    const double d = sign * (cur - prev);
    if (d < worst) {
      worst = d;
      worst_x = x;
    }
    prev = cur;
  }
}

}  // namespace

std::string CheckReport::csv_header() {
  return "name,passed,worst_x,worst_margin,points,tolerance";
}

std::string CheckReport::csv_row() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << name << ',' << (passed ? 1 : 0) << ',' << worst_x << ',' << worst_margin
     << ',' << grid.points << ',' << tolerance;
  return os.str();
}

CheckReport check_inequality(const std::string& name, const ScalarFn& lhs,
                             const ScalarFn& rhs, const GridSpec& grid,
                             bool strict, double tol) {
  CheckReport report;
  report.name = name;
  report.grid = grid;
  report.tolerance = strict ? 0.0 : tol;
  double worst = std::numeric_limits<double>::infinity();
  double worst_x = grid.at(0);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.at(i);
    const double l = eval_or_rethrow(lhs, x, name);
    const double r = eval_or_rethrow(rhs, x, name);
    const double scale = std::max({1.0, std::fabs(l), std::fabs(r)});
    const double margin = (r - l) / scale;
    if (margin < worst) {
      worst = margin;
      worst_x = x;
    }
  }
  report.worst_x = worst_x;
  report.worst_margin = worst;
  report.passed = strict ? worst > 0.0 : worst >= -report.tolerance;
  return report;
}

CheckReport check_monotone(const std::string& name, const ScalarFn& f,
                           const GridSpec& grid, Direction direction) {
  CheckReport report;
  report.name = name;
  report.grid = grid;
  report.tolerance = 0.0;
  const double sign = direction == Direction::Increasing ? 1.0 : -1.0;
  min_consecutive_diff(f, grid, sign, name, report.worst_margin, report.worst_x);
  report.passed = report.worst_margin > 0.0;
  return report;
}

CheckReport check_unimodal_max(const std::string& name, const ScalarFn& f,
                               const GridSpec& grid) {
  CheckReport report;
  report.name = name;
  report.grid = grid;
  report.tolerance = 0.0;
  std::size_t rise_to_fall = 0, fall_to_rise = 0, zeros = 0;
  double min_abs = std::numeric_limits<double>::infinity();
  double turning_x = grid.at(0);
  int prev_sign = 0;
  double prev = eval_or_rethrow(f, grid.at(0), name);
  for (std::size_t i = 1; i < grid.points; ++i) {
    const double x = grid.at(i);
    const double cur = eval_or_rethrow(f, x, name);
    const double d = cur - prev;
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s == 0) ++zeros;
    if (prev_sign == 1 && s == -1) {
      ++rise_to_fall;
      turning_x = grid.at(i - 1);
    }
    if (prev_sign == -1 && s == 1) ++fall_to_rise;
    if (s != 0) prev_sign = s;
    min_abs = std::min(min_abs, std::fabs(d));
    prev = cur;
  }
  report.worst_x = turning_x;
  report.worst_margin = min_abs;
  report.passed = rise_to_fall == 1 && fall_to_rise == 0 && zeros == 0;
  return report;
}

CheckReport lhospital_monotone_check(const std::string& name, const ScalarFn& f1,
                                     const ScalarFn& f2, const ScalarFn& d1,
                                     const ScalarFn& d2, const GridSpec& grid) {
  const double anchor_tol = 1e-12;
  if (std::fabs(f1(grid.lo)) > anchor_tol || std::fabs(f2(grid.lo)) > anchor_tol)
    throw std::invalid_argument(
        "lhospital_monotone_check: functions must vanish at the anchor point");

  CheckReport report;
  report.name = name;
  report.grid = grid;
  report.tolerance = 4.0 * kEps;

  // (i) derivative ratio and (ii) function ratio, both non-decreasing.
  auto ratio_min_diff = [&](const ScalarFn& num, const ScalarFn& den,
                            double& worst, double& worst_x) {
    worst = std::numeric_limits<double>::infinity();
    worst_x = grid.at(0);
    double prev = eval_or_rethrow(num, grid.at(0), name) /
                  eval_or_rethrow(den, grid.at(0), name);
    for (std::size_t i = 1; i < grid.points; ++i) {
      const double x = grid.at(i);
      const double cur =
          eval_or_rethrow(num, x, name) / eval_or_rethrow(den, x, name);
      const double scale = std::max(1.0, std::fabs(cur));
      const double d = (cur - prev) / scale;
      if (d < worst) {
        worst = d;
        worst_x = x;
      }
      prev = cur;
    }
  };

  double worst_hyp, x_hyp, worst_con, x_con;
  ratio_min_diff(d1, d2, worst_hyp, x_hyp);
  ratio_min_diff(f1, f2, worst_con, x_con);
  if (worst_hyp < worst_con) {
    report.worst_margin = worst_hyp;
    report.worst_x = x_hyp;
  } else {
    report.worst_margin = worst_con;
    report.worst_x = x_con;
  }
  report.passed = report.worst_margin >= -report.tolerance;
  return report;
}

ConstantPair brute_force_constants(PosParam p, std::size_t points) {
  if (points < 1000)
    throw std::invalid_argument("brute_force_constants: need points >= 1000");
  const double pv = p.value();
  double max_v = 1.0 / (1.0 + pv);  // x -> 0 limit as a virtual endpoint
  double min_v = max_v;
  for (std::size_t i = 1; i <= points; ++i) {
    const double x = kHalfPi * static_cast<double>(i) / static_cast<double>(points);
    const double v = oppenheim_ratio(Radians(std::min(x, kHalfPi)), p);
    max_v = std::max(max_v, v);
    min_v = std::min(min_v, v);
  }
  return {1.0 / max_v, 1.0 / min_v, ConstantSource::NumericOpt,
          ConstantSource::NumericOpt};
}

}  // namespace oppbounds
