#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "oppbounds/analysis.hpp"

namespace oppbounds {

using ScalarFn = std::function<double(double)>;

/// A uniform evaluation grid. Open endpoints are excluded by insetting half
/// a step.
struct GridSpec {
  double lo;
  double hi;
  std::size_t points;
  bool open_lo = false;
  bool open_hi = false;

  double step() const { return (hi - lo) / static_cast<double>(points - 1); }

  double at(std::size_t i) const {
    const double h = step();
    double x = lo + static_cast<double>(i) * h;
    if (open_lo && i == 0) x = lo + 0.5 * h;
    if (open_hi && i == points - 1) x = hi - 0.5 * h;
    return x;
  }
};

/// Outcome of one grid certification run. Margins are normalized by the
/// local magnitude max(1, |lhs|, |rhs|); passed <=> worst_margin clears the
/// tolerance (strict checks demand a strictly positive margin).
struct CheckReport {
  std::string name;
  bool passed = false;
  double worst_x = 0.0;
  double worst_margin = 0.0;
  GridSpec grid{0.0, 1.0, 2};
  double tolerance = 0.0;

  /// One CSV row: name,passed,worst_x,worst_margin,points,tolerance.
  std::string csv_row() const;
  static std::string csv_header();
};

enum class Direction { Increasing, Decreasing };

/// Certifies lhs <= rhs (or lhs < rhs when strict) on the grid. The margin at
/// x is (rhs - lhs)/scale; non-strict checks pass down to margin >= -tol,
/// strict checks require margin > 0 everywhere with zero tolerance.
CheckReport check_inequality(const std::string& name, const ScalarFn& lhs,
                             const ScalarFn& rhs, const GridSpec& grid,
                             bool strict, double tol);

/// Passes iff consecutive grid values are strictly ordered in the stated
/// direction; margin is the smallest direction-adjusted consecutive difference.
CheckReport check_monotone(const std::string& name, const ScalarFn& f,
                           const GridSpec& grid, Direction direction);

/// Passes iff the consecutive differences change sign exactly once, from
/// positive to negative; worst_x records the turning point.
CheckReport check_unimodal_max(const std::string& name, const ScalarFn& f,
                               const GridSpec& grid);

/// Instance check of the monotone form of l'Hospital's rule: with f1, f2
/// vanishing at grid.lo and d2 nonzero, verifies that d1/d2 and f1/f2 are
/// both monotone non-decreasing on the grid. Throws std::invalid_argument if
/// f1 or f2 fails to vanish at the anchor.
CheckReport lhospital_monotone_check(const std::string& name, const ScalarFn& f1,
                                     const ScalarFn& f2, const ScalarFn& d1,
                                     const ScalarFn& d2, const GridSpec& grid);

/// Independent oracle for numeric_constants: (1/max, 1/min) of the ratio over
/// a uniform grid of (0, pi/2] with the x -> 0 limit 1/(1+p) included as a
/// virtual endpoint. Requires points >= 1000.
ConstantPair brute_force_constants(PosParam p, std::size_t points);

}  // namespace oppbounds
