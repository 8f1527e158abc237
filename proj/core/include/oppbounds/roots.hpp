#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace oppbounds {

/// An interval [lo, hi] certified (by a sign change) to contain exactly one
/// root of the named scalar function.
struct Bracket {
  double lo;
  double hi;
  std::string target;
};

/// Brent's method with bisection fallback. Requires f(lo) and f(hi) of
/// opposite sign; converges to the machine-tight bracket around the root.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  int max_iter = 200);

}  // namespace oppbounds
