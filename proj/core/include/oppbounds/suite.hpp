#pragma once

#include <vector>

#include "oppbounds/verify.hpp"

namespace oppbounds {

struct SuiteOptions {
  std::size_t grid_points = 100000;
  double tol = 1e-12;       // quadrature tolerance
  bool sharpness = false;   // include inverted sharpness probes
};

/// The 50-value parameter sweep used by the soundness and oracle checks:
/// uniform over [0.05, 3] plus the three regime boundaries.
std::vector<double> standard_p_sweep();

/// Runs every claim of the standard suite as a named grid certification and
/// returns one report per claim. With sharpness probes enabled, each probe
/// passes iff the deliberately perturbed constant produces a violation.
std::vector<CheckReport> run_standard_suite(const SuiteOptions& options);

}  // namespace oppbounds
