// Command-line front end: verification suites, best-constant queries, sine
// integral report, and CSV bound tables.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oppbounds/analysis.hpp"
#include "oppbounds/quadrature.hpp"
#include "oppbounds/suite.hpp"

namespace {

using namespace oppbounds;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

const char* regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Low: return "LOW";
    case RegimeTag::MidA: return "MID_A";
    case RegimeTag::MidB: return "MID_B";
    case RegimeTag::High: return "HIGH";
  }
  return "?";
}

int cmd_verify(std::size_t grid_points, double tol, bool sharpness, bool csv) {
  SuiteOptions opts;
  opts.grid_points = grid_points;
  opts.tol = tol;
  opts.sharpness = sharpness;
  const auto reports = run_standard_suite(opts);
  bool all_ok = true;
  if (csv) std::printf("%s\n", CheckReport::csv_header().c_str());
  for (const auto& r : reports) {
    all_ok = all_ok && r.passed;
    if (csv)
      std::printf("%s\n", r.csv_row().c_str());
    else
      std::printf("[%s] %-40s worst_x=%.12g margin=%.6g\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst_x,
                  r.worst_margin);
  }
  if (!csv)
    std::printf("%zu checks, %s\n", reports.size(),
                all_ok ? "all passed" : "FAILURES present");
  return all_ok ? kExitOk : kExitCheckFailure;
}

int cmd_constants(double p, bool csv) {
  const PosParam pp(p);
  const Regime reg = classify(pp);
  const ConstantPair paper = paper_constants(pp);
  const ConstantPair num = numeric_constants(pp);
  const bool mid = reg.tag == RegimeTag::MidA || reg.tag == RegimeTag::MidB;
  double xstar = 0.0;
  if (mid && p > 0.5) xstar = critical_point(pp).value();

  if (csv) {
    std::printf("p,regime,paper_q,paper_r,numeric_q,numeric_r,xstar\n");
    std::printf("%.17g,%s,%.17g,%.17g,%.17g,%.17g,", p, regime_name(reg.tag),
                paper.q, paper.r, num.q, num.r);
    if (mid && p > 0.5)
      std::printf("%.17g\n", xstar);
    else
      std::printf("\n");
    return kExitOk;
  }
  std::printf("p        = %.17g\n", p);
  std::printf("regime   = %s  (cutoffs %.17g .. %.17g)\n", regime_name(reg.tag),
              reg.lo, reg.hi);
  std::printf("paper    q=%.17g r=%.17g\n", paper.q, paper.r);
  std::printf("numeric  q=%.17g r=%.17g\n", num.q, num.r);
  if (mid && p > 0.5) std::printf("x*       = %.17g\n", xstar);
  if (p == 0.5)
    std::printf("note: boundary point; p+1 = 4p(1-p^2) = %.17g (formulas agree "
                "by continuity)\n", p + 1.0);
  return kExitOk;
}

int cmd_si(double tol, bool csv) {
  const double si = si_half_pi(tol);
  std::vector<IntegralBoundSet> sets = {
      bound_set_p_half(), bound_set_p_two_over_pi(), bound_set_optimized(),
      bound_set_prior_wide(), bound_set_prior_lower()};
  const double p0n = optimal_p0_numeric();
  const double p0c = optimal_p0_closed_form();

  if (csv) {
    std::printf("name,lower,upper,width\n");
    for (const auto& s : sets) {
      std::printf("%s,", s.name.c_str());
      if (s.lower) std::printf("%.17g", *s.lower);
      std::printf(",");
      if (s.upper) std::printf("%.17g", *s.upper);
      std::printf(",");
      if (s.lower && s.upper) std::printf("%.17g", s.width());
      std::printf("\n");
    }
    std::printf("si,%.17g,%.17g,\n", si, si);
    std::printf("p0_numeric,%.17g,,\n", p0n);
    std::printf("p0_closed_form,%.17g,,\n", p0c);
    return kExitOk;
  }

  std::printf("Si(pi/2) = %.15f  (tol %.3g)\n", si, tol);
  std::printf("p0 closed form = %.15f\n", p0c);
  std::printf("p0 numeric     = %.15f  (|diff| = %.3g)\n", p0n,
              std::fabs(p0n - p0c));
  std::printf("\nbound sets (ranked by width, narrowest first):\n");
  std::vector<const IntegralBoundSet*> ranked;
  for (const auto& s : sets)
    if (s.lower && s.upper) ranked.push_back(&s);
  std::sort(ranked.begin(), ranked.end(),
            [](const IntegralBoundSet* a, const IntegralBoundSet* b) {
              return a->width() < b->width();
            });
  for (const auto* s : ranked)
    std::printf("  %-16s [%.10f, %.10f]  width %.10f\n", s->name.c_str(),
                *s->lower, *s->upper, s->width());
  for (const auto& s : sets)
    if (!s.upper)
      std::printf("  %-16s [%.10f, -)\n", s.name.c_str(), *s.lower);
  std::printf("narrowest: %s\n", ranked.front()->name.c_str());
  return kExitOk;
}

int cmd_table(double p, std::size_t points) {
  const PosParam pp(p);
  const ConstantPair c = paper_constants(pp);
  std::printf("x,lower,exact,upper,lo_margin,hi_margin\n");
  for (std::size_t i = 0; i < points; ++i) {
    const double x =
        kHalfPi * static_cast<double>(i) / static_cast<double>(points - 1);
    const double lo = oppenheim_bound(Radians(x), pp, c.q);
    const double hi = oppenheim_bound(Radians(x), pp, c.r);
    std::printf("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x, lo, x, hi, x - lo,
                hi - x);
  }
  return kExitOk;
}

int cmd_sweep(std::size_t /*points*/) {
  std::printf("p,regime,paper_q,paper_r,numeric_q,numeric_r\n");
  for (double p : standard_p_sweep()) {
    const ConstantPair paper = paper_constants(PosParam(p));
    const ConstantPair num = numeric_constants(PosParam(p));
    std::printf("%.17g,%s,%.17g,%.17g,%.17g,%.17g\n", p,
                regime_name(classify(PosParam(p)).tag), paper.q, paper.r, num.q,
                num.r);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-sided sine and arcsin bound certification"};
  app.require_subcommand(1);

  std::size_t grid_points = 100000;
  double tol = 1e-12;
  double p = 0.0;
  std::string format = "plain";
  bool sharpness = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "csv"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "run the full check suite");
  verify->add_option("--grid-points", grid_points, "grid density")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--sharpness", sharpness, "include sharpness probes");
  add_format(verify);

  CLI::App* constants = app.add_subcommand("constants", "best constants for a given p");
  constants->add_option("--p", p, "shape parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(constants);

  CLI::App* si = app.add_subcommand("si", "sine-integral bounds report");
  si->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  add_format(si);

  CLI::App* table = app.add_subcommand("table", "CSV bound table for plotting");
  table->add_option("--p", p, "shape parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--grid-points", grid_points, "number of rows")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

  CLI::App* sweep = app.add_subcommand("sweep", "constants across the p sweep");
  (void)sweep;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool csv = format == "csv";
  try {
    if (app.got_subcommand(verify)) return cmd_verify(grid_points, tol, sharpness, csv);
    if (app.got_subcommand(constants)) return cmd_constants(p, csv);
    if (app.got_subcommand(si)) return cmd_si(tol, csv);
    if (app.got_subcommand(table))
      return cmd_table(p, grid_points == 100000 ? 101 : grid_points);
    if (app.got_subcommand(sweep)) return cmd_sweep(50);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailure;
  }
  return kExitUsage;
}
