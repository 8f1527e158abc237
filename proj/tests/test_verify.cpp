#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "oppbounds/suite.hpp"
#include "oppbounds/verify.hpp"

using namespace oppbounds;

TEST_CASE("GridSpec covers [lo, hi] and insets open endpoints by half a step") {
  const GridSpec closed{0.0, 1.0, 11};
  CHECK(closed.at(0) == 0.0);
  CHECK(closed.at(10) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(closed.at(5) == doctest::Approx(0.5).epsilon(1e-15));

  const GridSpec open{0.0, 1.0, 11, true, true};
  CHECK(open.at(0) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(open.at(10) == doctest::Approx(0.95).epsilon(1e-15));
  CHECK(open.at(5) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("check_inequality passes, fails and records the worst point") {
  const GridSpec grid{0.0, 1.0, 1001};
  const auto ok = check_inequality(
      "x_le_x2p1", [](double x) { return x; },
      [](double x) { return x * x + 1.0; }, grid, false, 0.0);
  CHECK(ok.passed);

  const auto bad = check_inequality(
      "x_le_x2", [](double x) { return x; }, [](double x) { return x * x; },
      grid, false, 1e-9);
  CHECK_FALSE(bad.passed);
  const auto worst = check_inequality(
      "one_le_sin", [](double) { return 1.0; },
      [](double x) { return std::sin(x); }, grid, false, 0.0);
  CHECK_FALSE(worst.passed);
  CHECK(worst.worst_x == 0.0);  // sin is smallest at 0
  CHECK(worst.worst_margin == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("strict inequality rejects equality, non-strict tolerates it") {
  const GridSpec grid{0.0, 1.0, 101};
  const auto id = [](double x) { return x; };
  CHECK_FALSE(check_inequality("x_lt_x", id, id, grid, true, 0.0).passed);
  CHECK(check_inequality("x_le_x", id, id, grid, false, 0.0).passed);
}

TEST_CASE("margins are normalized by the local magnitude") {
  // lhs = 1e6, rhs = 1e6 - 1: absolute violation 1, normalized 1e-6
  const GridSpec grid{0.0, 1.0, 101};
  const auto r = check_inequality(
      "big", [](double) { return 1.0e6; }, [](double) { return 1.0e6 - 1.0; },
      grid, false, 0.0);
  CHECK(r.worst_margin == doctest::Approx(-1.0e-6).epsilon(1e-9));
}

TEST_CASE("check_inequality rethrows with the offending point attached") {
  const GridSpec grid{0.0, 1.0, 101};
  CHECK_THROWS_AS(check_inequality(
                      "thrower",
                      [](double x) -> double {
                        if (x > 0.5) throw std::domain_error("boom");
                        return x;
                      },
                      [](double) { return 10.0; }, grid, false, 0.0),
                  std::runtime_error);
}

TEST_CASE("check_monotone detects direction and rejects plateaus") {
  const GridSpec grid{0.0, 1.0, 1001};
  CHECK(check_monotone("inc", [](double x) { return x * x * x + x; }, grid,
                       Direction::Increasing)
            .passed);
  CHECK(check_monotone("dec", [](double x) { return std::cos(x); }, grid,
                       Direction::Decreasing)
            .passed);
  CHECK_FALSE(check_monotone("flat", [](double) { return 1.0; }, grid,
                             Direction::Increasing)
                  .passed);
  CHECK_FALSE(check_monotone("wrong_dir", [](double x) { return -x; }, grid,
                             Direction::Increasing)
                  .passed);
}

TEST_CASE("check_unimodal_max accepts a single interior peak only") {
  const GridSpec grid{0.0, 1.0, 1001};
  const auto peak = check_unimodal_max(
      "peak", [](double x) { return -(x - 0.3) * (x - 0.3); }, grid);
  CHECK(peak.passed);
  CHECK(peak.worst_x == doctest::Approx(0.3).epsilon(1e-2));

  CHECK_FALSE(check_unimodal_max("mono", [](double x) { return x; }, grid)
                  .passed);
  CHECK_FALSE(check_unimodal_max(
                  "two_peaks",
                  [](double x) { return std::sin(6.0 * kPi * x); }, grid)
                  .passed);
  CHECK_FALSE(check_unimodal_max("valley",
                                 [](double x) { return (x - 0.5) * (x - 0.5); },
                                 grid)
                  .passed);
}

TEST_CASE("lhospital_monotone_check on a textbook instance") {
  // f1 = x^2, f2 = x on [0, 1]: d1/d2 = 2x and f1/f2 = x, both increasing.
  const GridSpec grid{0.0, 1.0, 1001, true, false};
  const auto ok = lhospital_monotone_check(
      "square_over_x", [](double x) { return x * x; },
      [](double x) { return x; }, [](double x) { return 2.0 * x; },
      [](double) { return 1.0; }, grid);
  CHECK(ok.passed);

  // anchor violation: f1 does not vanish at grid.lo
  CHECK_THROWS_AS(
      lhospital_monotone_check(
          "bad_anchor", [](double) { return 1.0; }, [](double x) { return x; },
          [](double) { return 0.0; }, [](double) { return 1.0; }, grid),
      std::invalid_argument);
}

TEST_CASE("lhospital_monotone_check fails when the function ratio decreases") {
  const GridSpec grid{0.0, 1.0, 1001, true, false};
  // f1/f2 = sin x / x is decreasing even though both vanish at 0
  const auto r = lhospital_monotone_check(
      "sinc_ratio", [](double x) { return std::sin(x); },
      [](double x) { return x; }, [](double x) { return std::cos(x); },
      [](double) { return 1.0; }, grid);
  CHECK_FALSE(r.passed);
}

TEST_CASE("brute_force_constants sanity and input validation") {
  CHECK_THROWS_AS(brute_force_constants(PosParam(1.0), 10),
                  std::invalid_argument);
  const auto pair = brute_force_constants(PosParam(1.0), 100000);
  // p = 1 is in the monotone-increasing regime: q = pi/2, r = 2
  CHECK(pair.q == doctest::Approx(kHalfPi).epsilon(1e-8));
  CHECK(pair.r == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(pair.q <= pair.r);
}

TEST_CASE("csv output is stable and parseable") {
  CheckReport r;
  r.name = "demo";
  r.passed = true;
  r.worst_x = 0.25;
  r.worst_margin = 1e-3;
  r.grid = GridSpec{0.0, 1.0, 11};
  r.tolerance = 1e-12;
  CHECK(CheckReport::csv_header() ==
        "name,passed,worst_x,worst_margin,points,tolerance");
  const std::string row = r.csv_row();
  CHECK(row.substr(0, 7) == "demo,1,");
  CHECK(std::count(row.begin(), row.end(), ',') == 5);
}

TEST_CASE("standard_p_sweep covers the boundaries exactly once, sorted") {
  const auto sweep = standard_p_sweep();
  CHECK(sweep.size() == 50);
  CHECK(std::is_sorted(sweep.begin(), sweep.end()));
  CHECK(sweep.front() == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(sweep.back() == doctest::Approx(3.0).epsilon(1e-15));
  for (const double cut : {0.5, kHalfPi - 1.0, 2.0 / kPi}) {
    CHECK(std::count(sweep.begin(), sweep.end(), cut) == 1);
  }
}

TEST_CASE("the standard suite passes end to end on a reduced grid") {
  SuiteOptions options;
  options.grid_points = 20000;  // keep the unit-test run quick
  const auto reports = run_standard_suite(options);
  CHECK(reports.size() > 100);
  std::set<std::string> names;
  for (const auto& r : reports) {
    CHECK_MESSAGE(r.passed, r.csv_row());
    names.insert(r.name);
  }
  CHECK(names.size() == reports.size());  // no duplicate check names
}

TEST_CASE("sharpness probes are included on demand and pass") {
  SuiteOptions options;
  options.grid_points = 5000;
  options.sharpness = true;
  const auto with = run_standard_suite(options);
  options.sharpness = false;
  const auto without = run_standard_suite(options);
  CHECK(with.size() > without.size());
  bool saw_probe = false;
  for (const auto& r : with) {
    if (r.name.rfind("probe_", 0) == 0) {
      saw_probe = true;
      CHECK_MESSAGE(r.passed, r.csv_row());
    }
  }
  CHECK(saw_probe);
}
