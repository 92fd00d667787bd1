#include <cmath>
#include <vector>

#include "corners/gtpattern.hpp"
#include "doctest.h"

using namespace corners;

namespace {
const GTLogIntegrand kOne = [](const GTPoint&) { return 0.0; };
}

TEST_CASE("polytope volume, one interior level over a single part") {
  // top = {a} at m = 2: level 1 is one coordinate in [0, a], volume a.
  double lg = gt_integrate_log({1.7}, 2, kOne, QuadRule::kGaussLegendre, 32);
  CHECK(std::exp(lg) == doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("polytope volume, two interior levels over two parts") {
  // top = {a, b} at m = 3: level 2 = (x1, x2) with x1 in [b, a], x2 in [0, b],
  // level 1 = y in [x2, x1].  Volume = (a b / 2)(a - b).
  double a = 2.0, b = 0.8;
  double lg = gt_integrate_log({a, b}, 3, kOne, QuadRule::kGaussLegendre, 32);
  CHECK(std::exp(lg) == doctest::Approx(0.5 * a * b * (a - b)).epsilon(1e-12));
}

TEST_CASE("integrand sees stable box distances") {
  // f = prod over interior coords of dlo * dhi recovers
  // int_0^a x (a - x) dx = a^3 / 6 for the one-level pattern.
  double a = 1.3;
  auto f = [](const GTPoint& pt) {
    return std::log(pt.dlo[0][0]) + std::log(pt.dhi[0][0]);
  };
  double lg = gt_integrate_log({a}, 2, f, QuadRule::kGaussLegendre, 48);
  CHECK(std::exp(lg) == doctest::Approx(a * a * a / 6.0).epsilon(1e-12));
}

TEST_CASE("within_gap and cross_gap match direct differences") {
  std::vector<double> top = {2.0, 0.9};
  auto f = [&](const GTPoint& pt) {
    // Interior level 2 has two coordinates; level index 1 in `levels`.
    const auto& lv = pt.levels;
    double direct = lv[1][0] - lv[1][1];
    CHECK(pt.within_gap(1, 0) == doctest::Approx(direct).epsilon(1e-10));
    double cross00 = std::fabs(lv[0][0] - lv[1][0]);
    double cross01 = std::fabs(lv[0][0] - lv[1][1]);
    CHECK(pt.cross_gap(0, 0, 0) == doctest::Approx(cross00).epsilon(1e-8));
    CHECK(pt.cross_gap(0, 0, 1) == doctest::Approx(cross01).epsilon(1e-8));
    return 0.0;
  };
  gt_integrate_log(top, 3, f, QuadRule::kGaussLegendre, 4);
}

TEST_CASE("tanh-sinh handles endpoint powers over the polytope") {
  // int over y in [0, a] of (y (a - y))^{-1/2} dy = pi, independent of a.
  double a = 0.6;
  auto f = [](const GTPoint& pt) {
    return -0.5 * std::log(pt.dlo[0][0]) - 0.5 * std::log(pt.dhi[0][0]);
  };
  double lg = gt_integrate_log({a}, 2, f, QuadRule::kTanhSinh, 101);
  CHECK(std::exp(lg) == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("Monte Carlo companion agrees with quadrature") {
  std::vector<double> top = {2.0, 0.9};
  auto f = [](const GTPoint& pt) {
    double s = 0.0;
    for (std::size_t l = 0; l + 1 < pt.levels.size(); ++l)
      for (double x : pt.levels[l]) s -= 0.3 * x;
    return s;
  };
  double lq = gt_integrate_log(top, 3, f, QuadRule::kGaussLegendre, 48);
  Rng rng(31u);
  auto mc = gt_integrate_mc(top, 3, f, 1.0, 200000, rng);
  CHECK(mc.rel_se < 0.01);
  CHECK(std::fabs(std::exp(mc.log_value - lq) - 1.0) < 4.0 * mc.rel_se);
}
