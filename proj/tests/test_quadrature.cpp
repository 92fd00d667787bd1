#include <cmath>

#include "corners/quadrature.hpp"
#include "doctest.h"

using namespace corners;

TEST_CASE("Gauss-Legendre integrates smooth functions to machine precision") {
  auto nodes = interval_nodes(QuadRule::kGaussLegendre, 32, 0.0, 1.0);
  double lg = quad_log(nodes, [](const QuadNode& nd) { return 2.0 * std::log(nd.x); });
  CHECK(std::exp(lg) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  nodes = interval_nodes(QuadRule::kGaussLegendre, 32, -2.0, 3.0);
  lg = quad_log(nodes, [](const QuadNode& nd) { return -nd.x; });
  CHECK(std::exp(lg) == doctest::Approx(std::exp(2.0) - std::exp(-3.0)).epsilon(1e-13));
}

TEST_CASE("tanh-sinh handles endpoint power singularities via dlo/dhi") {
  // int_0^1 x^{-1/2} (1-x)^{-1/2} dx = pi.
  auto nodes = interval_nodes(QuadRule::kTanhSinh, 101, 0.0, 1.0);
  double lg = quad_log(nodes, [](const QuadNode& nd) {
    return -0.5 * std::log(nd.dlo) - 0.5 * std::log(nd.dhi);
  });
  CHECK(std::exp(lg) == doctest::Approx(M_PI).epsilon(1e-12));

  // Beta(1/2, 3/2) = pi / 2.
  lg = quad_log(nodes, [](const QuadNode& nd) {
    return -0.5 * std::log(nd.dlo) + 0.5 * std::log(nd.dhi);
  });
  CHECK(std::exp(lg) == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("dlo and dhi stay consistent with x") {
  for (auto rule : {QuadRule::kGaussLegendre, QuadRule::kTanhSinh}) {
    auto nodes = interval_nodes(rule, 48, 0.25, 4.0);
    for (const QuadNode& nd : nodes) {
      CHECK(nd.dlo > 0.0);
      CHECK(nd.dhi > 0.0);
      CHECK(nd.dlo + nd.dhi == doctest::Approx(3.75).epsilon(1e-12));
      CHECK(nd.x == doctest::Approx(0.25 + nd.dlo).epsilon(1e-9));
    }
  }
}

TEST_CASE("half-line rule integrates exponential-type tails") {
  auto nodes = half_line_nodes(101);
  // int_0^inf e^{-x} dx = 1.
  double lg = quad_log(nodes, [](const QuadNode& nd) { return -nd.x; });
  CHECK(std::exp(lg) == doctest::Approx(1.0).epsilon(1e-12));
  // int_0^inf x^{3/2} e^{-2x} dx = Gamma(5/2) / 2^{5/2}.
  lg = quad_log(nodes, [](const QuadNode& nd) { return 1.5 * std::log(nd.x) - 2.0 * nd.x; });
  CHECK(std::exp(lg) ==
        doctest::Approx(std::tgamma(2.5) / std::pow(2.0, 2.5)).epsilon(1e-10));
}

TEST_CASE("rule_for_theta picks smooth vs singular rules") {
  CHECK(rule_for_theta(1.0) == QuadRule::kGaussLegendre);
  CHECK(rule_for_theta(0.5) == QuadRule::kTanhSinh);
  CHECK(rule_for_theta(2.0) == QuadRule::kTanhSinh);
}

TEST_CASE("quad_log skips -inf integrand values") {
  auto nodes = interval_nodes(QuadRule::kGaussLegendre, 24, 0.0, 2.0);
  // Indicator of [0, 1]: integral is 1.
  double lg = quad_log(nodes, [](const QuadNode& nd) {
    return nd.x <= 1.0 ? 0.0 : kNegInf;
  });
  // Coarse: the discontinuity is not a quadrature-friendly integrand, just
  // confirm the -inf terms do not poison the sum.
  CHECK(std::isfinite(lg));
  CHECK(std::exp(lg) == doctest::Approx(1.0).epsilon(0.05));
}
