#include <cmath>
#include <vector>

#include "corners/hyperfun.hpp"
#include "doctest.h"

using namespace corners;

// Anchor values were produced by an independent high-precision implementation
// of the same generating integrals (50-digit arithmetic, adaptive quadrature)
// and frozen to 12 digits.

TEST_CASE("log-Vandermonde helpers") {
  std::vector<double> x = {2.0, 0.5};
  CHECK(log_vandermonde(x) == doctest::Approx(std::log(1.5)).epsilon(1e-14));
  CHECK(std::exp(log_vandermonde_expneg(x)) ==
        doctest::Approx(std::exp(-0.5) - std::exp(-2.0)).epsilon(1e-13));
  std::vector<double> a = {1.0}, b = {3.0, 0.2};
  CHECK(log_cross_diff(a, b) == doctest::Approx(std::log(2.0 * 0.8)).epsilon(1e-13));
  CHECK(std::exp(log_cross_diff_expneg(a, b)) ==
        doctest::Approx((std::exp(-1.0) - std::exp(-3.0)) *
                        (std::exp(-0.2) - std::exp(-1.0)))
            .epsilon(1e-12));
}

TEST_CASE("rational family anchors, theta = 1/2") {
  const QuadSpec spec = QuadSpec::for_theta(0.5);
  std::vector<double> lam = {0.6}, s = {0.4, -0.7};
  CHECK(std::exp(log_bessel_B(lam, s, 0.5, spec)) ==
        doctest::Approx(0.938982826542).epsilon(1e-9));
}

TEST_CASE("trigonometric family anchors, theta = 1/2") {
  const QuadSpec spec = QuadSpec::for_theta(0.5);
  std::vector<double> lam = {0.6}, s = {0.4, -0.7};
  CHECK(std::exp(log_ho_Phi(lam, s, 0.5, spec)) ==
        doctest::Approx(1.29153941042).epsilon(1e-9));
  CHECK(std::exp(log_ho_F(lam, s, 0.5, spec)) ==
        doctest::Approx(1.08481025288).epsilon(1e-9));
  CHECK(std::exp(log_ho_Ftilde(lam, s, 0.5, spec)) ==
        doctest::Approx(0.91117102217).epsilon(1e-9));

  std::vector<double> lam2 = {1.2, 0.6};
  CHECK(std::exp(log_ho_Phi(lam2, s, 0.5, spec)) ==
        doctest::Approx(1.07878439638).epsilon(1e-9));
}

TEST_CASE("trigonometric anchor, theta = 1") {
  const QuadSpec spec = QuadSpec::for_theta(1.0);
  std::vector<double> lam = {1.2, 0.6}, s = {0.4, -0.7, 0.15};
  CHECK(std::exp(log_ho_F(lam, s, 1.0, spec)) ==
        doctest::Approx(5.210258453237).epsilon(1e-9));
}

TEST_CASE("principal normalization and the trig rescaling") {
  const QuadSpec spec = QuadSpec::for_theta(0.5);
  std::vector<double> lam = {1.1, 0.4};
  for (int m : {2, 3}) {
    CHECK(log_ho_F(lam, s_rho(m, 0.5), 0.5, spec) ==
          doctest::Approx(0.0).epsilon(1e-10));
  }
  // F_trig = F * exp(-((n-1)/2) theta |lam|), n = lam.size().
  std::vector<double> s = {0.3, -0.2};
  double lhs = log_ho_F_trig(lam, s, 0.5, spec);
  double rhs = log_ho_F(lam, s, 0.5, spec) - 0.5 * 0.5 * (1.2 + 0.3) +
               0.5 * 0.5 * (1.2 + 0.3) - 0.25 * (1.1 + 0.4);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("s_rho layout") {
  auto r = s_rho(3, 0.5);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == 0.0);
  CHECK(r[1] == -0.5);
  CHECK(r[2] == -1.0);
}

TEST_CASE("Monte Carlo polytope estimate brackets the quadrature value") {
  std::vector<double> lam = {0.9, 0.3}, s = {0.25, -0.4};
  const QuadSpec spec = QuadSpec::for_theta(0.5);
  double lq = log_bessel_B(lam, s, 0.5, spec);
  Rng rng(101u);
  auto mc = log_bessel_B_mc(lam, s, 0.5, 200000, rng);
  CHECK(std::fabs(std::exp(mc.log_value - lq) - 1.0) < 4.0 * mc.rel_se);
}

TEST_CASE("group integral constants") {
  // (-1)^{m(m-1)/2} prod_{k<m} k!
  CHECK(hciz_cm_exact(1) == doctest::Approx(1.0));
  CHECK(hciz_cm_exact(2) == doctest::Approx(-1.0));
  CHECK(hciz_cm_exact(3) == doctest::Approx(-2.0));
  CHECK(hciz_cm_exact(4) == doctest::Approx(12.0));
  for (int m : {2, 3}) {
    CHECK(hciz_cm_calibrated(m) ==
          doctest::Approx(hciz_cm_exact(m)).epsilon(1e-4));
  }
}

TEST_CASE("unitary group integral: determinant vs polytope routes") {
  std::vector<double> a = {1.4, 0.5}, b = {0.9, 0.2};
  const QuadSpec spec = QuadSpec::for_theta(1.0);
  double det = hciz_det(a, b);
  double gt = hciz_gt(2, a, b, spec);
  CHECK(gt == doctest::Approx(det).epsilon(1e-8));
}

TEST_CASE("orthogonal group integral: polytope vs Haar Monte Carlo") {
  std::vector<double> a = {1.1, 0.3}, b = {0.8, 0.25};
  const QuadSpec spec = QuadSpec::for_theta(0.5);
  double gt = hciz_gt(1, a, b, spec);
  Rng rng(55u);
  auto mc = hciz_mc(1, a, b, 40000, rng);
  CHECK(std::fabs(mc.mean - gt) < 4.0 * mc.se);
}
