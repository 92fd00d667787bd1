#include <cmath>
#include <cstdint>
#include <vector>

#include "corners/rng.hpp"
#include "doctest.h"

using namespace corners;

TEST_CASE("identical seeds give identical streams") {
  Rng a(987654321u), b(987654321u);
  for (int i = 0; i < 100; ++i) CHECK(a.raw() == b.raw());
}

TEST_CASE("substreams differ from each other and from the base stream") {
  Rng base(42u), s0(42u, 0), s1(42u, 1);
  int equal01 = 0, equal0b = 0;
  for (int i = 0; i < 64; ++i) {
    std::uint64_t x0 = s0.raw(), x1 = s1.raw(), xb = base.raw();
    equal01 += (x0 == x1);
    equal0b += (x0 == xb);
  }
  CHECK(equal01 == 0);
  CHECK(equal0b == 0);
}

TEST_CASE("substream draws are reproducible") {
  Rng a(7u, 13), b(7u, 13);
  for (int i = 0; i < 10; ++i) CHECK(a.normal() == b.normal());
}

TEST_CASE("uniform stays in (0, 1]") {
  Rng r(1u);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    double u = r.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo > 0.0);
  CHECK(hi <= 1.0);
}

TEST_CASE("normal moments") {
  Rng r(3u);
  const int n = 200000;
  double s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = r.normal();
    s1 += x;
    s2 += x * x;
  }
  CHECK(std::fabs(s1 / n) < 0.01);
  CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("cnormal has unit second absolute moment") {
  Rng r(4u);
  const int n = 100000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::norm(r.cnormal());
  CHECK(s / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gamma_shape mean and variance equal the shape") {
  Rng r(5u);
  for (double shape : {0.5, 1.0, 2.5, 7.0}) {
    const int n = 100000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = r.gamma_shape(shape);
      s1 += x;
      s2 += x * x;
    }
    double mean = s1 / n, var = s2 / n - mean * mean;
    CHECK(mean == doctest::Approx(shape).epsilon(0.03));
    CHECK(var == doctest::Approx(shape).epsilon(0.06));
  }
}

TEST_CASE("beta_symmetric matches Beta(a, a) moments") {
  Rng r(6u);
  // Var of Beta(a, a) is 1 / (4 (2a + 1)).
  for (double a : {0.5, 1.0, 2.0}) {
    const int n = 100000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = r.beta_symmetric(a);
      CHECK(x > 0.0);
      CHECK(x < 1.0);
      s1 += x;
      s2 += x * x;
    }
    double mean = s1 / n, var = s2 / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(var == doctest::Approx(0.25 / (2.0 * a + 1.0)).epsilon(0.05));
  }
}
