#include <cmath>
#include <vector>

#include "corners/logvalue.hpp"
#include "doctest.h"

using namespace corners;

TEST_CASE("log_sum_exp basic and -inf handling") {
  CHECK(log_sum_exp(std::log(2.0), std::log(3.0)) == doctest::Approx(std::log(5.0)));
  CHECK(log_sum_exp(kNegInf, 1.5) == 1.5);
  CHECK(log_sum_exp(1.5, kNegInf) == 1.5);
  CHECK(log_sum_exp(kNegInf, kNegInf) == kNegInf);
  // No overflow for huge operands.
  CHECK(log_sum_exp(1e300, 1e300) == doctest::Approx(1e300 + std::log(2.0)));
}

TEST_CASE("log1mexp both regimes") {
  // Near zero: 1 - e^{-x} ~ x.
  CHECK(log1mexp(1e-12) == doctest::Approx(std::log(1e-12)).epsilon(1e-9));
  // Large x: log(1 - e^{-x}) ~ -e^{-x}.
  CHECK(log1mexp(50.0) == doctest::Approx(-std::exp(-50.0)));
  CHECK(log1mexp(0.0) == kNegInf);
  // Continuity across the log 2 split point.
  double lo = log1mexp(std::log(2.0) - 1e-13);
  double hi = log1mexp(std::log(2.0) + 1e-13);
  CHECK(std::fabs(lo - hi) < 1e-12);
}

TEST_CASE("log_abs_diff_exp_neg against direct evaluation") {
  double a = 0.3, b = 1.7;
  CHECK(log_abs_diff_exp_neg(a, b) ==
        doctest::Approx(std::log(std::exp(-a) - std::exp(-b))));
  CHECK(log_abs_diff_exp_neg(b, a) == doctest::Approx(log_abs_diff_exp_neg(a, b)));
  // Close arguments where naive subtraction would cancel.
  double c = 5.0, d = 5.0 + 1e-9;
  CHECK(log_abs_diff_exp_neg(c, d) == doctest::Approx(-c + std::log(1e-9)).epsilon(1e-6));
}

TEST_CASE("LogSum accumulates in any order") {
  std::vector<double> terms = {-700.0, 0.0, -2.0, 3.0, kNegInf, -690.0};
  double direct = kNegInf;
  for (double t : terms) direct = log_sum_exp(direct, t);

  LogSum fwd, rev;
  for (double t : terms) fwd.add(t);
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) rev.add(*it);
  CHECK(fwd.log_value() == doctest::Approx(direct));
  CHECK(rev.log_value() == doctest::Approx(direct));

  LogSum empty;
  CHECK(empty.empty());
  CHECK(empty.log_value() == kNegInf);
}

TEST_CASE("LogSum survives terms far below the running shift") {
  LogSum s;
  s.add(0.0);
  for (int i = 0; i < 1000; ++i) s.add(-800.0);  // exp(-800) underflows alone
  CHECK(s.log_value() == doctest::Approx(0.0));
}
