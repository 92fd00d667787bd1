#include <cmath>
#include <vector>

#include "corners/qseries.hpp"
#include "doctest.h"

using namespace corners;
using namespace corners::mac;

// Reference values computed independently with 50-digit arithmetic and
// frozen here; tolerances leave two orders of magnitude of slack over
// double rounding.

TEST_CASE("q-Pochhammer infinite products") {
  CHECK(qpoch_inf(0.5, 0.5) == doctest::Approx(0.28878809508660242128).epsilon(1e-14));
  CHECK(qpoch_inf(0.12, 0.3) == doctest::Approx(0.83527818808202766195).epsilon(1e-14));
  CHECK(std::exp(log_qpoch_inf(0.12, 0.3)) ==
        doctest::Approx(0.83527818808202766195).epsilon(1e-14));
  CHECK(qpoch_inf(0.0, 0.5) == doctest::Approx(1.0));
  CHECK(log_qpoch_inf(1.0, 0.5) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("finite q-Pochhammer") {
  CHECK(qpoch_fin(0.12, 0.3, 5) == doctest::Approx(0.83562625264143173632).epsilon(1e-14));
  CHECK(std::exp(log_qpoch_fin(0.12, 0.3, 5)) ==
        doctest::Approx(0.83562625264143173632).epsilon(1e-14));
  CHECK(qpoch_fin(0.4, 0.9, 0) == doctest::Approx(1.0));
  CHECK(qpoch_fin(0.4, 0.9, 1) == doctest::Approx(0.6));
}

TEST_CASE("q-gamma and the f-ratio") {
  CHECK(std::exp(log_qgamma(1.5, 0.7)) ==
        doctest::Approx(0.90500683951492477514).epsilon(1e-13));
  CHECK(std::exp(log_f_ratio(0.2, 0.3, 0.7)) ==
        doctest::Approx(0.883336929956644787).epsilon(1e-13));
  // Gamma_q(1) = 1 for any q.
  CHECK(log_qgamma(1.0, 0.41) == doctest::Approx(0.0));
}

TEST_CASE("FCache agrees with direct evaluation and memoizes") {
  FCache f(0.3, 0.7);
  double direct = log_f_ratio(std::pow(0.3, 2) * std::pow(0.7, 1), 0.3, 0.7);
  CHECK(f.log_f(2, 1) == doctest::Approx(direct).epsilon(1e-15));
  CHECK(f.log_f(2, 1) == f.log_f(2, 1));
}

TEST_CASE("branching coefficients") {
  FCache f(0.3, 0.7);
  CHECK(std::exp(log_psi({2, 1}, {1, 1}, 3, f)) ==
        doctest::Approx(0.70914271298618427887).epsilon(1e-13));
  FCache f2(0.3, 0.7);
  CHECK(std::exp(log_psi({3, 1}, {2}, 2, f2)) ==
        doctest::Approx(0.49367088607594936709).epsilon(1e-13));
  // Non-interlacing pairs are excluded before any product is formed.
  CHECK(log_psi({2, 2}, {1}, 2, f) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("Macdonald P values") {
  std::vector<double> x = {0.2, 0.5, 0.11};
  CHECK(macdonald_P({2, 1}, x, 0.3, 0.7) ==
        doctest::Approx(0.12360094958968347011).epsilon(1e-13));
  // q = t degenerates to the Schur polynomial: s_{(2,1)} = e1 e2 - e3.
  double e1 = 0.2 + 0.5 + 0.11;
  double e2 = 0.2 * 0.5 + 0.2 * 0.11 + 0.5 * 0.11;
  double e3 = 0.2 * 0.5 * 0.11;
  CHECK(macdonald_P({2, 1}, x, 0.4, 0.4) ==
        doctest::Approx(e1 * e2 - e3).epsilon(1e-13));
  // Empty partition is identically 1; symmetry under variable swap.
  CHECK(macdonald_P({}, x, 0.3, 0.7) == doctest::Approx(1.0));
  std::vector<double> xs = {0.5, 0.11, 0.2};
  CHECK(macdonald_P({2, 1}, xs, 0.3, 0.7) ==
        doctest::Approx(macdonald_P({2, 1}, x, 0.3, 0.7)).epsilon(1e-13));
}

TEST_CASE("principal specialization and b-norm") {
  CHECK(std::exp(log_principal_P({2, 1}, 3, 0.3, 0.7)) ==
        doctest::Approx(2.7408350644783118406).epsilon(1e-13));
  CHECK(std::exp(log_principal_P({3}, 4, 0.3, 0.7)) ==
        doctest::Approx(3.1068114208447509558).epsilon(1e-13));
  CHECK(std::exp(log_b_norm({2, 1}, 0.3, 0.7)) ==
        doctest::Approx(0.16720754470411430314).epsilon(1e-13));
  CHECK(std::exp(log_b_norm({3, 1}, 0.3, 0.7)) ==
        doctest::Approx(0.15535717457342289112).epsilon(1e-13));
}

TEST_CASE("truncated Cauchy pairing against the closed product") {
  std::vector<double> x = {0.25, 0.3}, y = {0.2, 0.3};
  struct Row {
    double q, t, value;
  };
  // Values are the converged pairings; q = t cases coincide (Schur limit).
  const Row rows[] = {
      {0.3, 0.7, 1.131758114777045858},
      {0.7, 0.3, 1.9350449569717032468},
      {0.3, 0.3, 1.3303484748044165513},
      {0.7, 0.7, 1.3303484748044165513},
  };
  for (const Row& r : rows) {
    CHECK(cauchy_product(x, y, r.q, r.t) == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(cauchy_sum(x, y, r.q, r.t, 16, 2) == doctest::Approx(r.value).epsilon(1e-7));
  }
}
