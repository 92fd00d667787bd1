#include <cmath>
#include <vector>

#include "corners/linalg.hpp"
#include "doctest.h"

using namespace corners;

TEST_CASE("sym_eigs_desc returns descending eigenvalues") {
  Matrix s(2, 2);
  s << 2.0, 1.0, 1.0, 2.0;  // eigenvalues 3 and 1
  auto e = sym_eigs_desc(s);
  REQUIRE(e.size() == 2);
  CHECK(e[0] == doctest::Approx(3.0));
  CHECK(e[1] == doctest::Approx(1.0));
}

TEST_CASE("herm_eigs_desc on a known Hermitian matrix") {
  CMatrix h(2, 2);
  h << std::complex<double>(1.0, 0.0), std::complex<double>(0.0, 1.0),
      std::complex<double>(0.0, -1.0), std::complex<double>(1.0, 0.0);
  auto e = herm_eigs_desc(h);  // eigenvalues 2 and 0
  REQUIRE(e.size() == 2);
  CHECK(e[0] == doctest::Approx(2.0));
  CHECK(e[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pencil eigenvalues solve det(A - lambda B) = 0") {
  Matrix a(2, 2), b(2, 2);
  a << 3.0, 1.0, 1.0, 2.0;
  b << 2.0, 0.5, 0.5, 1.0;
  double cond = 0.0;
  auto e = pencil_eigs_desc(a, b, &cond);
  REQUIRE(e.size() == 2);
  CHECK(e[0] >= e[1]);
  CHECK(cond >= 1.0);
  for (double lam : e) {
    Matrix d = a - lam * b;
    CHECK(std::fabs(d.determinant()) < 1e-10);
  }
}

TEST_CASE("gaussian fills are a pure function of the generator state") {
  auto sd = [](int, int) { return 1.0; };
  Rng r1(11u), r2(11u);
  Matrix m1 = gaussian_real(3, 2, r1, sd);
  Matrix m2 = gaussian_real(3, 2, r2, sd);
  CHECK((m1 - m2).norm() == 0.0);

  Rng r3(11u);
  CMatrix c1 = gaussian_complex(2, 2, r3, sd);
  Rng r4(11u);
  CMatrix c2 = gaussian_complex(2, 2, r4, sd);
  CHECK((c1 - c2).norm() == 0.0);
}

TEST_CASE("gaussian entry scale follows sd(i, j)") {
  Rng rng(19u);
  auto sd = [](int i, int j) { return 1.0 / std::sqrt(1.0 + i + j); };
  const int reps = 40000;
  double s2 = 0.0;
  for (int k = 0; k < reps; ++k) {
    Matrix m = gaussian_real(1, 2, rng, sd);
    s2 += m(0, 1) * m(0, 1);
  }
  CHECK(s2 / reps == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("haar matrices are orthogonal / unitary") {
  Rng rng(23u);
  Matrix q = haar_orthogonal(4, rng);
  CHECK((q.transpose() * q - Matrix::Identity(4, 4)).norm() < 1e-12);
  CMatrix u = haar_unitary(4, rng);
  CHECK((u.adjoint() * u - CMatrix::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("haar first column is uniform on the sphere") {
  // E q_{00}^2 = 1/n for orthogonal Haar; a biased QR convention fails this.
  Rng rng(29u);
  const int n = 3, reps = 20000;
  double s2 = 0.0, s1 = 0.0;
  for (int k = 0; k < reps; ++k) {
    Matrix q = haar_orthogonal(n, rng);
    s1 += q(0, 0);
    s2 += q(0, 0) * q(0, 0);
  }
  CHECK(std::fabs(s1 / reps) < 0.02);
  CHECK(s2 / reps == doctest::Approx(1.0 / n).epsilon(0.05));
}
