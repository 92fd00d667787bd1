#include "corners/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace corners {

namespace {

template <class Vec>
std::vector<double> descending(const Vec& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace

std::vector<double> sym_eigs_desc(const Matrix& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("sym_eigs_desc: eig failed");
  return descending(es.eigenvalues());
}

std::vector<double> herm_eigs_desc(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("herm_eigs_desc: eig failed");
  return descending(es.eigenvalues());
}

std::vector<double> pencil_eigs_desc(const Matrix& a, const Matrix& b, double* b_cond) {
  if (b_cond) {
    auto be = sym_eigs_desc(b);
    *b_cond = be.front() / be.back();
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(a, b, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success) throw std::runtime_error("pencil_eigs_desc: eig failed");
  return descending(es.eigenvalues());
}

std::vector<double> pencil_eigs_desc(const CMatrix& a, const CMatrix& b, double* b_cond) {
  if (b_cond) {
    auto be = herm_eigs_desc(b);
    *b_cond = be.front() / be.back();
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(a, b, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success) throw std::runtime_error("pencil_eigs_desc: eig failed");
  return descending(es.eigenvalues());
}

Matrix gaussian_real(int rows, int cols, Rng& rng,
                     const std::function<double(int, int)>& sd) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = sd(i, j) * rng.normal();
  return m;
}

CMatrix gaussian_complex(int rows, int cols, Rng& rng,
                         const std::function<double(int, int)>& sd) {
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = sd(i, j) * rng.cnormal();
  return m;
}

Matrix haar_orthogonal(int n, Rng& rng) {
  Matrix g = gaussian_real(n, n, rng, [](int, int) { return 1.0; });
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

CMatrix haar_unitary(int n, Rng& rng) {
  CMatrix g = gaussian_complex(n, n, rng, [](int, int) { return 1.0; });
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    double ad = std::abs(d);
    if (ad > 0.0) q.col(j) *= d / ad;
  }
  return q;
}

}  // namespace corners
