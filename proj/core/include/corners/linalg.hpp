#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "corners/rng.hpp"

// Dense linear algebra used by the matrix-model samplers.  Eigen supplies the
// factorizations; this layer fixes conventions (descending eigenvalue order,
// deterministic Gaussian fills, Haar phase correction).

namespace corners {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;

std::vector<double> sym_eigs_desc(const Matrix& s);
std::vector<double> herm_eigs_desc(const CMatrix& h);

// Generalized symmetric/Hermitian-definite pencil A x = lambda B x with B
// positive definite.  Returns eigenvalues descending; if b_cond is non-null
// it receives the 2-norm condition number of B.
std::vector<double> pencil_eigs_desc(const Matrix& a, const Matrix& b,
                                     double* b_cond = nullptr);
std::vector<double> pencil_eigs_desc(const CMatrix& a, const CMatrix& b,
                                     double* b_cond = nullptr);

// Gaussian matrices with entrywise standard deviation sd(i, j), filled in
// row-major order so the draw is a pure function of the generator state.
Matrix gaussian_real(int rows, int cols, Rng& rng,
                     const std::function<double(int, int)>& sd);
// Complex entries with E|z_ij|^2 = sd(i, j)^2.
CMatrix gaussian_complex(int rows, int cols, Rng& rng,
                         const std::function<double(int, int)>& sd);

// Haar-distributed orthogonal/unitary matrices: QR of a Ginibre matrix with
// the R-diagonal phase folded into Q (without the phase fix QR is not Haar).
Matrix haar_orthogonal(int n, Rng& rng);
CMatrix haar_unitary(int n, Rng& rng);

}  // namespace corners
