#include "corners/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "corners/linalg.hpp"

namespace corners {

namespace {

// Nonzero spectrum of the Gram matrix of the first l rows, via whichever of
// A_l A_l^* or A_l^* A_l is smaller.
std::vector<double> gram_spectrum(const Matrix& a, int l) {
  const int n = static_cast<int>(a.cols());
  const auto rows = a.topRows(l);
  Matrix g = (l <= n) ? Matrix(rows * rows.transpose())
                      : Matrix(rows.transpose() * rows);
  return sym_eigs_desc(g);
}

std::vector<double> gram_spectrum(const CMatrix& a, int l) {
  const int n = static_cast<int>(a.cols());
  const auto rows = a.topRows(l);
  CMatrix g = (l <= n) ? CMatrix(rows * rows.adjoint())
                       : CMatrix(rows.adjoint() * rows);
  return herm_eigs_desc(g);
}

}  // namespace

LevelArray sample_wishart(const WishartModel& model, Rng& rng) {
  const int n = static_cast<int>(model.pi.size());
  if (model.beta != 1 && model.beta != 2)
    throw std::invalid_argument("beta must be 1 or 2");
  if (model.m < 1 || static_cast<int>(model.pihat.size()) < model.m)
    throw std::invalid_argument("need pihat for every level");
  const auto sd = [&](int i, int j) {
    const double s2 = 1.0 / (model.pihat[i] + model.pi[j]);
    if (!(s2 > 0.0)) throw std::invalid_argument("pihat_i + pi_j must be > 0");
    return std::sqrt(s2);
  };

  LevelArray levels(model.m);
  if (model.beta == 1) {
    Matrix a = gaussian_real(model.m, n, rng, sd);
    for (int l = 1; l <= model.m; ++l) levels[l - 1] = gram_spectrum(a, l);
  } else {
    CMatrix a = gaussian_complex(model.m, n, rng, sd);
    for (int l = 1; l <= model.m; ++l) levels[l - 1] = gram_spectrum(a, l);
  }
  return levels;
}

JacobiSample sample_jacobi(const JacobiModel& model, Rng& rng) {
  if (!(1 <= model.m && model.m <= model.n && model.n <= model.A))
    throw std::invalid_argument("need 1 <= m <= n <= A");
  if (model.beta != 1 && model.beta != 2)
    throw std::invalid_argument("beta must be 1 or 2");
  const auto unit = [](int, int) { return 1.0; };
  constexpr double kMaxCond = 1e14;

  for (int attempt = 0;; ++attempt) {
    JacobiSample out;
    out.resamples = attempt;
    out.levels.resize(model.m);
    bool ok = true;
    if (model.beta == 1) {
      Matrix x = gaussian_real(model.A, model.n, rng, unit);
      Matrix y = gaussian_real(model.n, model.n, rng, unit);
      Matrix gx = x.transpose() * x;
      out.lambda_x = sym_eigs_desc(gx);
      for (int l = 1; l <= model.m && ok; ++l) {
        const auto yl = y.topRows(l);
        Matrix b = gx + Matrix(yl.transpose() * yl);
        double cond = 0.0;
        auto eigs = pencil_eigs_desc(gx, b, &cond);
        if (cond > kMaxCond) { ok = false; break; }
        // l smallest pencil eigenvalues; the other n - l equal 1 exactly.
        out.levels[l - 1].assign(eigs.end() - l, eigs.end());
      }
    } else {
      CMatrix x = gaussian_complex(model.A, model.n, rng, unit);
      CMatrix y = gaussian_complex(model.n, model.n, rng, unit);
      CMatrix gx = x.adjoint() * x;
      out.lambda_x = herm_eigs_desc(gx);
      for (int l = 1; l <= model.m && ok; ++l) {
        const auto yl = y.topRows(l);
        CMatrix b = gx + CMatrix(yl.adjoint() * yl);
        double cond = 0.0;
        auto eigs = pencil_eigs_desc(gx, b, &cond);
        if (cond > kMaxCond) { ok = false; break; }
        out.levels[l - 1].assign(eigs.end() - l, eigs.end());
      }
    }
    if (ok) return out;
  }
}

std::vector<double> tau_from_jacobi_level(const std::vector<double>& level) {
  std::vector<double> tau(level.size());
  const std::size_t p = level.size();
  for (std::size_t i = 0; i < p; ++i) tau[i] = 1.0 / level[p - 1 - i] - 1.0;
  return tau;
}

bool strictly_interlaced(const std::vector<double>& lower,
                         const std::vector<double>& upper) {
  const std::size_t k = lower.size();
  if (upper.size() != k && upper.size() != k + 1) return false;
  for (std::size_t i = 0; i + 1 < upper.size(); ++i)
    if (!(upper[i] > upper[i + 1])) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(lower[i] < upper[i])) return false;
    if (i + 1 < upper.size() && !(lower[i] > upper[i + 1])) return false;
  }
  return true;
}

bool pattern_interlaced(const LevelArray& levels) {
  for (std::size_t l = 0; l + 1 < levels.size(); ++l)
    if (!strictly_interlaced(levels[l], levels[l + 1])) return false;
  return true;
}

}  // namespace corners
