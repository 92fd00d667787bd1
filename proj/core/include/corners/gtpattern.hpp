#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "corners/quadrature.hpp"
#include "corners/rng.hpp"

// Integration over Gelfand-Tsetlin polytopes.  A pattern over a fixed top
// row `top` (level m, p = top.size() parts, decreasing) consists of levels
// l = 1..m where level l has min(l, p) parts and consecutive levels
// interlace: the box of coordinate i at level l (0-based i) is
//   [ up[i+1] if it exists else 0 ,  up[i] ]
// against the parts `up` of level l + 1.  This covers both the growing
// (l < p) and saturated (l >= p) regions.

namespace corners {

struct GTPoint {
  // levels[l-1] holds level l; levels.back() is the fixed top row.
  std::vector<std::vector<double>> levels;
  // Distances of each interior coordinate to its box endpoints, computed
  // stably by the integrator.  Index layout mirrors `levels`; the top row
  // entries are unused.
  std::vector<std::vector<double>> dlo, dhi;

  int n_levels() const { return static_cast<int>(levels.size()); }

  // Stable difference levels[l][i] - levels[l][i+1] of within-level
  // neighbours, valid because the two boxes share the endpoint up[i+1].
  double within_gap(int l, int i) const { return dlo[l][i] + dhi[l][i + 1]; }

  // Stable |levels[l][i] - levels[l+1][j]| for the cross pairs that can
  // collide (j = i and j = i + 1); other pairs may subtract directly.
  double cross_gap(int l, int i, int j) const {
    if (j == i) return dhi[l][i];
    if (j == i + 1) return dlo[l][i];
    double d = levels[l][i] - levels[l + 1][j];
    return d < 0 ? -d : d;
  }
};

using GTLogIntegrand = std::function<double(const GTPoint&)>;

// Iterated fixed-order quadrature of exp(log_f) over the interior levels
// 1..m-1 with level m = top held fixed.  Returns log of the integral.
double gt_integrate_log(const std::vector<double>& top, int m_levels,
                        const GTLogIntegrand& log_f, QuadRule rule, int order);

// Monte Carlo companion: every box coordinate is drawn from a Beta(theta,
// theta) image, which matches the (theta - 1)-power endpoint factors of the
// generating-function integrands.  Returns the log of the mean estimate and
// its relative standard error.
struct GTMonteCarloResult {
  double log_value;
  double rel_se;
};
GTMonteCarloResult gt_integrate_mc(const std::vector<double>& top, int m_levels,
                                   const GTLogIntegrand& log_f, double theta,
                                   std::size_t n_samples, Rng& rng);

}  // namespace corners
