#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Goodness-of-fit statistics used by the verification suite.

namespace corners {

// Survival function of the Kolmogorov distribution,
// P(sup_t |B(t)| > x) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2).
double kolmogorov_sf(double x);

struct KSResult {
  double d = 0.0;  // sup-norm distance between empirical and model CDF
  double p = 1.0;  // finite-sample corrected asymptotic p-value
  std::size_t n = 0;
};

KSResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf);

// Upper tail of chi^2 with dof degrees of freedom.
double chi2_sf(double stat, double dof);

struct Chi2Result {
  double stat = 0.0;
  double dof = 0.0;
  double p = 1.0;
  int cells = 0;  // cells remaining after pooling
};

// Pearson statistic after pooling adjacent cells until every expected count
// reaches min_expected.  dof = cells - 1 - dof_reduction.
Chi2Result chi2_test(const std::vector<double>& observed,
                     const std::vector<double>& expected,
                     double min_expected = 5.0, int dof_reduction = 0);

// Pools cells in place (same pooling rule); returns pooled pairs.
std::vector<std::pair<double, double>> pool_cells(
    const std::vector<double>& observed, const std::vector<double>& expected,
    double min_expected);

struct MomentResult {
  double mc = 0.0;      // Monte Carlo mean
  double se = 0.0;      // standard error of the mean
  double target = 0.0;  // quadrature value
  double z = 0.0;       // (mc - target) / se
};

MomentResult moment_z(const std::vector<double>& values, double target);

// Regularized incomplete beta CDF on [0, 1].
double beta_cdf(double a, double b, double x);

}  // namespace corners
