#include "corners/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace corners {

double kolmogorov_sf(double x) {
  if (x <= 0.02) return 1.0;
  double s = 0.0;
  for (int k = 1; k <= 128; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    s += (k % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::min(1.0, std::max(0.0, 2.0 * s));
}

KSResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  // Stephens' finite-sample transform of the asymptotic law.
  const double sn = std::sqrt(n);
  const double x = (sn + 0.12 + 0.11 / sn) * d;
  return {d, kolmogorov_sf(x), samples.size()};
}

double chi2_sf(double stat, double dof) {
  if (stat <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * stat);
}

std::vector<std::pair<double, double>> pool_cells(
    const std::vector<double>& observed, const std::vector<double>& expected,
    double min_expected) {
  if (observed.size() != expected.size())
    throw std::invalid_argument("cell count mismatch");
  std::vector<std::pair<double, double>> pooled;
  double o = 0.0, e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o += observed[i];
    e += expected[i];
    if (e >= min_expected) {
      pooled.emplace_back(o, e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (!pooled.empty()) {
      pooled.back().first += o;
      pooled.back().second += e;
    } else {
      pooled.emplace_back(o, e);
    }
  }
  return pooled;
}

Chi2Result chi2_test(const std::vector<double>& observed,
                     const std::vector<double>& expected,
                     double min_expected, int dof_reduction) {
  const auto pooled = pool_cells(observed, expected, min_expected);
  double stat = 0.0;
  for (const auto& [o, e] : pooled) {
    if (e <= 0.0) continue;
    const double diff = o - e;
    stat += diff * diff / e;
  }
  const double dof =
      std::max(1.0, static_cast<double>(pooled.size()) - 1.0 - dof_reduction);
  return {stat, dof, chi2_sf(stat, dof), static_cast<int>(pooled.size())};
}

MomentResult moment_z(const std::vector<double>& values, double target) {
  if (values.size() < 2) throw std::invalid_argument("need >= 2 values");
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (n - 1.0);
  const double se = std::sqrt(var / n);
  return {mean, se, target, (mean - target) / se};
}

double beta_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

}  // namespace corners
