#include "corners/densities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "corners/logvalue.hpp"
#include "corners/quadrature.hpp"

namespace corners {

namespace {

double vec_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double sum_log(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::log(x);
  return s;
}

double sum_log1mexp(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += log1mexp(x);
  return s;
}

// ((p-1)/2)|x| + sum_{i<j} log|e^{-x_i} - e^{-x_j}|: the trigonometric
// Vandermonde prod 2 sinh((x_i-x_j)/2) up to ordering sign.
double log_vandermonde_trig(const std::vector<double>& x) {
  const double p = static_cast<double>(x.size());
  return 0.5 * (p - 1.0) * vec_sum(x) + log_vandermonde_expneg(x);
}

bool level_shapes_ok(const LevelArray& levels, int n) {
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const std::size_t want = std::min<std::size_t>(l + 1, static_cast<std::size_t>(n));
    if (levels[l].size() != want) return false;
    for (std::size_t i = 0; i < levels[l].size(); ++i) {
      if (!(levels[l][i] > 0.0)) return false;
      if (i + 1 < levels[l].size() && !(levels[l][i] > levels[l][i + 1])) return false;
    }
  }
  return true;
}

// pairwise Gamma factor of the trigonometric ensemble
double log_gamma_pair_product(double theta, const std::vector<double>& pi,
                              const std::vector<double>& pihat, int m) {
  double lg = 0.0;
  for (int i = 0; i < m; ++i)
    for (double pj : pi) {
      const double a = theta * (pj + pihat[i]);
      lg += std::lgamma(theta + a) - std::lgamma(a);
    }
  return lg;
}

}  // namespace

double log_wishart_joint(double theta, const std::vector<double>& pi,
                         const std::vector<double>& pihat,
                         const LevelArray& levels, const QuadSpec& spec) {
  const int n = static_cast<int>(pi.size());
  const int m = static_cast<int>(levels.size());
  if (static_cast<int>(pihat.size()) < m)
    throw std::invalid_argument("need pihat for every level");
  if (!level_shapes_ok(levels, n) || !pattern_interlaced(levels)) return kNegInf;
  const int p = std::min(m, n);
  const auto& top = levels[m - 1];

  double lg = 0.0;
  for (int j = 0; j < m; ++j)
    for (double pii : pi) lg += theta * std::log(pihat[j] + pii);
  lg += theta * log_vandermonde(top);
  double prev_sum = 0.0;
  for (int l = 0; l < m; ++l) {
    const double cur = vec_sum(levels[l]);
    lg -= theta * pihat[l] * (cur - prev_sum);
    prev_sum = cur;
  }
  lg += theta * (n - p) * sum_log(top);
  if (p < m) lg += (theta - 1.0) * (sum_log(levels[p - 1]) - sum_log(top));
  for (int l = 0; l + 1 < m; ++l)
    lg += (theta - 1.0) * (log_cross_diff(levels[l], levels[l + 1]) -
                           log_vandermonde(levels[l]) -
                           log_vandermonde(levels[l + 1]));

  std::vector<double> s(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) s[j] = -theta * pi[j];
  lg += log_bessel_Btilde(top, s, theta, spec);
  return lg;
}

double log_wishart_marginal(double theta, const std::vector<double>& pi,
                            const std::vector<double>& pihat, int m,
                            const std::vector<double>& mu,
                            const QuadSpec& spec) {
  const int n = static_cast<int>(pi.size());
  const int p = std::min(m, n);
  if (static_cast<int>(mu.size()) != p)
    throw std::invalid_argument("top level must have min(m, n) parts");
  if (static_cast<int>(pihat.size()) < m)
    throw std::invalid_argument("need pihat for every level");
  for (int i = 0; i < p; ++i) {
    if (!(mu[i] > 0.0)) return kNegInf;
    if (i + 1 < p && !(mu[i] > mu[i + 1])) return kNegInf;
  }

  double lg = 0.0;
  for (int j = 0; j < m; ++j)
    for (double pii : pi) lg += theta * std::log(pihat[j] + pii);
  lg += 2.0 * theta * log_vandermonde(mu);
  lg += theta * (std::max(m, n) - p) * sum_log(mu);
  std::vector<double> shat(pihat.begin(), pihat.begin() + m);
  for (double& v : shat) v *= -theta;
  std::vector<double> s(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) s[j] = -theta * pi[j];
  lg += log_bessel_B(mu, shat, theta, spec);
  lg += log_bessel_Btilde(mu, s, theta, spec);
  return lg;
}

double log_kernel_beta2(const std::vector<double>& pi, double pihat_m, int m,
                        const std::vector<double>& prev,
                        const std::vector<double>& next, const QuadSpec& spec) {
  const int n = static_cast<int>(pi.size());
  const int p = std::min(m, n);
  const int pp = std::min(m - 1, n);
  if (static_cast<int>(next.size()) != p || static_cast<int>(prev.size()) != pp)
    throw std::invalid_argument("level sizes must be min(m, n) and min(m-1, n)");
  if (!strictly_interlaced(prev, next)) return kNegInf;

  std::vector<double> s(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) s[j] = -pi[j];

  double lg = 0.0;
  for (double pii : pi) lg += std::log(pii + pihat_m);
  lg += (n - p) * sum_log(next) - (n - pp) * sum_log(prev);
  lg += log_bessel_B(next, s, 1.0, spec) + log_vandermonde(next);
  if (!prev.empty())
    lg -= log_bessel_B(prev, s, 1.0, spec) + log_vandermonde(prev);
  lg -= pihat_m * (vec_sum(next) - vec_sum(prev));
  return lg;
}

double log_kernel_beta1(const std::vector<double>& pi, double pihat_m, int m,
                        const std::vector<double>& prev,
                        const std::vector<double>& next, const QuadSpec& spec) {
  const int n = static_cast<int>(pi.size());
  const int p = std::min(m, n);
  const int pp = std::min(m - 1, n);
  if (static_cast<int>(next.size()) != p || static_cast<int>(prev.size()) != pp)
    throw std::invalid_argument("level sizes must be min(m, n) and min(m-1, n)");
  if (!strictly_interlaced(prev, next)) return kNegInf;
  const int ind = (m <= n) ? 1 : 0;

  std::vector<double> s(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) s[j] = -0.5 * pi[j];

  double lg = -std::lgamma(0.5 * m) - m * std::lgamma(0.5);
  for (double pii : pi) lg += 0.5 * std::log(pii + pihat_m);
  lg -= 0.5 * pihat_m * (vec_sum(next) - vec_sum(prev));
  lg += 0.5 * (n - p - ind) * sum_log(next) - 0.5 * (n - pp - ind) * sum_log(prev);
  lg += log_bessel_B(next, s, 0.5, spec);
  if (!prev.empty()) lg -= log_bessel_B(prev, s, 0.5, spec);
  lg += log_vandermonde(next);
  if (!prev.empty()) lg -= 0.5 * log_cross_diff(next, prev);
  return lg;
}

double kernel_lognorm(int beta, const std::vector<double>& pi, double pihat_m,
                      int m, const std::vector<double>& prev,
                      const QuadSpec& spec) {
  if (beta != 1 && beta != 2) throw std::invalid_argument("beta must be 1 or 2");
  const int n = static_cast<int>(pi.size());
  const int p = std::min(m, n);
  // Interlacing box of coordinate i (1-based): lower bound prev_i (or 0 past
  // the end of prev), upper bound prev_{i-1} (or +inf for i = 1).
  LogSum acc;
  std::vector<double> next(p);
  const auto top_nodes = half_line_nodes(spec.order);
  std::function<void(int, double)> rec = [&](int i, double log_w) {
    const double lo = (i < static_cast<int>(prev.size())) ? prev[i] : 0.0;
    if (i == 0) {
      const double shift = prev.empty() ? 0.0 : prev[0];
      for (const QuadNode& nd : top_nodes) {
        next[0] = shift + nd.x;
        rec(1, std::log(nd.w));
      }
      return;
    }
    if (i == p) {
      const double lf = (beta == 1)
                            ? log_kernel_beta1(pi, pihat_m, m, prev, next, spec)
                            : log_kernel_beta2(pi, pihat_m, m, prev, next, spec);
      if (lf != kNegInf) acc.add(lf + log_w);
      return;
    }
    const double hi = prev[i - 1];
    for (const QuadNode& nd : interval_nodes(spec.rule, spec.order, lo, hi)) {
      next[i] = nd.x;
      rec(i + 1, log_w + std::log(nd.w));
    }
  };
  rec(0, 0.0);
  return acc.log_value();
}

double log_kernel_beta1_unit(int n, int m, const std::vector<double>& prev,
                             const std::vector<double>& next) {
  const int p = std::min(m, n);
  const int pp = std::min(m - 1, n);
  if (static_cast<int>(next.size()) != p || static_cast<int>(prev.size()) != pp)
    throw std::invalid_argument("level sizes must be min(m, n) and min(m-1, n)");
  if (!strictly_interlaced(prev, next)) return kNegInf;
  const int ind = (m <= n) ? 1 : 0;

  double lg = -std::lgamma(0.5 * m) - m * std::lgamma(0.5);
  lg -= 0.5 * (vec_sum(next) - vec_sum(prev));
  lg += 0.5 * (n - p - ind) * sum_log(next) - 0.5 * (n - pp - ind) * sum_log(prev);
  lg += log_vandermonde(next);
  if (!prev.empty()) lg -= 0.5 * log_cross_diff(next, prev);
  return lg;
}

double log_ho_joint(double theta, const std::vector<double>& pi,
                    const std::vector<double>& pihat, const LevelArray& levels,
                    const QuadSpec& spec) {
  const int n = static_cast<int>(pi.size());
  const int m = static_cast<int>(levels.size());
  if (static_cast<int>(pihat.size()) < m)
    throw std::invalid_argument("need pihat for every level");
  if (!level_shapes_ok(levels, n) || !pattern_interlaced(levels)) return kNegInf;
  const int p = std::min(m, n);
  const auto& top = levels[m - 1];

  double lg = log_gamma_pair_product(theta, pi, pihat, m);
  lg += theta * log_vandermonde_trig(top);
  lg += theta * (n - p) * sum_log1mexp(top);
  if (p < m)
    lg += (theta - 1.0) * (sum_log1mexp(levels[p - 1]) - sum_log1mexp(top));
  double prev_sum = 0.0;
  for (int l = 0; l < m; ++l) {
    const double cur = vec_sum(levels[l]);
    lg -= theta * pihat[l] * (cur - prev_sum);
    prev_sum = cur;
  }
  for (int l = 0; l + 1 < m; ++l) {
    lg += (theta - 1.0) * (log_cross_diff_expneg(levels[l], levels[l + 1]) -
                           log_vandermonde_expneg(levels[l]) -
                           log_vandermonde_expneg(levels[l + 1]));
    lg += (theta - 1.0) * vec_sum(levels[l]);
  }

  std::vector<double> s(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) s[j] = -theta * pi[j];
  lg += log_ho_Ftilde_trig(top, s, theta, spec);
  return lg;
}

double log_ho_marginal(double theta, const std::vector<double>& pi,
                       const std::vector<double>& pihat, int m,
                       const std::vector<double>& mu, const QuadSpec& spec) {
  const int n = static_cast<int>(pi.size());
  const int p = std::min(m, n);
  if (static_cast<int>(mu.size()) != p)
    throw std::invalid_argument("top level must have min(m, n) parts");
  if (static_cast<int>(pihat.size()) < m)
    throw std::invalid_argument("need pihat for every level");
  for (int i = 0; i < p; ++i) {
    if (!(mu[i] > 0.0)) return kNegInf;
    if (i + 1 < p && !(mu[i] > mu[i + 1])) return kNegInf;
  }

  double lg = log_gamma_pair_product(theta, pi, pihat, m);
  lg += 2.0 * theta * log_vandermonde_trig(mu);
  lg += theta * (std::max(m, n) - p) * sum_log1mexp(mu);
  std::vector<double> shat(pihat.begin(), pihat.begin() + m);
  for (double& v : shat) v *= -theta;
  std::vector<double> s(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) s[j] = -theta * pi[j];
  lg += log_ho_F_trig(mu, shat, theta, spec);
  lg += log_ho_Ftilde_trig(mu, s, theta, spec);
  return lg;
}

double log_jacobi_joint(int beta, int A, int n, const LevelArray& levels) {
  const int m = static_cast<int>(levels.size());
  if (!(1 <= m && m <= n && n <= A))
    throw std::invalid_argument("need 1 <= m <= n <= A");
  for (int l = 0; l < m; ++l) {
    if (static_cast<int>(levels[l].size()) != l + 1) return kNegInf;
    for (double x : levels[l])
      if (!(x > 0.0 && x < 1.0)) return kNegInf;
  }
  if (!pattern_interlaced(levels)) return kNegInf;
  const auto& top = levels[m - 1];

  double lg = log_vandermonde(top);
  if (beta == 2) {
    for (double x : top)
      lg += (A + m - n - 1) * std::log(x) + (n - m) * std::log1p(-x);
    for (int l = 0; l + 1 < m; ++l) lg -= 2.0 * sum_log(levels[l]);
  } else if (beta == 1) {
    // Top-level powers are theta(A+m-n)-1 and theta(n-m+1)-1 at theta = 1/2:
    // the unique exponents consistent with the matrix model (Hotelling law at
    // m = 1, conditional-Wishart route) and with the log-change of variables
    // from the principally specialized trigonometric ensemble.
    for (double x : top)
      lg += 0.5 * (A + m - n - 2) * std::log(x) + 0.5 * (n - m - 1) * std::log1p(-x);
    for (int l = 0; l + 1 < m; ++l) {
      lg += -sum_log(levels[l]) + log_vandermonde(levels[l]) -
            0.5 * log_cross_diff(levels[l], levels[l + 1]);
    }
  } else {
    throw std::invalid_argument("beta must be 1 or 2");
  }
  return lg;
}

LevelArray ho_pattern_from_jacobi(const LevelArray& lambda_levels) {
  LevelArray mu(lambda_levels.size());
  for (std::size_t l = 0; l < lambda_levels.size(); ++l) {
    const auto& lev = lambda_levels[l];
    mu[l].resize(lev.size());
    for (std::size_t i = 0; i < lev.size(); ++i)
      mu[l][i] = -std::log(lev[lev.size() - 1 - i]);
  }
  return mu;
}

double log_jacobian_jacobi_to_ho(const LevelArray& mu_levels) {
  double lg = 0.0;
  for (const auto& lev : mu_levels) lg -= vec_sum(lev);
  return lg;
}

}  // namespace corners
