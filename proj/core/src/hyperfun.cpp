#include "corners/hyperfun.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "corners/linalg.hpp"
#include "corners/logvalue.hpp"

namespace corners {

namespace {

double vec_sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

void validate_args(const std::vector<double>& lam, const std::vector<double>& s) {
  int n = static_cast<int>(lam.size());
  if (n == 0) throw std::invalid_argument("hyperfun: empty argument");
  if (static_cast<int>(s.size()) < n)
    throw std::invalid_argument("hyperfun: need at least as many exponents as parts");
  for (int i = 0; i < n; ++i) {
    if (!(lam[i] > 0.0)) throw std::invalid_argument("hyperfun: parts must be positive");
    if (i && !(lam[i] < lam[i - 1]))
      throw std::invalid_argument("hyperfun: parts must be strictly decreasing");
  }
}

// Shared GT integrand of the rational (trig = false) and trigonometric
// (trig = true) generating integrals, excluding constant prefactors.
class GeneratingIntegrand {
 public:
  GeneratingIntegrand(const std::vector<double>& lam, const std::vector<double>& s,
                      double theta, bool trig)
      : s_(s), theta_(theta), trig_(trig), n_(static_cast<int>(lam.size())),
        m_(static_cast<int>(s.size())) {
    log_row_top_ = 0.0;
    if (m_ > n_)
      for (double li : lam) log_row_top_ += trig_ ? log1mexp(li) : std::log(li);
  }

  double operator()(const GTPoint& pt) const {
    double lg = 0.0;
    // level-increment exponentials: sum_l s_l (|mu^l| - |mu^{l-1}|)
    double prev = 0.0;
    for (int l = 0; l < m_; ++l) {
      double wl = vec_sum(pt.levels[l]);
      lg += s_[l] * (wl - prev);
      prev = wl;
    }
    if (trig_ && theta_ != 1.0) {
      // extra e^{(theta - 1)|mu^l|} on every interior level
      for (int l = 0; l < m_ - 1; ++l) lg += (theta_ - 1.0) * vec_sum(pt.levels[l]);
    }
    if (theta_ == 1.0) return lg;

    double tm1 = theta_ - 1.0;
    // row factor at level n against the top row (trivial when m = n)
    if (m_ > n_) {
      double row = 0.0;
      for (double x : pt.levels[n_ - 1]) row += trig_ ? log1mexp(x) : std::log(x);
      lg += tm1 * (row - log_row_top_);
    }
    // adjacent-level cross products over their within-level Vandermondes
    for (int l = 0; l < m_ - 1; ++l) {
      double cross = 0.0;
      int pl = static_cast<int>(pt.levels[l].size());
      int pu = static_cast<int>(pt.levels[l + 1].size());
      for (int i = 0; i < pl; ++i)
        for (int j = 0; j < pu; ++j) cross += log_pair(pt.levels[l][i], pt.levels[l + 1][j], pt.cross_gap(l, i, j));
      lg += tm1 * (cross - within(pt, l) - within(pt, l + 1));
      if (lg == kNegInf) return kNegInf;
    }
    return lg;
  }

 private:
  // log distance of a pair given its stable gap: plain for the rational
  // family, |e^{-a} - e^{-b}| for the trigonometric one.
  double log_pair(double a, double b, double gap) const {
    if (gap <= 0.0) return kNegInf;
    if (!trig_) return std::log(gap);
    return -(a < b ? a : b) + log1mexp(gap);
  }

  double within(const GTPoint& pt, int l) const {
    const auto& v = pt.levels[l];
    int p = static_cast<int>(v.size());
    bool interior = l < pt.n_levels() - 1;
    double lg = 0.0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        double gap = (interior && j == i + 1) ? pt.within_gap(l, i) : v[i] - v[j];
        lg += log_pair(v[i], v[j], gap);
      }
    return lg;
  }

  std::vector<double> s_;
  double theta_;
  bool trig_;
  int n_, m_;
  double log_row_top_;
};

double log_gamma_prefactor(int n, int m, double theta) {
  // Gamma(theta)^{-n(n-1)/2 - n(m-n)}
  return -std::lgamma(theta) * (0.5 * n * (n - 1) + static_cast<double>(n) * (m - n));
}

double log_B_prefactor(int n, int m, double theta) {
  // Gamma(m theta) ... Gamma((m-n+1) theta) / Gamma(theta)^n
  double lg = -std::lgamma(theta) * n;
  for (int k = m - n + 1; k <= m; ++k) lg += std::lgamma(k * theta);
  return lg;
}

}  // namespace

double log_vandermonde(const std::vector<double>& x) {
  double lg = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) lg += std::log(std::fabs(x[i] - x[j]));
  return lg;
}

double log_cross_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double lg = 0.0;
  for (double ai : a)
    for (double bj : b) lg += std::log(std::fabs(ai - bj));
  return lg;
}

double log_vandermonde_expneg(const std::vector<double>& x) {
  double lg = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      lg += log_abs_diff_exp_neg(x[i], x[j]);
  return lg;
}

double log_cross_diff_expneg(const std::vector<double>& a, const std::vector<double>& b) {
  double lg = 0.0;
  for (double ai : a)
    for (double bj : b) lg += log_abs_diff_exp_neg(ai, bj);
  return lg;
}

std::vector<double> s_rho(int m, double theta) {
  std::vector<double> s(m);
  for (int j = 0; j < m; ++j) s[j] = -theta * j;
  return s;
}

double log_bessel_phi(const std::vector<double>& lam, const std::vector<double>& s,
                      double theta, const QuadSpec& spec) {
  validate_args(lam, s);
  int n = static_cast<int>(lam.size()), m = static_cast<int>(s.size());
  GeneratingIntegrand f(lam, s, theta, false);
  double lg = gt_integrate_log(lam, m, f, spec.rule, spec.order);
  return log_gamma_prefactor(n, m, theta) + lg;
}

double log_bessel_B(const std::vector<double>& lam, const std::vector<double>& s,
                    double theta, const QuadSpec& spec) {
  int n = static_cast<int>(lam.size()), m = static_cast<int>(s.size());
  double lg = log_bessel_phi(lam, s, theta, spec);
  lg += log_B_prefactor(n, m, theta);
  lg -= theta * log_vandermonde(lam);
  double sum_log = 0.0;
  for (double li : lam) sum_log += std::log(li);
  lg -= theta * (m - n) * sum_log;
  return lg;
}

double log_bessel_Btilde(const std::vector<double>& lam, const std::vector<double>& s,
                         double theta, const QuadSpec& spec) {
  int n = static_cast<int>(lam.size());
  double sum_log = 0.0;
  for (double li : lam) sum_log += std::log(li);
  return -std::lgamma(theta) * n + (theta - 1.0) * sum_log +
         log_bessel_B(lam, s, theta, spec);
}

GTMonteCarloResult log_bessel_B_mc(const std::vector<double>& lam,
                                   const std::vector<double>& s, double theta,
                                   std::size_t n_samples, Rng& rng) {
  validate_args(lam, s);
  int n = static_cast<int>(lam.size()), m = static_cast<int>(s.size());
  GeneratingIntegrand f(lam, s, theta, false);
  GTMonteCarloResult r = gt_integrate_mc(lam, m, f, theta, n_samples, rng);
  double lg = r.log_value + log_gamma_prefactor(n, m, theta) + log_B_prefactor(n, m, theta);
  lg -= theta * log_vandermonde(lam);
  double sum_log = 0.0;
  for (double li : lam) sum_log += std::log(li);
  lg -= theta * (m - n) * sum_log;
  return {lg, r.rel_se};
}

double log_ho_Phi(const std::vector<double>& lam, const std::vector<double>& s,
                  double theta, const QuadSpec& spec) {
  validate_args(lam, s);
  int n = static_cast<int>(lam.size()), m = static_cast<int>(s.size());
  GeneratingIntegrand f(lam, s, theta, true);
  double lg = gt_integrate_log(lam, m, f, spec.rule, spec.order);
  return log_gamma_prefactor(n, m, theta) + lg;
}

double log_ho_F(const std::vector<double>& lam, const std::vector<double>& s,
                double theta, const QuadSpec& spec) {
  int n = static_cast<int>(lam.size()), m = static_cast<int>(s.size());
  double lg = log_ho_Phi(lam, s, theta, spec);
  lg += log_B_prefactor(n, m, theta);
  lg -= theta * log_vandermonde_expneg(lam);
  double sum_log1m = 0.0;
  for (double li : lam) sum_log1m += log1mexp(li);
  lg -= theta * (m - n) * sum_log1m;
  return lg;
}

double log_ho_Ftilde(const std::vector<double>& lam, const std::vector<double>& s,
                     double theta, const QuadSpec& spec) {
  int n = static_cast<int>(lam.size());
  double sum_log1m = 0.0;
  for (double li : lam) sum_log1m += log1mexp(li);
  return -std::lgamma(theta) * n + (theta - 1.0) * sum_log1m +
         log_ho_F(lam, s, theta, spec);
}

double log_ho_F_trig(const std::vector<double>& lam, const std::vector<double>& s,
                     double theta, const QuadSpec& spec) {
  int n = static_cast<int>(lam.size());
  return log_ho_F(lam, s, theta, spec) - 0.5 * (n - 1) * theta * vec_sum(lam);
}

double log_ho_Ftilde_trig(const std::vector<double>& lam, const std::vector<double>& s,
                          double theta, const QuadSpec& spec) {
  int n = static_cast<int>(lam.size());
  return log_ho_Ftilde(lam, s, theta, spec) - 0.5 * (n - 1) * theta * vec_sum(lam);
}

double hciz_gt(int beta, const std::vector<double>& a, const std::vector<double>& b,
               const QuadSpec& spec) {
  if (a.size() != b.size()) throw std::invalid_argument("hciz: length mismatch");
  double theta = beta == 2 ? 1.0 : 0.5;
  std::vector<double> s(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) s[j] = beta == 2 ? -b[j] : -0.5 * b[j];
  return std::exp(log_bessel_B(a, s, theta, spec));
}

double hciz_det(const std::vector<double>& a, const std::vector<double>& b) {
  int m = static_cast<int>(a.size());
  Eigen::MatrixXd k(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) k(i, j) = std::exp(-a[i] * b[j]);
  double det = k.determinant();
  // log_vandermonde is |Delta|; for descending arguments the signed Delta is
  // positive, so the sign bookkeeping lives entirely in C_m.
  return hciz_cm_exact(m) * det / std::exp(log_vandermonde(a) + log_vandermonde(b));
}

MCEstimate hciz_mc(int beta, const std::vector<double>& a, const std::vector<double>& b,
                   std::size_t n_samples, Rng& rng) {
  int m = static_cast<int>(a.size());
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t k = 0; k < n_samples; ++k) {
    double tr = 0.0;
    if (beta == 2) {
      CMatrix u = haar_unitary(m, rng);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) tr += a[i] * b[j] * std::norm(u(i, j));
    } else {
      Matrix u = haar_orthogonal(m, rng);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) tr += a[i] * b[j] * u(i, j) * u(i, j);
      tr *= 0.5;  // real-case exponent is -Tr(V a V^T b)/2
    }
    double v = std::exp(-tr);
    s1 += v;
    s2 += v * v;
  }
  double n = static_cast<double>(n_samples);
  double mean = s1 / n;
  double var = (s2 / n - mean * mean) / n;
  return {mean, std::sqrt(var > 0 ? var : 0.0)};
}

double hciz_cm_exact(int m) {
  double c = 1.0;
  for (int k = 1; k < m; ++k) c *= std::tgamma(k + 1.0);
  return ((m * (m - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * c;
}

double hciz_cm_calibrated(int m) {
  // Confluent limit: Delta(a) Delta(eps b) / det(e^{-a_i eps b_j}) -> C_m.
  // Small test vectors keep the expansion well inside its radius; quartic
  // Richardson removes the leading error terms.
  static const double a_full[3] = {1.15, 0.55, 0.20};
  static const double b_full[3] = {0.85, 0.45, 0.10};
  if (m < 2 || m > 3) throw std::invalid_argument("hciz_cm_calibrated: m must be 2 or 3");
  std::vector<double> a(a_full, a_full + m), b(b_full, b_full + m);
  const std::vector<double> ladder = {0.4, 0.2, 0.1, 0.05, 0.025};
  int k = static_cast<int>(ladder.size());
  Eigen::MatrixXd vand(k, k);
  Eigen::VectorXd vals(k);
  for (int r = 0; r < k; ++r) {
    double eps = ladder[r];
    Eigen::MatrixXd mat(m, m);
    double num = 1.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) mat(i, j) = std::exp(-a[i] * eps * b[j]);
      for (int j = i + 1; j < m; ++j) num *= (a[i] - a[j]) * eps * (b[i] - b[j]);
    }
    vals(r) = num / mat.determinant();
    for (int c = 0; c < k; ++c) vand(r, c) = std::pow(eps, c);
  }
  Eigen::VectorXd coef = vand.fullPivLu().solve(vals);
  return coef(0);
}

}  // namespace corners
