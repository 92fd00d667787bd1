#include "corners/qseries.hpp"

#include <cmath>
#include <stdexcept>

#include "corners/logvalue.hpp"

namespace corners::mac {

namespace {
constexpr double kTrunc = 1e-17;
}

double qpoch_inf(double a, double q) {
  if (q < 0.0 || q >= 1.0) throw std::invalid_argument("qpoch_inf: need 0 <= q < 1");
  double p = 1.0;
  double aq = a;
  while (std::fabs(aq) > kTrunc) {
    p *= (1.0 - aq);
    aq *= q;
  }
  // prod (1 - aq q^k) ~ exp(-aq / (1 - q)) once aq is tiny
  return p * std::exp(-aq / (1.0 - q));
}

double log_qpoch_inf(double a, double q) {
  if (a < 0.0 || a > 1.0) throw std::invalid_argument("log_qpoch_inf: need 0 <= a <= 1");
  if (q < 0.0 || q >= 1.0) throw std::invalid_argument("log_qpoch_inf: need 0 <= q < 1");
  if (a == 1.0) return kNegInf;
  double lg = 0.0;
  double aq = a;
  while (aq > kTrunc) {
    lg += std::log1p(-aq);
    aq *= q;
  }
  return lg - aq / (1.0 - q);
}

double qpoch_fin(double a, double q, long k) {
  double p = 1.0;
  double aq = a;
  for (long i = 0; i < k; ++i) {
    p *= (1.0 - aq);
    aq *= q;
  }
  return p;
}

double log_qpoch_fin(double a, double q, long k) {
  double lg = 0.0;
  double aq = a;
  for (long i = 0; i < k; ++i) {
    if (aq >= 1.0) return kNegInf;
    lg += std::log1p(-aq);
    aq *= q;
  }
  return lg;
}

double log_qgamma(double x, double q) {
  return (1.0 - x) * std::log(1.0 - q) + log_qpoch_inf(q, q) -
         log_qpoch_inf(std::pow(q, x), q);
}

double log_f_ratio(double u, double q, double t) {
  return log_qpoch_inf(t * u, q) - log_qpoch_inf(q * u, q);
}

double FCache::log_f(long a, long b) {
  auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  double u = std::pow(q_, static_cast<double>(a)) * std::pow(t_, static_cast<double>(b));
  double v = log_f_ratio(u, q_, t_);
  cache_.emplace(key, v);
  return v;
}

double log_psi(const Partition& lambda, const Partition& mu, int m, FCache& f) {
  if (!interlaces(lambda, mu)) return kNegInf;
  int n = partition_length(lambda);
  if (n > m) return kNegInf;
  auto L = [&](int i) { return static_cast<long>(partition_part(lambda, i)); };
  auto M = [&](int i) { return static_cast<long>(partition_part(mu, i)); };
  double lg = 0.0;
  if (n == m) {
    // lambda occupies all m rows; mu is padded to m - 1 entries.
    for (int i = 1; i <= m - 1; ++i) {
      for (int j = i; j <= m - 1; ++j) {
        lg += f.log_f(M(i) - M(j), j - i);
        lg += f.log_f(L(i) - L(j + 1), j - i);
        lg -= f.log_f(M(i) - L(j + 1), j - i);
        lg -= f.log_f(L(i) - M(j), j - i);
      }
    }
  } else {
    // lambda has n < m rows; both partitions padded to n entries.
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        lg += f.log_f(M(i) - M(j), j - i);
        lg += f.log_f(L(i) - L(j), j - i - 1);
        lg -= f.log_f(L(i) - M(j), j - i);
        lg -= f.log_f(M(i) - L(j), j - i - 1);
      }
    }
    for (int i = 1; i <= n; ++i) {
      lg += f.log_f(0, 0) - f.log_f(L(i) - M(i), 0);
      lg += f.log_f(L(i), n - i) - f.log_f(M(i), n - i);
    }
  }
  return lg;
}

namespace {

Partition trimmed(const Partition& p) {
  Partition out(p.begin(), p.begin() + partition_length(p));
  return out;
}

double macdonald_P_rec(const Partition& lambda, const std::vector<double>& x,
                       int k, FCache& f,
                       std::map<std::pair<int, Partition>, double>& memo) {
  Partition lam = trimmed(lambda);
  int n = static_cast<int>(lam.size());
  if (n > k) return 0.0;
  if (k == 0) return 1.0;
  if (k == 1) return n == 0 ? 1.0 : std::pow(x[0], lam[0]);
  auto key = std::make_pair(k, lam);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long wl = partition_weight(lam);
  double total = 0.0;
  for_each_interlacing(lam, [&](const Partition& mu) {
    double lp = log_psi(lam, mu, k, f);
    if (lp == kNegInf) return;
    double sub = macdonald_P_rec(mu, x, k - 1, f, memo);
    if (sub == 0.0) return;
    total += std::exp(lp) * sub *
             std::pow(x[k - 1], static_cast<double>(wl - partition_weight(mu)));
  });
  memo.emplace(key, total);
  return total;
}

}  // namespace

double macdonald_P(const Partition& lambda, const std::vector<double>& x,
                   double q, double t) {
  FCache f(q, t);
  std::map<std::pair<int, Partition>, double> memo;
  return macdonald_P_rec(lambda, x, static_cast<int>(x.size()), f, memo);
}

double log_b_norm(const Partition& lambda, double q, double t) {
  Partition lam = trimmed(lambda);
  int m = static_cast<int>(lam.size());
  double lg = 0.0;
  for (int l = 1; l <= m; ++l) {
    long k = lam[l - 1] - (l < m ? lam[l] : 0);
    for (int i = 0; i < l; ++i) {
      double base = std::pow(q, static_cast<double>(lam[l - 1 - i] - lam[l - 1]));
      lg += log_qpoch_fin(std::pow(t, i + 1) * base, q, k);
      lg -= log_qpoch_fin(std::pow(t, i) * base * q, q, k);
    }
  }
  return lg;
}

double log_principal_P(const Partition& lambda, int m, double q, double t) {
  Partition lam = trimmed(lambda);
  int n = static_cast<int>(lam.size());
  if (n > m) return kNegInf;
  double lg = 0.0;
  for (int i = 0; i < n; ++i) lg += i * lam[i] * std::log(t);
  auto block = [&](double u, int d) {
    // (u t^d; q)_inf / (u t^{d+1}; q)_inf * (t^{d+1}; q)_inf / (t^d; q)_inf
    lg += log_qpoch_inf(u * std::pow(t, d), q) - log_qpoch_inf(u * std::pow(t, d + 1), q);
    lg += log_qpoch_inf(std::pow(t, d + 1), q) - log_qpoch_inf(std::pow(t, d), q);
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j)
      block(std::pow(q, static_cast<double>(lam[i - 1] - lam[j - 1])), j - i);
    for (int j = n + 1; j <= m; ++j)
      block(std::pow(q, static_cast<double>(lam[i - 1])), j - i);
  }
  return lg;
}

double cauchy_sum(const std::vector<double>& x, const std::vector<double>& y,
                  double q, double t, long max_weight, int max_len) {
  double total = 0.0;
  for_each_partition(max_len, max_weight, [&](const Partition& lam) {
    double term = macdonald_P(lam, x, q, t) * macdonald_P(lam, y, q, t);
    if (term == 0.0) return;
    total += term * std::exp(log_b_norm(lam, q, t));
  });
  return total;
}

double cauchy_product(const std::vector<double>& x, const std::vector<double>& y,
                      double q, double t) {
  double p = 1.0;
  for (double xi : x)
    for (double yj : y) p *= qpoch_inf(t * xi * yj, q) / qpoch_inf(xi * yj, q);
  return p;
}

}  // namespace corners::mac
