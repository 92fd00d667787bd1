#include "corners/gtpattern.hpp"

#include <cmath>
#include <stdexcept>

#include "corners/logvalue.hpp"

namespace corners {

namespace {

GTPoint make_point(const std::vector<double>& top, int m_levels) {
  int p = static_cast<int>(top.size());
  if (p < 1) throw std::invalid_argument("gt: empty top row");
  if (m_levels < p) throw std::invalid_argument("gt: need m_levels >= top parts");
  GTPoint pt;
  pt.levels.resize(m_levels);
  pt.dlo.resize(m_levels);
  pt.dhi.resize(m_levels);
  for (int l = 1; l <= m_levels; ++l) {
    int pl = l < p ? l : p;
    pt.levels[l - 1].assign(pl, 0.0);
    pt.dlo[l - 1].assign(pl, 0.0);
    pt.dhi[l - 1].assign(pl, 0.0);
  }
  pt.levels[m_levels - 1] = top;
  return pt;
}

}  // namespace

double gt_integrate_log(const std::vector<double>& top, int m_levels,
                        const GTLogIntegrand& log_f, QuadRule rule, int order) {
  GTPoint pt = make_point(top, m_levels);
  const auto& ref = reference_nodes(rule, order);
  LogSum acc;

  // Depth-first over interior coordinates, top-down so every box has its
  // upper level already placed.
  std::function<void(int, int, double)> rec = [&](int l, int i, double log_w) {
    if (l < 0) {
      double lf = log_f(pt);
      if (lf != kNegInf) acc.add(lf + log_w);
      return;
    }
    const auto& up = pt.levels[l + 1];
    double hi = up[i];
    double lo = (i + 1 < static_cast<int>(up.size())) ? up[i + 1] : 0.0;
    if (!(hi > lo)) return;  // degenerate box: zero measure
    double half = 0.5 * (hi - lo);
    double lw_interval = std::log(half);
    int next_l = l, next_i = i + 1;
    if (next_i == static_cast<int>(pt.levels[l].size())) {
      next_l = l - 1;
      next_i = 0;
    }
    for (const QuadNode& nd : ref) {
      double dlo = half * nd.dlo;
      double dhi = half * nd.dhi;
      pt.levels[l][i] = lo + dlo;
      pt.dlo[l][i] = dlo;
      pt.dhi[l][i] = dhi;
      rec(next_l, next_i, log_w + lw_interval + std::log(nd.w));
    }
  };

  rec(m_levels - 2, 0, 0.0);
  return acc.log_value();
}

GTMonteCarloResult gt_integrate_mc(const std::vector<double>& top, int m_levels,
                                   const GTLogIntegrand& log_f, double theta,
                                   std::size_t n_samples, Rng& rng) {
  GTPoint pt = make_point(top, m_levels);
  double log_beta_const = std::lgamma(theta) * 2.0 - std::lgamma(2.0 * theta);
  std::vector<double> logs;
  logs.reserve(n_samples);

  for (std::size_t s = 0; s < n_samples; ++s) {
    double log_w = 0.0;
    bool dead = false;
    for (int l = m_levels - 2; l >= 0 && !dead; --l) {
      const auto& up = pt.levels[l + 1];
      for (int i = 0; i < static_cast<int>(pt.levels[l].size()); ++i) {
        double hi = up[i];
        double lo = (i + 1 < static_cast<int>(up.size())) ? up[i + 1] : 0.0;
        if (!(hi > lo)) {
          dead = true;
          break;
        }
        double width = hi - lo;
        double u = rng.beta_symmetric(theta);
        pt.levels[l][i] = lo + width * u;
        pt.dlo[l][i] = width * u;
        pt.dhi[l][i] = width * (1.0 - u);
        // importance weight: 1 / pdf, pdf = u^{th-1}(1-u)^{th-1} / (B(th,th) width)
        log_w += std::log(width) + log_beta_const -
                 (theta - 1.0) * (std::log(u) + std::log1p(-u));
      }
    }
    double lf = dead ? kNegInf : log_f(pt);
    logs.push_back(lf == kNegInf ? kNegInf : lf + log_w);
  }

  double mx = kNegInf;
  for (double v : logs) mx = v > mx ? v : mx;
  if (mx == kNegInf) return {kNegInf, 0.0};
  double s1 = 0.0, s2 = 0.0;
  for (double v : logs) {
    if (v == kNegInf) continue;
    double e = std::exp(v - mx);
    s1 += e;
    s2 += e * e;
  }
  double n = static_cast<double>(n_samples);
  double mean = s1 / n;
  double var = s2 / n - mean * mean;
  double rel_se = mean > 0 ? std::sqrt(var / n) / mean : 0.0;
  return {mx + std::log(mean), rel_se};
}

}  // namespace corners
