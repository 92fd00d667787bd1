#include "corners/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace corners {

namespace {

// Gauss-Legendre nodes by Newton iteration on the three-term recurrence.
std::vector<QuadNode> make_gauss_legendre(int n) {
  std::vector<QuadNode> nodes(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the (i+1)-th root from the right (x > 0 half); mirror for the rest.
    nodes[n - 1 - i] = {x, 1.0 + x, 1.0 - x, w};
    nodes[i] = {-x, 1.0 - x, 1.0 + x, w};
  }
  return nodes;
}

// Tanh-sinh nodes: x = tanh((pi/2) sinh t) on a uniform t-grid.  The stable
// endpoint distances come from 1 -+ tanh(u) = 2 / (e^{+-2u} + 1).
std::vector<QuadNode> make_tanh_sinh(int n) {
  if (n < 2) throw std::invalid_argument("tanh-sinh order must be >= 2");
  const double t_max = 3.8;
  const double h = 2.0 * t_max / (n - 1);
  std::vector<QuadNode> nodes(n);
  for (int i = 0; i < n; ++i) {
    double t = -t_max + i * h;
    double u = 0.5 * M_PI * std::sinh(t);
    double dlo = 2.0 / (std::exp(-2.0 * u) + 1.0);  // 1 + x
    double dhi = 2.0 / (std::exp(2.0 * u) + 1.0);   // 1 - x
    double x = std::tanh(u);
    double w = h * 0.5 * M_PI * std::cosh(t) * dlo * dhi;  // sech^2 u = (1-x)(1+x)
    nodes[i] = {x, dlo, dhi, w};
  }
  return nodes;
}

std::map<std::pair<int, int>, std::vector<QuadNode>> g_cache;
std::mutex g_cache_mutex;

}  // namespace

const std::vector<QuadNode>& reference_nodes(QuadRule rule, int order) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_pair(static_cast<int>(rule), order);
  auto it = g_cache.find(key);
  if (it == g_cache.end()) {
    auto nodes = rule == QuadRule::kGaussLegendre ? make_gauss_legendre(order)
                                                  : make_tanh_sinh(order);
    it = g_cache.emplace(key, std::move(nodes)).first;
  }
  return it->second;
}

std::vector<QuadNode> interval_nodes(QuadRule rule, int order, double lo, double hi) {
  const auto& ref = reference_nodes(rule, order);
  std::vector<QuadNode> out;
  if (!(hi > lo)) return out;  // empty or degenerate interval: no nodes
  double half = 0.5 * (hi - lo);
  out.reserve(ref.size());
  for (const QuadNode& nd : ref) {
    double dlo = half * nd.dlo;
    double dhi = half * nd.dhi;
    out.push_back({lo + dlo, dlo, dhi, half * nd.w});
  }
  return out;
}

std::vector<QuadNode> half_line_nodes(int order) {
  const auto& ref = reference_nodes(QuadRule::kTanhSinh, order);
  std::vector<QuadNode> out;
  out.reserve(ref.size());
  for (const QuadNode& nd : ref) {
    // u = (1 + x)/2 in (0, 1), y = u / (1 - u), dy = du / (1 - u)^2
    double u = 0.5 * nd.dlo;
    double one_minus_u = 0.5 * nd.dhi;
    double y = u / one_minus_u;
    double w = 0.5 * nd.w / (one_minus_u * one_minus_u);
    out.push_back({y, y, kInf, w});
  }
  return out;
}

}  // namespace corners
