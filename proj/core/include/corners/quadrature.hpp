#pragma once

#include <vector>

#include "corners/logvalue.hpp"

// Fixed-order 1-D quadrature rules used as building blocks for iterated
// integration over Gelfand-Tsetlin polytopes and over simplex-like outer
// domains.  Nodes carry stable distances to both interval endpoints (dlo,
// dhi); integrands with (theta - 1)-power endpoint singularities must use
// those instead of forming x - lo / hi - x themselves, which would lose all
// precision at the clustered tanh-sinh tail nodes.  Integration happens in
// the log domain: integrands return log f >= -inf and the quadrature returns
// log of the (nonnegative) integral.

namespace corners {

struct QuadNode {
  double x;    // node position
  double dlo;  // x - lo, computed stably
  double dhi;  // hi - x, computed stably
  double w;    // weight
};

enum class QuadRule {
  kGaussLegendre,  // polynomial accuracy; right choice for smooth integrands
  kTanhSinh,       // double-exponential; handles endpoint power singularities
};

// Nodes on the reference interval [-1, 1] (dlo = 1 + x, dhi = 1 - x).
const std::vector<QuadNode>& reference_nodes(QuadRule rule, int order);

// Affine image of the reference rule on [lo, hi].
std::vector<QuadNode> interval_nodes(QuadRule rule, int order, double lo, double hi);

// Image of tanh-sinh nodes under u -> u / (1 - u) mapped to (0, inf).
// dlo = x, dhi = +inf.
std::vector<QuadNode> half_line_nodes(int order);

// log of integral over [lo, hi] of the nonnegative integrand exp(log_f(node)).
template <class LogF>
double quad_log(const std::vector<QuadNode>& nodes, LogF&& log_f) {
  LogSum acc;
  for (const QuadNode& nd : nodes) {
    double lf = log_f(nd);
    if (lf == kNegInf) continue;
    acc.add(lf + std::log(nd.w));
  }
  return acc.log_value();
}

// Pick a rule for GT-type integrands: exponents theta - 1 = 0 are smooth,
// anything else has endpoint power factors.
inline QuadRule rule_for_theta(double theta) {
  return theta == 1.0 ? QuadRule::kGaussLegendre : QuadRule::kTanhSinh;
}

}  // namespace corners
