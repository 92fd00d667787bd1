#pragma once

#include <map>
#include <utility>
#include <vector>

#include "corners/partition.hpp"

// Macdonald symmetric function layer: q-Pochhammer products, branching
// coefficients, P/Q polynomials in finitely many variables, principal
// specializations, and the degree-truncated Cauchy pairing.  Everything is
// computed in the log domain where values can reach exp(-600) (q -> 1), and
// in plain doubles where they are O(1).
//
// Conventions: 0 < q < 1, 0 < t < 1.  Partitions are weakly decreasing int
// vectors.  All product formulas here assume their arguments stay in [0, 1],
// which holds for every call the library makes; qpoch_inf alone accepts
// general a < 1/q and tracks signs.

namespace corners::mac {

// (a; q)_inf = prod_{k>=0} (1 - a q^k), truncated at |a q^k| < 1e-17 with an
// exp(-a q^K / (1 - q)) tail estimate.
double qpoch_inf(double a, double q);

// log (a; q)_inf for 0 <= a <= 1.  a = 1 returns -inf.
double log_qpoch_inf(double a, double q);

// (a; q)_k and its log (log form requires a q^i <= 1 throughout).
double qpoch_fin(double a, double q, long k);
double log_qpoch_fin(double a, double q, long k);

// log Gamma_q(x) = (1-x) log(1-q) + log (q;q)_inf - log (q^x;q)_inf.
double log_qgamma(double x, double q);

// log f(u) with f(u) = (t u; q)_inf / (q u; q)_inf.
double log_f_ratio(double u, double q, double t);

// Cache of log f(q^a t^b) keyed on the integer exponent pair.  The branching
// products evaluate f at thousands of such points with heavy repetition.
class FCache {
 public:
  FCache(double q, double t) : q_(q), t_(t) {}
  double log_f(long a, long b);
  double q() const { return q_; }
  double t() const { return t_; }

 private:
  double q_, t_;
  std::map<std::pair<long, long>, double> cache_;
};

// log of the branching coefficient psi_{lambda/mu} for the reduction from m
// variables to m - 1: P_lambda(x_1..x_m) = sum_mu psi_{lambda/mu}
// P_mu(x_1..x_{m-1}) x_m^{|lambda|-|mu|}.  Returns -inf when mu does not
// interlace lambda (the raw product formulas divide by zero there, so the
// support condition is enforced before any evaluation).
double log_psi(const Partition& lambda, const Partition& mu, int m, FCache& f);

// Macdonald P_lambda(x_1, ..., x_k; q, t) via the branching recursion,
// memoized over the (partition, level) tree of one evaluation.
double macdonald_P(const Partition& lambda, const std::vector<double>& x,
                   double q, double t);

// log b_lambda where Q_lambda = b_lambda P_lambda.
double log_b_norm(const Partition& lambda, double q, double t);

// log P_lambda(1, t, ..., t^{m-1}).
double log_principal_P(const Partition& lambda, int m, double q, double t);

// Degree-truncated Cauchy pairing over partitions with at most max_len rows
// and |lambda| <= max_weight, against the closed product form.
double cauchy_sum(const std::vector<double>& x, const std::vector<double>& y,
                  double q, double t, long max_weight, int max_len);
double cauchy_product(const std::vector<double>& x, const std::vector<double>& y,
                      double q, double t);

}  // namespace corners::mac
