#include "corners/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <utility>

#include "corners/densities.hpp"
#include "corners/qseries.hpp"
#include "corners/sampling_csv.hpp"
#include "corners/stats.hpp"

namespace corners {

namespace {

double vsum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double slog1mexp(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += log1mexp(x);
  return s;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

CheckResult bound(std::string id, double err, double thr, std::string detail) {
  CheckResult r;
  r.id = std::move(id);
  r.metric = err;
  r.threshold = thr;
  r.pass = std::isfinite(err) && err <= thr;
  r.detail = std::move(detail);
  return r;
}

CheckResult pvalue(std::string id, double p, double thr, std::string detail) {
  CheckResult r;
  r.id = std::move(id);
  r.metric = p;
  r.threshold = thr;
  r.pass = std::isfinite(p) && p >= thr;
  r.detail = std::move(detail);
  return r;
}

// |x/y - 1| for positive quantities carried in log form.
double rel_gap(double log_x, double log_y) { return std::fabs(std::expm1(log_x - log_y)); }

double log_B_pref(int n, int m, double theta) {
  double lg = -n * std::lgamma(theta);
  for (int k = m - n + 1; k <= m; ++k) lg += std::lgamma(k * theta);
  return lg;
}

// Integration constant relating the multilevel joint integrated over its
// interior levels to the top-level marginal (p parts at level m):
// Gamma(theta)^{p(p-1)/2 + p(m-p) + p} / prod_{k=m-p+1}^m Gamma(k theta).
double log_marginal_const(int p, int m, double theta) {
  double lg = (p * (p - 1) / 2 + p * (m - p) + p) * std::lgamma(theta);
  for (int k = m - p + 1; k <= m; ++k) lg -= std::lgamma(k * theta);
  return lg;
}

template <class LogF>
double log_halfline(int order, LogF&& log_f) {
  return quad_log(half_line_nodes(order), log_f);
}

// Iterated integral over the 2-d chamber lam1 > lam2 > 0.  The integrand
// receives both nodes so Delta = n2.dhi stays exact near coincidence.
template <class LogF>
double log_chamber2(QuadRule rule, int order, LogF&& log_f) {
  LogSum acc;
  for (const QuadNode& n1 : half_line_nodes(order)) {
    LogSum inner;
    for (const QuadNode& n2 : interval_nodes(rule, order, 0.0, n1.x)) {
      if (!(n2.x > 0.0 && n2.x < n1.x)) continue;
      double lf = log_f(n1, n2);
      if (lf == kNegInf) continue;
      inner.add(lf + std::log(n2.w));
    }
    if (!inner.empty()) acc.add(inner.log_value() + std::log(n1.w));
  }
  return acc.log_value();
}

const std::vector<double> kThetas = {0.5, 1.0};

}  // namespace

// ---------------------------------------------------------------------------
// Functional identities of the hypergeometric layer.
// ---------------------------------------------------------------------------

std::vector<CheckResult> check_identities() {
  std::vector<CheckResult> out;

  // B(lam, 0) = 1 across shapes and thetas.
  {
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      const std::vector<std::pair<std::vector<double>, int>> cases = {
          {{0.7}, 2}, {{1.3, 0.4}, 2}, {{1.3, 0.4}, 3}};
      for (const auto& [lam, m] : cases) {
        std::vector<double> zero(m, 0.0);
        worst = std::max(worst, std::fabs(std::expm1(log_bessel_B(lam, zero, th, spec))));
      }
    }
    out.push_back(bound("mvb-B-zero", worst, 1e-8, "max |B(lam,0)-1| over shapes"));
  }

  // Scalar exponential specialization: B^{1,1} and F^{1,1} equal e^{s lam}.
  {
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      worst = std::max(worst, rel_gap(log_bessel_B({0.8}, {0.3}, th, spec), 0.3 * 0.8));
      worst = std::max(worst, rel_gap(log_ho_F({0.8}, {0.3}, th, spec), 0.3 * 0.8));
      worst = std::max(worst, rel_gap(log_bessel_B({0.8}, {-0.6}, th, spec), -0.6 * 0.8));
      worst = std::max(worst, rel_gap(log_ho_F({0.8}, {-0.6}, th, spec), -0.6 * 0.8));
    }
    out.push_back(bound("exp-specialization", worst, 1e-8, "B^{1,1}, F^{1,1} vs e^{s lam}"));
  }

  // Bilinearity of the rational function: B(c lam, s) = B(lam, c s).
  {
    const std::vector<double> lam = {1.3, 0.4}, s = {0.4, -0.7};
    const double c = 1.7;
    std::vector<double> clam = lam, cs = s;
    for (double& x : clam) x *= c;
    for (double& x : cs) x *= c;
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      worst = std::max(worst, rel_gap(log_bessel_B(clam, s, th, spec),
                                      log_bessel_B(lam, cs, th, spec)));
    }
    out.push_back(bound("mvb-B-bilinear", worst, 1e-8, "B(c lam, s) vs B(lam, c s), c=1.7"));
  }

  // Symmetry in the spectral argument: the nested integral couples s_l to
  // level l, yet the normalized function must not care about the order.
  {
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      worst = std::max(worst, rel_gap(log_bessel_B({1.3, 0.4}, {0.4, -0.7}, th, spec),
                                      log_bessel_B({1.3, 0.4}, {-0.7, 0.4}, th, spec)));
      worst = std::max(worst, rel_gap(log_bessel_B({1.3, 0.4}, {0.4, -0.7, 0.15}, th, spec),
                                      log_bessel_B({1.3, 0.4}, {0.15, 0.4, -0.7}, th, spec)));
      worst = std::max(worst, rel_gap(log_ho_F({1.2, 0.6}, {0.4, -0.7}, th, spec),
                                      log_ho_F({1.2, 0.6}, {-0.7, 0.4}, th, spec)));
    }
    out.push_back(bound("mvb-B-symmetry", worst, 1e-8,
                        "B and F under permutations of s, n=2, m=2,3"));
  }

  // Homogeneity of the unnormalized integral:
  // c^{theta(n(m-n)+n(n-1)/2)} phi(lam, c s) = phi(c lam, s).
  {
    const double c = 1.7;
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      const std::vector<std::pair<std::vector<double>, std::vector<double>>> cases = {
          {{0.7}, {0.4, -0.7}}, {{1.3, 0.4}, {0.4, -0.7}}};
      for (const auto& [lam, s] : cases) {
        int n = static_cast<int>(lam.size()), m = static_cast<int>(s.size());
        std::vector<double> clam = lam, cs = s;
        for (double& x : clam) x *= c;
        for (double& x : cs) x *= c;
        double expo = th * (n * (m - n) + n * (n - 1) / 2.0);
        worst = std::max(worst, rel_gap(expo * std::log(c) + log_bessel_phi(lam, cs, th, spec),
                                        log_bessel_phi(clam, s, th, spec)));
      }
    }
    out.push_back(bound("mvb-phi-scaling", worst, 1e-8,
                        "c^{theta(n(m-n)+n(n-1)/2)} phi(lam,cs) vs phi(c lam,s)"));
  }

  // Shift rule: adding a constant to every s multiplies by e^{c |lam|}.
  {
    const std::vector<double> lam = {1.3, 0.4}, s = {0.4, -0.7};
    const double c = -0.35;
    std::vector<double> sc = s;
    for (double& x : sc) x += c;
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      worst = std::max(worst, rel_gap(log_bessel_B(lam, sc, th, spec),
                                      c * vsum(lam) + log_bessel_B(lam, s, th, spec)));
      std::vector<double> mu = {1.2, 0.6};
      worst = std::max(worst, rel_gap(log_ho_F(mu, sc, th, spec),
                                      c * vsum(mu) + log_ho_F(mu, s, th, spec)));
    }
    out.push_back(bound("shift-rule", worst, 1e-8, "B/F(lam, s+c) vs e^{c|lam|} B/F(lam, s)"));
  }

  // Principal normalization of the trigonometric function: F(lam, s_rho) = 1.
  {
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      const std::vector<double> lam = {1.2, 0.6};
      for (int m : {2, 3})
        worst = std::max(worst, std::fabs(std::expm1(log_ho_F(lam, s_rho(m, th), th, spec))));
    }
    out.push_back(bound("ho-F-at-rho", worst, 1e-8, "F(lam, s_rho(m)) vs 1, n=2, m=2,3"));
  }

  // Principal exponential: F(lam, -theta(A-m+1,...,A)) = e^{-theta(A-m+1)|lam|}.
  {
    const int A = 4;
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      const std::vector<double> lam = {1.2, 0.6};
      for (int m : {2, 3}) {
        std::vector<double> s(m);
        for (int j = 0; j < m; ++j) s[j] = -th * (A - m + 1 + j);
        worst = std::max(worst, rel_gap(log_ho_F(lam, s, th, spec),
                                        -th * (A - m + 1) * vsum(lam)));
      }
    }
    out.push_back(bound("ho-F-principal", worst, 1e-8,
                        "F(lam, -theta(A-m+1..A)) vs e^{-theta(A-m+1)|lam|}, A=4"));
  }

  // Argument-swap identity behind the kernels' rotation factor:
  // B^{n,n}(pi, -mu_pad * theta) = B^{p,n}(mu, -pi * theta) with mu zero-padded.
  {
    const std::vector<double> pi = {1.7, 1.0};
    const std::vector<double> mu = {0.8};
    double worst = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      std::vector<double> spad = {-th * mu[0], 0.0};
      std::vector<double> spi = {-th * pi[0], -th * pi[1]};
      worst = std::max(worst, rel_gap(log_bessel_B(pi, spad, th, spec),
                                      log_bessel_B(mu, spi, th, spec)));
    }
    out.push_back(bound("h-function-padding", worst, 1e-8,
                        "B^{2,2}(pi, -theta mu_pad) vs B^{1,2}(mu, -theta pi)"));
  }

  // Determinantal-formula constant: confluent calibration vs closed form.
  {
    double worst = 0.0;
    for (int m : {2, 3})
      worst = std::max(worst, std::fabs(hciz_cm_calibrated(m) / hciz_cm_exact(m) - 1.0));
    out.push_back(bound("hciz-cm", worst, 1e-3, "calibrated C_m vs (-1)^{m(m-1)/2} prod k!"));
  }

  // Integrating the joint over the interior level returns the marginal times
  // a known Gamma constant, for both families.
  {
    const std::vector<double> pi = {1.0, 1.7}, pihat = {0.2, 0.9};
    const std::vector<std::vector<double>> points = {{1.2, 0.5}, {2.0, 0.8}};
    double worst_w = 0.0, worst_h = 0.0;
    for (double th : kThetas) {
      QuadSpec spec = QuadSpec::for_theta(th);
      double logc = log_marginal_const(2, 2, th);
      for (const auto& mu : points) {
        LevelArray lv = {{0.0}, mu};
        auto joint_w = [&](const QuadNode& nd) {
          if (!(nd.x > mu[1] && nd.x < mu[0])) return kNegInf;
          lv[0][0] = nd.x;
          return log_wishart_joint(th, pi, pihat, lv, spec);
        };
        double li = quad_log(interval_nodes(spec.rule, spec.order, mu[1], mu[0]), joint_w);
        worst_w = std::max(worst_w, std::fabs(li - log_wishart_marginal(th, pi, pihat, 2, mu, spec) - logc));
        auto joint_h = [&](const QuadNode& nd) {
          if (!(nd.x > mu[1] && nd.x < mu[0])) return kNegInf;
          lv[0][0] = nd.x;
          return log_ho_joint(th, pi, pihat, lv, spec);
        };
        li = quad_log(interval_nodes(spec.rule, spec.order, mu[1], mu[0]), joint_h);
        worst_h = std::max(worst_h, std::fabs(li - log_ho_marginal(th, pi, pihat, 2, mu, spec) - logc));
      }
    }
    out.push_back(bound("wishart-marg-consistency", worst_w, 1e-7,
                        "log int joint d mu^1 - log marginal - log const"));
    out.push_back(bound("ho-marg-consistency", worst_h, 1e-7,
                        "log int joint d mu^1 - log marginal - log const"));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Level-peeling consistency: the nested polytope integrator against a manual
// peel through the next-lower function, plus the kernel-product factorization
// of the two-level joint law.
// ---------------------------------------------------------------------------

namespace {

// Total mass of the stated multilevel density, m = 2, n <= 2.  The stated
// forms carry parameter-free constants, so both sides of the factorization
// check are normalized by quadrature before comparing.
double log_wishart_mass(double theta, const std::vector<double>& pi,
                        const std::vector<double>& pihat, const QuadSpec& spec,
                        int order = 48) {
  LogSum acc;
  if (pi.size() == 1) {
    LevelArray lv = {{0.0}, {0.0}};
    for (const QuadNode& nx : half_line_nodes(order)) {
      LogSum inner;
      for (const QuadNode& nu : interval_nodes(spec.rule, order, 0.0, nx.x)) {
        if (!(nu.x > 0.0 && nu.x < nx.x)) continue;
        lv[0][0] = nu.x;
        lv[1][0] = nx.x;
        double lf = log_wishart_joint(theta, pi, pihat, lv, spec);
        if (lf != kNegInf) inner.add(lf + std::log(nu.w));
      }
      if (!inner.empty()) acc.add(inner.log_value() + std::log(nx.w));
    }
    return acc.log_value();
  }
  LevelArray lv = {{0.0}, {0.0, 0.0}};
  for (const QuadNode& nx : half_line_nodes(order)) {
    const double x = nx.x;
    LogSum accy;
    for (const QuadNode& ny : interval_nodes(spec.rule, order, 0.0, x)) {
      const double y = ny.x;
      if (!(y > 0.0 && y < x)) continue;
      LogSum accu;
      for (const QuadNode& nu : interval_nodes(spec.rule, order, y, x)) {
        if (!(nu.x > y && nu.x < x)) continue;
        lv[0][0] = nu.x;
        lv[1][0] = x;
        lv[1][1] = y;
        double lf = log_wishart_joint(theta, pi, pihat, lv, spec);
        if (lf != kNegInf) accu.add(lf + std::log(nu.w));
      }
      if (!accu.empty()) accy.add(accu.log_value() + std::log(ny.w));
    }
    if (!accy.empty()) acc.add(accy.log_value() + std::log(nx.w));
  }
  return acc.log_value();
}

}  // namespace

std::vector<CheckResult> check_chain() {
  std::vector<CheckResult> out;
  const std::vector<double> s2 = {0.4, -0.7};
  const std::vector<double> s3 = {0.4, -0.7, 0.15};

  for (double th : kThetas) {
    QuadSpec spec = QuadSpec::for_theta(th);
    const char* tag = th == 1.0 ? "th1" : "th0.5";

    // phi^{1,2}(lam, s) = Gamma(th)^{-1} int_0^lam e^{s1 u + s2(lam-u)}
    //                     (u/lam)^{th-1} (lam-u)^{th-1} du.
    {
      double lam = 0.7;
      auto lf = [&](const QuadNode& nd) {
        return s2[0] * nd.x + s2[1] * nd.dhi +
               (th - 1) * (std::log(nd.dlo) - std::log(lam) + std::log(nd.dhi));
      };
      double manual = quad_log(interval_nodes(spec.rule, spec.order, 0.0, lam), lf) -
                      std::lgamma(th);
      out.push_back(bound(fmt("chain-mvb-12-%s", tag),
                          rel_gap(manual, log_bessel_phi({lam}, s2, th, spec)), 1e-6,
                          "manual peel vs nested integrator"));
    }

    // phi^{2,2}: one interior coordinate between the two top parts.
    {
      const std::vector<double> lam = {1.3, 0.4};
      double ld = std::log(lam[0] - lam[1]);
      auto lf = [&](const QuadNode& nd) {
        return s2[0] * nd.x + s2[1] * (vsum(lam) - nd.x) +
               (th - 1) * (std::log(nd.dhi) + std::log(nd.dlo) - ld);
      };
      double manual = quad_log(interval_nodes(spec.rule, spec.order, lam[1], lam[0]), lf) -
                      std::lgamma(th);
      out.push_back(bound(fmt("chain-mvb-22-%s", tag),
                          rel_gap(manual, log_bessel_phi(lam, s2, th, spec)), 1e-6,
                          "manual peel vs nested integrator"));
    }

    // Phi^{1,2}: trigonometric analog of the first case.
    {
      double lam = 0.7;
      double lden = log1mexp(lam);
      auto lf = [&](const QuadNode& nd) {
        return s2[0] * nd.x + s2[1] * nd.dhi + (th - 1) * nd.x +
               (th - 1) * (log1mexp(nd.dlo) - lden) +
               (th - 1) * (-nd.x + log1mexp(nd.dhi));
      };
      double manual = quad_log(interval_nodes(spec.rule, spec.order, 0.0, lam), lf) -
                      std::lgamma(th);
      out.push_back(bound(fmt("chain-ho-12-%s", tag),
                          rel_gap(manual, log_ho_Phi({lam}, s2, th, spec)), 1e-6,
                          "manual peel vs nested integrator"));
    }

    // Phi^{2,2}.
    {
      const std::vector<double> lam = {1.2, 0.6};
      double ld = log_abs_diff_exp_neg(lam[0], lam[1]);
      auto lf = [&](const QuadNode& nd) {
        double c1 = -nd.x + log1mexp(nd.dhi);       // |e^{-u} - e^{-lam1}|
        double c2 = -lam[1] + log1mexp(nd.dlo);     // |e^{-u} - e^{-lam2}|
        return s2[0] * nd.x + s2[1] * (vsum(lam) - nd.x) + (th - 1) * nd.x +
               (th - 1) * (c1 + c2 - ld);
      };
      double manual = quad_log(interval_nodes(spec.rule, spec.order, lam[1], lam[0]), lf) -
                      std::lgamma(th);
      out.push_back(bound(fmt("chain-ho-22-%s", tag),
                          rel_gap(manual, log_ho_Phi(lam, s2, th, spec)), 1e-6,
                          "manual peel vs nested integrator"));
    }
  }

  // phi^{2,3} peeled through phi^{2,2}: exercises two nested interior levels.
  {
    const double th = 0.5;
    QuadSpec spec = QuadSpec::for_theta(th);
    const std::vector<double> lam = {1.3, 0.4};
    double ld = std::log(lam[0] - lam[1]);
    LogSum acc;
    for (const QuadNode& n1 : interval_nodes(spec.rule, spec.order, lam[1], lam[0])) {
      for (const QuadNode& n2 : interval_nodes(spec.rule, spec.order, 0.0, lam[1])) {
        double nu1 = n1.x, nu2 = n2.x;
        if (!(nu2 > 0.0 && nu2 < nu1)) continue;
        double dnu = n1.dlo + n2.dhi;  // nu1 - nu2, stable through lam[1]
        double lcross = std::log(n1.dhi) + std::log(n1.dlo) + std::log(n2.dhi) +
                        std::log(lam[0] - nu2);
        double lrow = (th - 1) * (std::log(nu1) + std::log(nu2) -
                                  std::log(lam[0]) - std::log(lam[1]));
        double lf = s3[2] * (vsum(lam) - nu1 - nu2) + lrow +
                    (th - 1) * (lcross - ld - std::log(dnu)) +
                    log_bessel_phi({nu1, nu2}, {s3[0], s3[1]}, th, spec);
        acc.add(lf + std::log(n1.w) + std::log(n2.w));
      }
    }
    double manual = acc.log_value() - 2.0 * std::lgamma(th);
    out.push_back(bound("chain-mvb-23-th0.5",
                        rel_gap(manual, log_bessel_phi(lam, s3, th, spec)), 1e-6,
                        "two-level manual peel vs nested integrator"));
  }

  // Factorization through the one-level kernels: the normalized two-level
  // joint equals K_1(mu^1) K_2(mu^2 | mu^1) pointwise, each kernel normalized
  // from its own conditioning point.
  {
    const std::vector<double> pihat = {0.2, 0.9};
    const std::vector<std::vector<double>> pis = {{1.3}, {1.0, 1.7}};
    const std::vector<std::vector<LevelArray>> pats = {
        {{{0.5}, {1.1}}, {{0.9}, {1.6}}, {{0.2}, {2.4}}},
        {{{0.9}, {1.5, 0.4}}, {{0.6}, {2.0, 0.3}}, {{1.1}, {1.3, 0.9}}}};
    for (int beta : {1, 2}) {
      const double th = beta == 2 ? 1.0 : 0.5;
      QuadSpec spec = QuadSpec::for_theta(th);
      // Point evaluations are converged at the stock orders; the mass and the
      // per-level normalizers need more nodes to clear the 1e-6 bar.
      const QuadSpec norm_spec{spec.rule, spec.order * 2};
      for (std::size_t c = 0; c < pis.size(); ++c) {
        const std::vector<double>& pi = pis[c];
        double lz = log_wishart_mass(th, pi, pihat, spec, 72);
        double worst = 0.0;
        for (const LevelArray& lv : pats[c]) {
          double lhs = log_wishart_joint(th, pi, pihat, lv, spec) - lz;
          double rhs = 0.0;
          for (int l = 1; l <= 2; ++l) {
            const std::vector<double> prev =
                l == 1 ? std::vector<double>{} : lv[l - 2];
            double lk = beta == 2
                            ? log_kernel_beta2(pi, pihat[l - 1], l, prev, lv[l - 1], spec)
                            : log_kernel_beta1(pi, pihat[l - 1], l, prev, lv[l - 1], spec);
            rhs += lk - kernel_lognorm(beta, pi, pihat[l - 1], l, prev, norm_spec);
          }
          worst = std::max(worst, std::fabs(std::expm1(lhs - rhs)));
        }
        out.push_back(bound(fmt("chain-product-beta%d-n%zum2", beta, pi.size()), worst,
                            1e-6, "normalized kernel product vs normalized joint, 3 points"));
      }
    }
  }

  return out;
}

// ---------------------------------------------------------------------------
// Pairing integrals against closed Gamma products.
// ---------------------------------------------------------------------------

std::vector<CheckResult> check_cauchy() {
  std::vector<CheckResult> out;

  for (double th : kThetas) {
    QuadSpec spec = QuadSpec::for_theta(th);
    const char* tag = th == 1.0 ? "th1" : "th0.5";
    const int order = 101;

    // Rational family; weight Delta^{2 theta} prod lam^{theta(m-n)}.
    {
      const std::vector<double> s1 = {-0.6}, r1 = {-0.8};
      auto lf = [&](const QuadNode& nd) {
        return log_bessel_B({nd.x}, s1, th, spec) + log_bessel_Btilde({nd.x}, r1, th, spec);
      };
      double lhs = log_halfline(order, lf);
      double rhs = -th * std::log(-(s1[0] + r1[0]));
      out.push_back(bound(fmt("mvb-cauchy-11-%s", tag), rel_gap(lhs, rhs), 1e-10,
                          "scalar pairing vs (-(s+r))^{-theta}"));
    }
    {
      const std::vector<double> s = {-1.6, -1.2}, r = {-0.8};
      auto lf = [&](const QuadNode& nd) {
        return th * std::log(nd.x) + log_bessel_B({nd.x}, s, th, spec) +
               log_bessel_Btilde({nd.x}, r, th, spec);
      };
      double lhs = log_halfline(order, lf);
      double rhs = log_B_pref(1, 2, th);
      for (double si : s) rhs += -th * std::log(-(si + r[0]));
      out.push_back(bound(fmt("mvb-cauchy-12-%s", tag), rel_gap(lhs, rhs), 1e-10,
                          "n=1, m=2 pairing vs Gamma product"));
    }
    {
      const std::vector<double> s = {-0.8, -1.3}, r = {-0.5, -1.1};
      auto lf = [&](const QuadNode& n1, const QuadNode& n2) {
        std::vector<double> lam = {n1.x, n2.x};
        return 2.0 * th * std::log(n2.dhi) + log_bessel_B(lam, s, th, spec) +
               log_bessel_Btilde(lam, r, th, spec);
      };
      double lhs = log_chamber2(spec.rule, order, lf);
      double rhs = 2.0 * log_B_pref(2, 2, th);
      for (double si : s)
        for (double rj : r) rhs += -th * std::log(-(si + rj));
      out.push_back(bound(fmt("mvb-cauchy-22-%s", tag), rel_gap(lhs, rhs), 1e-3,
                          "n=m=2 pairing vs Gamma product"));
    }

    // Trigonometric family; weight Delta_trig^{2 theta} prod (1-e^{-lam})^{theta(m-n)},
    // Gamma(-s-r)/Gamma(theta-s-r) per pair on the right.
    auto ho_rhs_pair = [&](double si, double rj) {
      return std::lgamma(-(si + rj)) - std::lgamma(th - (si + rj));
    };
    {
      const std::vector<double> s1 = {-0.6}, r1 = {-0.8};
      auto lf = [&](const QuadNode& nd) {
        return log_ho_F({nd.x}, s1, th, spec) + log_ho_Ftilde({nd.x}, r1, th, spec);
      };
      double lhs = log_halfline(order, lf);
      out.push_back(bound(fmt("ho-cauchy-11-%s", tag), rel_gap(lhs, ho_rhs_pair(s1[0], r1[0])),
                          1e-10, "scalar pairing vs Gamma(-s-r)/Gamma(theta-s-r)"));
    }
    {
      const std::vector<double> s = {-0.6, -0.9}, r = {-0.8};
      auto lf = [&](const QuadNode& nd) {
        return th * log1mexp(nd.x) + log_ho_F({nd.x}, s, th, spec) +
               log_ho_Ftilde({nd.x}, r, th, spec);
      };
      double lhs = log_halfline(order, lf);
      double rhs = log_B_pref(1, 2, th) + ho_rhs_pair(s[0], r[0]) + ho_rhs_pair(s[1], r[0]);
      out.push_back(bound(fmt("ho-cauchy-12-%s", tag), rel_gap(lhs, rhs), 1e-10,
                          "n=1, m=2 pairing vs Gamma product"));
    }
    // n = 2 needs the trig-normalized pair: the e^{(n-1)theta|lam|/2} factors
    // of the weight are split between the two functions.
    {
      const std::vector<double> s = {-0.8, -1.3}, r = {-0.5, -1.1};
      auto lf = [&](const QuadNode& n1, const QuadNode& n2) {
        std::vector<double> lam = {n1.x, n2.x};
        double ltrig = 0.5 * vsum(lam) + (-n2.x + log1mexp(n2.dhi));
        return 2.0 * th * ltrig + log_ho_F_trig(lam, s, th, spec) +
               log_ho_Ftilde_trig(lam, r, th, spec);
      };
      double lhs = log_chamber2(spec.rule, order, lf);
      double rhs = 2.0 * log_B_pref(2, 2, th);
      for (double si : s)
        for (double rj : r) rhs += ho_rhs_pair(si, rj);
      out.push_back(bound(fmt("ho-cauchy-22-%s", tag), rel_gap(lhs, rhs), 1e-3,
                          "n=m=2 pairing vs Gamma product"));
    }
  }

  return out;
}

// ---------------------------------------------------------------------------
// Degree-truncated symmetric-function pairing.
// ---------------------------------------------------------------------------

CheckResult check_macdonald_cauchy() {
  const std::vector<double> x = {0.25, 0.3}, y = {0.2, 0.3};
  const std::vector<std::pair<double, double>> corners = {
      {0.3, 0.7}, {0.7, 0.3}, {0.45, 0.45}, {0.8, 0.5}};
  double worst = 0.0;
  for (const auto& [q, t] : corners) {
    double sum = mac::cauchy_sum(x, y, q, t, 12, 2);
    double prod = mac::cauchy_product(x, y, q, t);
    worst = std::max(worst, std::fabs(sum / prod - 1.0));
  }
  return bound("macdonald-cauchy", worst, 1e-6,
               "truncated pairing |lam|<=12 vs infinite product, 4 (q,t) corners");
}

// ---------------------------------------------------------------------------
// Group integral: three routes.
// ---------------------------------------------------------------------------

std::vector<CheckResult> check_hciz(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const std::vector<double> a_full = {1.15, 0.55, 0.20}, b_full = {0.85, 0.45, 0.10};

  for (int m : {2, 3}) {
    std::vector<double> a(a_full.begin(), a_full.begin() + m);
    std::vector<double> b(b_full.begin(), b_full.begin() + m);
    double det = hciz_det(a, b);
    double gt = hciz_gt(2, a, b, QuadSpec::for_theta(1.0));
    out.push_back(bound(fmt("hciz-gt-det-m%d", m), std::fabs(gt / det - 1.0), 1e-3,
                        fmt("polytope %.12g vs determinant %.12g", gt, det)));
    Rng rng(seed, 100 + m);
    MCEstimate mc = hciz_mc(2, a, b, 200000, rng);
    out.push_back(bound(fmt("hciz-mc-m%d", m), std::fabs(mc.mean / det - 1.0), 2e-2,
                        fmt("Haar MC %.6g (se %.2g) vs determinant %.6g", mc.mean, mc.se, det)));
  }

  {
    std::vector<double> a(a_full.begin(), a_full.begin() + 2);
    std::vector<double> b(b_full.begin(), b_full.begin() + 2);
    QuadSpec spec = QuadSpec::for_theta(0.5);
    double gt = hciz_gt(1, a, b, spec);
    double gt_lo = hciz_gt(1, a, b, spec.lower_order());
    double quaderr = std::fabs(gt_lo / gt - 1.0);
    Rng rng(seed, 110);
    MCEstimate mc = hciz_mc(1, a, b, 400000, rng);
    double thr = 3.0 * (mc.se / mc.mean + quaderr);
    out.push_back(bound("hciz-gt-mc-beta1-m2", std::fabs(gt / mc.mean - 1.0), thr,
                        fmt("polytope %.6g vs orthogonal MC %.6g (se %.2g, quad %.2g)",
                            gt, mc.mean, mc.se, quaderr)));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Transition kernels.
// ---------------------------------------------------------------------------

namespace {

// Conditional goodness of fit: bin mu^1 into quantile intervals, mu^2 into a
// quantile grid, and compare observed cell counts within each mu^1 bin to the
// kernel-induced conditional probabilities obtained by quadrature of
//   joint(u, x, y) = H(u; x, y) G(x, y),
//   G = (x - y) e^{-theta pihat_2 (x+y)} Btilde((x,y), -theta pi),
//   H = e^{-theta (pihat_1 - pihat_2) u} ((x-u)(u-y))^{theta-1}.
CheckResult kernel_conditional_chi2(int beta, std::uint64_t seed) {
  const double theta = beta == 2 ? 1.0 : 0.5;
  const std::vector<double> pi = {1.0, 1.7}, pihat = {0.2, 0.9};
  const QuadSpec spec = QuadSpec::for_theta(theta);
  const std::size_t N = 100000;

  WishartModel model{beta, pi, pihat, 2};
  Rng rng(seed, beta == 2 ? 210 : 200);
  std::vector<double> u_all(N), x_all(N), y_all(N);
  for (std::size_t k = 0; k < N; ++k) {
    LevelArray lv = sample_wishart(model, rng);
    u_all[k] = lv[0][0];
    x_all[k] = lv[1][0];
    y_all[k] = lv[1][1];
  }

  auto quantiles = [](std::vector<double> v, const std::vector<double>& qs) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double q : qs) out.push_back(v[static_cast<std::size_t>(q * v.size())]);
    return out;
  };
  const std::vector<double> ue = quantiles(u_all, {0.25, 0.5, 0.75});
  const std::vector<double> xe = quantiles(x_all, {1.0 / 3, 2.0 / 3});
  const std::vector<double> ye = quantiles(y_all, {1.0 / 3, 2.0 / 3});
  const int nb = 4, nc = 9;
  auto bin_of = [](const std::vector<double>& e, double v) {
    int i = 0;
    while (i < static_cast<int>(e.size()) && v > e[i]) ++i;
    return i;
  };

  std::vector<std::vector<double>> obs(nb, std::vector<double>(nc, 0.0));
  for (std::size_t k = 0; k < N; ++k)
    obs[bin_of(ue, u_all[k])][3 * bin_of(xe, x_all[k]) + bin_of(ye, y_all[k])] += 1.0;

  std::vector<double> s(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) s[j] = -theta * pi[j];
  const double dpihat = theta * (pihat[0] - pihat[1]);
  const std::vector<double> bin_lo = {0.0, ue[0], ue[1], ue[2]};
  const std::vector<double> bin_hi = {ue[0], ue[1], ue[2], kInf};

  std::vector<std::vector<LogSum>> lp(nb, std::vector<LogSum>(nc));
  const int ox = 32, oy = 32, ou = 33;
  for (int ix = 0; ix < 3; ++ix) {
    double xlo = ix == 0 ? 0.0 : xe[ix - 1];
    bool xinf = ix == 2;
    std::vector<QuadNode> xs = xinf ? half_line_nodes(ox)
                                    : interval_nodes(spec.rule, ox, xlo, xe[ix]);
    for (const QuadNode& nx : xs) {
      double x = xinf ? xlo + nx.x : nx.x;
      if (!(x > 0.0)) continue;
      for (int iy = 0; iy < 3; ++iy) {
        double ylo = iy == 0 ? 0.0 : ye[iy - 1];
        double yhi = iy == 2 ? x : std::min(ye[iy], x);
        if (!(yhi > ylo)) continue;
        bool clipped = yhi == x;
        double gap = clipped ? 0.0 : x - yhi;
        for (const QuadNode& ny : interval_nodes(spec.rule, oy, ylo, yhi)) {
          double y = ny.x;
          if (!(y > 0.0 && y < x)) continue;
          double xmy = gap + ny.dhi;
          double lg = std::log(xmy) - theta * pihat[1] * (x + y) +
                      log_bessel_Btilde({x, y}, s, theta, spec) +
                      std::log(nx.w) + std::log(ny.w);
          for (int b = 0; b < nb; ++b) {
            double ulo = std::max(y, bin_lo[b]);
            double uhi = std::min(x, bin_hi[b]);
            if (!(uhi > ulo)) continue;
            double glo = ulo - y, ghi = x - uhi;
            auto lh = [&](const QuadNode& nu) {
              double du_lo = glo + nu.dlo;  // u - y
              double du_hi = ghi + nu.dhi;  // x - u
              return -dpihat * nu.x + (theta - 1) * (std::log(du_lo) + std::log(du_hi));
            };
            double li = quad_log(interval_nodes(spec.rule, ou, ulo, uhi), lh);
            if (li != kNegInf) lp[b][3 * ix + iy].add(lg + li);
          }
        }
      }
    }
  }

  double stat = 0.0, dof = 0.0;
  for (int b = 0; b < nb; ++b) {
    double nb_count = 0.0;
    for (int c = 0; c < nc; ++c) nb_count += obs[b][c];
    LogSum tot;
    for (int c = 0; c < nc; ++c)
      if (!lp[b][c].empty()) tot.add(lp[b][c].log_value());
    std::vector<double> exp_c(nc, 0.0);
    for (int c = 0; c < nc; ++c)
      if (!lp[b][c].empty())
        exp_c[c] = nb_count * std::exp(lp[b][c].log_value() - tot.log_value());
    auto pooled = pool_cells(obs[b], exp_c, 5.0);
    for (const auto& [o, e] : pooled)
      if (e > 0.0) stat += (o - e) * (o - e) / e;
    if (pooled.size() > 1) dof += static_cast<double>(pooled.size()) - 1.0;
  }
  double p = chi2_sf(stat, dof);
  return pvalue(fmt("kernel-chi2-beta%d", beta), p, 0.01,
                fmt("conditional cells chi2=%.2f dof=%.0f", stat, dof));
}

}  // namespace

std::vector<CheckResult> check_kernels(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const std::vector<double> pi2 = {1.0, 1.7};

  // Complex-entry kernel integrates to one from every conditioning point.
  // The stock order leaves ~1e-6 on the half-line rule, so double it here.
  {
    QuadSpec spec = QuadSpec::for_theta(1.0);
    spec.order *= 2;
    double worst = 0.0;
    worst = std::max(worst, std::fabs(kernel_lognorm(2, pi2, 0.6, 1, {}, spec)));
    worst = std::max(worst, std::fabs(kernel_lognorm(2, pi2, 0.2, 2, {0.9}, spec)));
    worst = std::max(worst, std::fabs(kernel_lognorm(2, pi2, 0.9, 3, {1.4, 0.5}, spec)));
    worst = std::max(worst, std::fabs(kernel_lognorm(2, {1.0}, 0.3, 2, {1.3}, spec)));
    out.push_back(bound("kernel-norm-beta2", worst, 1e-6, "max |log total mass| over shapes"));
  }

  // Real-entry kernel: the stated constant leaves a parameter-free residual
  // mass sqrt(2/pi) at (n, m) = (1, 1)...
  {
    QuadSpec spec = QuadSpec::for_theta(0.5);
    double target = std::sqrt(2.0 / M_PI);
    double worst = 0.0;
    worst = std::max(worst, std::fabs(std::exp(kernel_lognorm(1, {1.0}, 0.2, 1, {}, spec)) - target));
    worst = std::max(worst, std::fabs(std::exp(kernel_lognorm(1, {2.3}, 1.1, 1, {}, spec)) - target));
    out.push_back(bound("kernel-norm-beta1-anchor", worst, 1e-6,
                        "(1,1) total mass vs sqrt(2/pi), two parameter sets"));
  }

  // ...and the residual never depends on the conditioning point, which is
  // what makes the normalized kernel well defined.
  {
    QuadSpec spec = QuadSpec::for_theta(0.5);
    double worst = 0.0;
    {
      double a = kernel_lognorm(1, pi2, 0.45, 2, {0.9}, spec);
      double b = kernel_lognorm(1, pi2, 0.45, 2, {1.6}, spec);
      double c = kernel_lognorm(1, pi2, 0.45, 2, {0.3}, spec);
      worst = std::max({worst, std::fabs(a - b), std::fabs(a - c)});
    }
    {
      double a = kernel_lognorm(1, pi2, 0.45, 3, {1.4, 0.5}, spec);
      double b = kernel_lognorm(1, pi2, 0.45, 3, {2.2, 0.2}, spec);
      worst = std::max(worst, std::fabs(a - b));
    }
    out.push_back(bound("kernel-norm-beta1-previnv", worst, 1e-6,
                        "total-mass spread across conditioning points"));
  }

  // Unit-parameter collapse: at pi = 1, pihat = 0 the rotation factor is
  // exactly e^{-theta |mu|}, so the kernels reduce to closed forms.
  {
    struct Case {
      int n, m;
      std::vector<double> prev, next;
    };
    const std::vector<Case> cases = {
        {1, 1, {}, {0.7}}, {2, 2, {0.9}, {1.5, 0.4}}, {2, 3, {1.4, 0.5}, {1.9, 0.8}}};
    double worst1 = 0.0, worst2 = 0.0;
    for (const Case& c : cases) {
      std::vector<double> ones(c.n, 1.0);
      int p = std::min(c.m, c.n), pp = std::min(c.m - 1, c.n);
      double slog_next = 0.0, slog_prev = 0.0;
      for (double v : c.next) slog_next += std::log(v);
      for (double v : c.prev) slog_prev += std::log(v);
      double closed2 = (c.n - p) * slog_next - (c.n - pp) * slog_prev - vsum(c.next) +
                       vsum(c.prev) + log_vandermonde(c.next) - log_vandermonde(c.prev);
      worst2 = std::max(worst2, std::fabs(log_kernel_beta2(ones, 0.0, c.m, c.prev, c.next,
                                                           QuadSpec::for_theta(1.0)) -
                                          closed2));
      worst1 = std::max(worst1, std::fabs(log_kernel_beta1(ones, 0.0, c.m, c.prev, c.next,
                                                           QuadSpec::for_theta(0.5)) -
                                          log_kernel_beta1_unit(c.n, c.m, c.prev, c.next)));
    }
    out.push_back(bound("kernel-unit-beta2", worst2, 1e-8, "quadrature vs closed form"));
    out.push_back(bound("kernel-unit-beta1", worst1, 1e-8, "quadrature vs closed form"));
  }

  out.push_back(kernel_conditional_chi2(1, seed));
  out.push_back(kernel_conditional_chi2(2, seed));
  return out;
}

// ---------------------------------------------------------------------------
// Spectral-ratio process laws.
// ---------------------------------------------------------------------------

namespace {

// E[f_k(top level)] under the stated two-level joint density, by iterated
// quadrature over 0 < y < x < 1 with the interior coordinate integrated out.
std::array<double, 4> jacobi_m2_moment_targets(int beta, int A, int n) {
  QuadRule rule = beta == 1 ? QuadRule::kTanhSinh : QuadRule::kGaussLegendre;
  const int order = 48;
  LogSum mass;
  std::array<LogSum, 4> acc;
  LevelArray lv = {{0.0}, {0.0, 0.0}};
  for (const QuadNode& nx : interval_nodes(rule, order, 0.0, 1.0)) {
    double x = nx.x;
    if (!(x > 0.0 && x < 1.0)) continue;
    for (const QuadNode& ny : interval_nodes(rule, order, 0.0, x)) {
      double y = ny.x;
      if (!(y > 0.0 && y < x)) continue;
      double lw = std::log(nx.w) + std::log(ny.w);
      LogSum inner;
      for (const QuadNode& nu : interval_nodes(rule, order, y, x)) {
        if (!(nu.x > y && nu.x < x)) continue;
        lv[0][0] = nu.x;
        lv[1][0] = x;
        lv[1][1] = y;
        double lf = log_jacobi_joint(beta, A, n, lv);
        if (lf != kNegInf) inner.add(lf + std::log(nu.w));
      }
      if (inner.empty()) continue;
      double lxy = inner.log_value() + lw;
      mass.add(lxy);
      const double f[4] = {x + y, x * y, x * x + y * y, (1.0 - x) * (1.0 - y)};
      for (int k = 0; k < 4; ++k) acc[k].add(lxy + std::log(f[k]));
    }
  }
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = std::exp(acc[k].log_value() - mass.log_value());
  return out;
}

CheckResult jacobi_top_ks(int beta, int A, int n, std::uint64_t seed) {
  const std::size_t N = 100000;
  JacobiModel model{beta, A, n, 1};
  Rng rng(seed, beta == 2 ? 300 : 310);
  std::vector<double> v(N);
  for (std::size_t k = 0; k < N; ++k) v[k] = sample_jacobi(model, rng).levels[0][0];
  // m=1 marginal is Beta(theta(A-n+1), theta n): at m=1 the top value is
  // 1/(1 + g W^{-1} g^*), a Hotelling-type ratio of chi-squares.
  double a = beta == 2 ? A - n + 1 : 0.5 * (A - n + 1);
  double b = beta == 2 ? n : 0.5 * n;
  KSResult ks = ks_test(v, [a, b](double x) { return beta_cdf(a, b, x); });
  return pvalue(fmt("jacobi-ks-beta%d", beta), ks.p, 0.01,
                fmt("(A,n,m)=(%d,%d,1) top value vs Beta(%.1f,%.1f), D=%.4f", A, n, a, b, ks.d));
}

CheckResult jacobi_m2_moments(int beta, int A, int n, std::uint64_t seed) {
  const std::size_t N = 20000;
  JacobiModel model{beta, A, n, 2};
  Rng rng(seed, beta == 2 ? 320 : 330);
  std::array<std::vector<double>, 4> samp;
  for (auto& v : samp) v.reserve(N);
  for (std::size_t k = 0; k < N; ++k) {
    auto lv = sample_jacobi(model, rng).levels[1];
    double x = lv[0], y = lv[1];
    samp[0].push_back(x + y);
    samp[1].push_back(x * y);
    samp[2].push_back(x * x + y * y);
    samp[3].push_back((1.0 - x) * (1.0 - y));
  }
  auto tgt = jacobi_m2_moment_targets(beta, A, n);
  double worst = 0.0;
  std::string detail = fmt("(A,n,m)=(%d,%d,2) z:", A, n);
  for (int k = 0; k < 4; ++k) {
    MomentResult mr = moment_z(samp[k], tgt[k]);
    worst = std::max(worst, std::fabs(mr.z));
    detail += fmt(" %.2f", mr.z);
  }
  return bound(fmt("jacobi-moments-beta%d", beta), worst, 4.0, detail);
}

}  // namespace

std::vector<CheckResult> check_jacobi_laws(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(jacobi_top_ks(2, 4, 3, seed));
  out.push_back(jacobi_top_ks(1, 5, 3, seed));
  out.push_back(jacobi_m2_moments(2, 4, 2, seed));
  out.push_back(jacobi_m2_moments(1, 5, 2, seed));
  return out;
}

// ---------------------------------------------------------------------------
// Change of variables between the ratio-type and trigonometric densities.
// ---------------------------------------------------------------------------

std::vector<CheckResult> check_pushforward(std::uint64_t seed) {
  std::vector<CheckResult> out;
  struct Config {
    int A, n, m;
    std::size_t draws;
  };
  const std::vector<Config> configs = {{4, 2, 2, 700}, {5, 3, 2, 250}, {6, 3, 3, 60}};
  int stream = 400;
  for (int beta : {1, 2}) {
    double theta = beta == 2 ? 1.0 : 0.5;
    // The residual is a constant; the rule only has to be stable across
    // draws, not absolutely tight, so a mid-order spec keeps this fast.
    QuadSpec spec = QuadSpec::for_theta(theta).lower_order();
    for (const Config& c : configs) {
      const std::size_t draws = c.draws;
      JacobiModel model{beta, c.A, c.n, c.m};
      Rng rng(seed, stream++);
      std::vector<double> pi(c.n), pihat(c.m);
      for (int j = 0; j < c.n; ++j) pi[j] = c.A - c.n + 1 + j;
      for (int l = 0; l < c.m; ++l) pihat[l] = l;
      std::vector<double> resid;
      for (std::size_t k = 0; k < draws; ++k) {
        JacobiSample js = sample_jacobi(model, rng);
        LevelArray mu = ho_pattern_from_jacobi(js.levels);
        // p_mu = p_lambda * prod lambda, so the mu-space density is the
        // ratio-space one plus the (negative) log-Jacobian sum log lambda.
        double r = log_jacobi_joint(beta, c.A, c.n, js.levels) +
                   log_jacobian_jacobi_to_ho(mu) -
                   log_ho_joint(theta, pi, pihat, mu, spec);
        resid.push_back(r);
      }
      double mean = vsum(resid) / resid.size();
      double var = 0.0;
      for (double r : resid) var += (r - mean) * (r - mean);
      var /= resid.size();
      out.push_back(bound(fmt("pushforward-beta%d-%d-%d-%d", beta, c.A, c.n, c.m), var, 1e-8,
                          fmt("log-residual mean %.6f over %zu draws", mean, draws)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degeneration ladders.
// ---------------------------------------------------------------------------

namespace {

const std::vector<double> kScalarEps = {1e-1, 1e-2, 1e-3};
const std::vector<double> kMacEps = {1e-1, 3e-2, 1e-2, 3e-3};

struct LimitSpec {
  std::function<double(double)> err;
  LimitLadder ladder;
};

LimitSpec scalar_limit(std::function<double(double)> err, double thr) {
  return {std::move(err), {kScalarEps, thr}};
}

LimitSpec mac_limit(std::function<double(double)> err) {
  return {std::move(err), {kMacEps, 1e-2}};
}

const std::vector<std::pair<std::string, LimitSpec>>& limit_registry() {
  static const double th = 0.5;
  static const std::vector<std::pair<std::string, LimitSpec>> reg = {
      {"qpoch-asymp",
       scalar_limit(
           [](double eps) {
               double q = std::exp(-eps), u = 0.1;
               double v = mac::log_qpoch_inf(u * std::exp(-eps * 1.0), q) -
                          mac::log_qpoch_inf(u * std::exp(-eps * 0.5), q);
               return std::fabs(std::expm1(v - (0.5 - 1.0) * std::log1p(-u)));
           },
           1e-4)},
      {"fin-qpoch-asymp",
       scalar_limit(
           [](double eps) {
               double q = std::exp(-eps), u = 0.2;
               long k = std::lround(0.5 / eps);
               double v = mac::log_qpoch_fin(u * std::exp(-eps * 1.0), q, k) -
                          mac::log_qpoch_fin(u * std::exp(-eps * 0.5), q, k);
               double tgt = (0.5 - 1.0) * (std::log1p(-u) - std::log1p(-u * std::exp(-0.5)));
               return std::fabs(std::expm1(v - tgt));
           },
           1e-4)},
      {"qgamma",
       scalar_limit(
           [](double eps) {
               double q = std::exp(-eps);
               return std::fabs(std::expm1(mac::log_qgamma(1.5, q) - std::lgamma(1.5)));
           },
           1e-3)},
      {"ratio-qpoch",
       scalar_limit(
           [](double eps) {
               double q = std::exp(-eps);
               double v = mac::log_qpoch_inf(std::exp(-eps * 0.5), q) -
                          mac::log_qpoch_inf(std::exp(-eps * 2.5), q) +
                          (0.5 - 2.5) * std::log1p(-q);
               return std::fabs(std::expm1(v - (std::lgamma(2.5) - std::lgamma(0.5))));
           },
           1e-4)},
      {"gamma-rat",
       scalar_limit(
           [](double eps) {
               double a = 2.0, t = 0.5;
               double v = -t * std::log(eps) + std::lgamma(a / eps) -
                          std::lgamma(a / eps + t);
               return std::fabs(std::expm1(v + t * std::log(a)));
           },
           1e-4)},
      {"f-lim-a",
       scalar_limit(
           [](double eps) {
               double q = std::exp(-eps), t = std::exp(-0.5 * eps), u = 0.1;
               double v = mac::log_f_ratio(u * q, q, t);
               return std::fabs(std::expm1(v - (1.0 - 0.5) * std::log1p(-u)));
           },
           1e-4)},
      {"f-lim-b",
       scalar_limit(
           [](double eps) {
               double q = std::exp(-eps), t = std::exp(-0.5 * eps), a = -0.2;
               double v = (0.5 - 1.0) * std::log(eps) +
                          mac::log_f_ratio(std::pow(q, a), q, t);
               double tgt = std::lgamma(1.0 + a) - std::lgamma(0.5 + a);
               return std::fabs(std::expm1(v - tgt));
           },
           1e-4)},
      {"mac-branch-lim",
       mac_limit([](double eps) {
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l1 = std::lround(1.2 / eps), l2 = std::lround(0.6 / eps);
           long mm = std::lround(0.9 / eps);
           mac::FCache f(q, t);
           double lv = (th - 1) * 1.0 * std::log(eps) +
                       mac::log_psi({static_cast<int>(l1), static_cast<int>(l2)},
                                    {static_cast<int>(mm)}, 2, f);
           double ltgt = (1 - 2) * std::lgamma(th) +
                         (th - 1) * (log_abs_diff_exp_neg(0.9, 1.2) +
                                     log_abs_diff_exp_neg(0.9, 0.6) -
                                     log_abs_diff_exp_neg(0.6, 1.2)) +
                         (th - 1) * 0.9;
           return std::fabs(std::expm1(lv - ltgt));
         })},
      {"mac-tbranch-lim",
       mac_limit([](double eps) {
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l = std::lround(0.6 / eps), mm = std::lround(0.3 / eps);
           mac::FCache f(q, t);
           double lv = (th - 1) * 1.0 * std::log(eps) +
                       mac::log_psi({static_cast<int>(l)}, {static_cast<int>(mm)}, 2, f);
           double ltgt = -std::lgamma(th) +
                         (th - 1) * (log_abs_diff_exp_neg(0.3, 0.6) + log1mexp(0.3) -
                                     log1mexp(0.6)) +
                         (th - 1) * 0.3;
           return std::fabs(std::expm1(lv - ltgt));
         })},
      {"b-ho-scaling",
       mac_limit([](double eps) {
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l1 = std::lround(1.2 / eps), l2 = std::lround(0.6 / eps);
           double lv = 2 * (th - 1) * std::log(eps) +
                       mac::log_b_norm({static_cast<int>(l1), static_cast<int>(l2)}, q, t);
           double ltgt = -2 * std::lgamma(th) + (th - 1) * (log1mexp(1.2) + log1mexp(0.6));
           return std::fabs(std::expm1(lv - ltgt));
         })},
      {"mac-eval-lim",
       mac_limit([](double eps) {
           const int n = 2, m = 3;
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l1 = std::lround(1.2 / eps), l2 = std::lround(0.6 / eps);
           double lv = th * ((m - n) * n + n * (n - 1) / 2.0) * std::log(eps) +
                       mac::log_principal_P({static_cast<int>(l1), static_cast<int>(l2)},
                                            m, q, t);
           double ltgt = n * std::lgamma(th) - std::lgamma(m * th) -
                         std::lgamma((m - 1) * th) +
                         th * log_abs_diff_exp_neg(1.2, 0.6) +
                         th * (m - n) * (log1mexp(1.2) + log1mexp(0.6));
           return std::fabs(std::expm1(lv - ltgt));
         })},
      {"mac-qeval-lim",
       mac_limit([](double eps) {
           const int n = 1, m = 2;
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l = std::lround(0.6 / eps);
           double lv = (th * (m - n) * n + n * (th - 1)) * std::log(eps) +
                       mac::log_b_norm({static_cast<int>(l)}, q, t) +
                       mac::log_principal_P({static_cast<int>(l)}, m, q, t);
           double ltgt = -std::lgamma(m * th) + (th * (m - n + 1) - 1) * log1mexp(0.6);
           return std::fabs(std::expm1(lv - ltgt));
         })},
      {"mac-lim",
       mac_limit([](double eps) {
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l = std::lround(0.6 / eps);
           double ref = log_ho_Phi({0.6}, {0.4, -0.7}, th, QuadSpec::for_theta(th));
           double p = mac::macdonald_P({static_cast<int>(l)},
                                       {std::exp(eps * 0.4), std::exp(-eps * 0.7)}, q, t);
           return std::fabs(std::expm1(th * std::log(eps) + std::log(p) - ref));
         })},
      {"mac-q-lim",
       mac_limit([](double eps) {
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l = std::lround(0.6 / eps);
           double ref = -std::lgamma(th) + (th - 1) * log1mexp(0.6) +
                        log_ho_Phi({0.6}, {0.4, -0.7}, th, QuadSpec::for_theta(th));
           double p = mac::macdonald_P({static_cast<int>(l)},
                                       {std::exp(eps * 0.4), std::exp(-eps * 0.7)}, q, t);
           double lv = (2 * th - 1) * std::log(eps) +
                       mac::log_b_norm({static_cast<int>(l)}, q, t) + std::log(p);
           return std::fabs(std::expm1(lv - ref));
         })},
      {"mac-ho-scale",
       mac_limit([](double eps) {
           double q = std::exp(-eps), t = std::exp(-th * eps);
           long l = std::lround(0.6 / eps);
           QuadSpec spec = QuadSpec::for_theta(th);
           double num = mac::macdonald_P({static_cast<int>(l)},
                                         {std::exp(eps * 0.4), std::exp(-eps * 0.7)}, q, t);
           double den = mac::macdonald_P({static_cast<int>(l)}, {1.0, t}, q, t);
           double lr = std::log(num) - std::log(den);
           double errP = std::fabs(std::expm1(lr - log_ho_F({0.6}, {0.4, -0.7}, th, spec)));
           double lq = (th - 1) * std::log(eps) +
                       mac::log_b_norm({static_cast<int>(l)}, q, t) + lr;
           double errQ =
               std::fabs(std::expm1(lq - log_ho_Ftilde({0.6}, {0.4, -0.7}, th, spec)));
           return std::max(errP, errQ);
         })},
      {"ho-mvb-scale",
       mac_limit([](double eps) {
           QuadSpec spec = QuadSpec::for_theta(th);
           const std::vector<double> s = {0.4, -0.7};
           std::vector<double> se = {s[0] / eps, s[1] / eps};
           double refB = log_bessel_B({0.6}, s, th, spec);
           double refBt = log_bessel_Btilde({0.6}, s, th, spec);
           double errF = std::fabs(std::expm1(log_ho_F({eps * 0.6}, se, th, spec) - refB));
           double errFt = std::fabs(std::expm1(
               -(th - 1) * std::log(eps) + log_ho_Ftilde({eps * 0.6}, se, th, spec) - refBt));
           return std::max(errF, errFt);
         })},
  };
  return reg;
}

}  // namespace

std::vector<std::string> limit_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, spec] : limit_registry()) ids.push_back(id);
  return ids;
}

double limit_error(const std::string& id, double eps) {
  for (const auto& [name, spec] : limit_registry())
    if (name == id) return spec.err(eps);
  throw std::invalid_argument("unknown limit check: " + id);
}

LimitLadder limit_default_ladder(const std::string& id) {
  for (const auto& [name, spec] : limit_registry())
    if (name == id) return spec.ladder;
  throw std::invalid_argument("unknown limit check: " + id);
}

std::vector<CheckResult> check_limits(const std::vector<std::string>& ids) {
  for (const std::string& want : ids) limit_default_ladder(want);  // validate
  std::vector<CheckResult> out;
  for (const auto& [id, spec] : limit_registry()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    std::vector<double> errs;
    for (double eps : spec.ladder.eps) errs.push_back(spec.err(eps));
    bool monotone = true;
    std::string detail = "errs:";
    for (std::size_t i = 0; i < errs.size(); ++i) {
      detail += fmt(" %.3e", errs[i]);
      // Errors must decay along the ladder until they hit the floating-point
      // noise floor of the evaluation itself.
      if (i > 0 && !(errs[i] <= errs[i - 1] * 1.25 + 1e-15) && errs[i] > 1e-10) {
        monotone = false;
      }
    }
    CheckResult r = bound(id, errs.back(), spec.ladder.threshold, detail);
    if (!monotone) {
      r.pass = false;
      r.detail += " (not decaying)";
    }
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampler support and determinism.
// ---------------------------------------------------------------------------

CheckResult check_interlacing(std::uint64_t seed) {
  const std::size_t per = 2500;
  long bad = 0;
  long total = 0;
  for (int beta : {1, 2}) {
    WishartModel wm{beta, {0.8, 1.4, 2.1}, {0.3, 0.9, 0.1, 1.2, 0.6}, 5};
    Rng rng(seed, 600 + beta);
    for (std::size_t k = 0; k < per; ++k) {
      LevelArray lv = sample_wishart(wm, rng);
      ++total;
      bool ok = lv.size() == 5;
      for (std::size_t l = 0; ok && l < lv.size(); ++l) {
        ok = lv[l].size() == std::min<std::size_t>(l + 1, 3);
        for (double v : lv[l]) ok = ok && v > 0.0;
      }
      if (!ok || !pattern_interlaced(lv)) ++bad;
    }
    JacobiModel jm{beta, 5, 3, 3};
    Rng rng2(seed, 610 + beta);
    for (std::size_t k = 0; k < per; ++k) {
      JacobiSample js = sample_jacobi(jm, rng2);
      ++total;
      bool ok = js.levels.size() == 3 && js.lambda_x.size() == 3;
      for (std::size_t l = 0; ok && l < js.levels.size(); ++l) {
        ok = js.levels[l].size() == l + 1;
        for (double v : js.levels[l]) ok = ok && v > 0.0 && v < 1.0;
      }
      for (std::size_t j = 0; ok && j + 1 < js.lambda_x.size(); ++j)
        ok = js.lambda_x[j] > js.lambda_x[j + 1] && js.lambda_x[j + 1] > 0.0;
      if (!ok || !pattern_interlaced(js.levels)) ++bad;
    }
  }
  return bound("interlacing", static_cast<double>(bad), 0.0,
               fmt("%ld violations in %ld draws across both families and betas", bad, total));
}

CheckResult check_sampling_determinism(std::uint64_t seed) {
  WishartModel wm{1, {1.0, 1.7}, {0.2, 0.9, 0.4}, 3};
  JacobiModel jm{2, 4, 2, 2};
  int mismatches = 0;
  std::string w1 = wishart_csv(wm, 48, seed, 1);
  std::string j1 = jacobi_csv(jm, 48, seed, 1);
  for (int workers : {2, 3, 7}) {
    if (wishart_csv(wm, 48, seed, workers) != w1) ++mismatches;
    if (jacobi_csv(jm, 48, seed, workers) != j1) ++mismatches;
  }
  return bound("csv-determinism", static_cast<double>(mismatches), 0.0,
               fmt("%d mismatching renders across worker counts {2,3,7}; %zu bytes each",
                   mismatches, w1.size()));
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
  std::vector<CheckResult> all;
  auto add = [&all](std::vector<CheckResult> v) {
    for (auto& r : v) all.push_back(std::move(r));
  };
  add(check_identities());
  add(check_chain());
  add(check_cauchy());
  all.push_back(check_macdonald_cauchy());
  add(check_hciz(seed));
  add(check_kernels(seed));
  add(check_jacobi_laws(seed));
  add(check_pushforward(seed));
  add(check_limits());
  all.push_back(check_interlacing(seed));
  all.push_back(check_sampling_determinism(seed));
  return all;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CheckResult> identities = check_identities();
  std::vector<CheckResult> chain = check_chain();
  std::vector<CheckResult> cauchy = check_cauchy();
  CheckResult mac = check_macdonald_cauchy();
  std::vector<CheckResult> hciz = check_hciz(seed);
  std::vector<CheckResult> kernels = check_kernels(seed);
  std::vector<CheckResult> jacobi = check_jacobi_laws(seed);
  std::vector<CheckResult> push = check_pushforward(seed);
  std::vector<CheckResult> limits = check_limits();
  CheckResult inter = check_interlacing(seed);
  CheckResult det = check_sampling_determinism(seed);

  auto take = [](const std::vector<CheckResult>& pool,
                 std::initializer_list<const char*> needles) {
    std::vector<CheckResult> got;
    for (const CheckResult& r : pool)
      for (const char* n : needles)
        if (r.id.find(n) != std::string::npos) {
          got.push_back(r);
          break;
        }
    return got;
  };
  auto finish = [](int idx, std::string name, std::vector<CheckResult> rs) {
    CriterionResult c;
    c.index = idx;
    c.name = std::move(name);
    c.results = std::move(rs);
    c.pass = !c.results.empty();
    for (const CheckResult& r : c.results) c.pass = c.pass && r.pass;
    return c;
  };

  std::vector<CriterionResult> out;
  out.push_back(finish(1, "hciz-three-route-complex", take(hciz, {"hciz-gt-det", "hciz-mc"})));
  out.push_back(finish(2, "hciz-real-orthogonal", take(hciz, {"beta1"})));
  out.push_back(finish(3, "cauchy-identities", cauchy));
  out.push_back(finish(4, "kernel-real", take(kernels, {"beta1"})));
  out.push_back(finish(5, "kernel-complex", take(kernels, {"beta2"})));
  out.push_back(finish(6, "spectral-law-complex", take(jacobi, {"beta2"})));
  out.push_back(finish(7, "spectral-law-real", take(jacobi, {"beta1"})));
  out.push_back(finish(8, "pushforward-constancy", push));
  out.push_back(finish(9, "kernel-chain-identity", chain));
  out.push_back(finish(10, "macdonald-cauchy-truncation", {mac}));
  out.push_back(finish(11, "limit-ladders", limits));
  std::vector<CheckResult> inv = identities;
  inv.push_back(inter);
  inv.push_back(det);
  out.push_back(finish(12, "invariant-suite", std::move(inv)));
  return out;
}

}  // namespace corners
