#pragma once

#include <vector>

#include "corners/ensembles.hpp"
#include "corners/hyperfun.hpp"

// Log densities and transition kernels of the multilevel eigenvalue models.
// All densities are with respect to Lebesgue measure on the interlacing cone
// (joint laws) or the ordered chamber (top-level marginals), and return -inf
// off the support.  "Unnormalized" means the model-independent constant is
// omitted; everything that depends on the point or on (pi, pihat) is kept.

namespace corners {

// Joint law of the covariance corner process at inverse temperature
// theta = beta/2 with column parameters pi (size n) and row parameters
// pihat (size >= m).  levels must have min(l, n) entries at level l.
double log_wishart_joint(double theta, const std::vector<double>& pi,
                         const std::vector<double>& pihat,
                         const LevelArray& levels, const QuadSpec& spec);

// Top-level marginal at level m (mu has min(m, n) entries, decreasing).
double log_wishart_marginal(double theta, const std::vector<double>& pi,
                            const std::vector<double>& pihat, int m,
                            const std::vector<double>& mu,
                            const QuadSpec& spec);

// Markov kernel of the covariance process from level m-1 to level m, complex
// entries (theta = 1).  prev may be empty when m = 1.  Normalized in mu_m.
double log_kernel_beta2(const std::vector<double>& pi, double pihat_m, int m,
                        const std::vector<double>& prev,
                        const std::vector<double>& next, const QuadSpec& spec);

// Same kernel for real entries (theta = 1/2).  The closed-form constant
// absorbs everything mu-independent except a residual factor that does not
// depend on prev; callers needing a probability kernel divide by
// kernel_lognorm once per (pi, pihat_m, m).
double log_kernel_beta1(const std::vector<double>& pi, double pihat_m, int m,
                        const std::vector<double>& prev,
                        const std::vector<double>& next, const QuadSpec& spec);

// log of the total mass of the level-(m-1) -> level-m kernel in its next
// argument, given prev.  Zero (up to quadrature) for beta = 2; independent
// of prev, but not zero, for beta = 1.
double kernel_lognorm(int beta, const std::vector<double>& pi, double pihat_m,
                      int m, const std::vector<double>& prev,
                      const QuadSpec& spec);

// Specialization of the real kernel to pi = 1, pihat = 0 where the rotation
// integral collapses to exp(-|mu|/2); no quadrature involved.
double log_kernel_beta1_unit(int n, int m, const std::vector<double>& prev,
                             const std::vector<double>& next);

// Joint law of the trigonometric multilevel ensemble (positive levels,
// same interlacing geometry).
double log_ho_joint(double theta, const std::vector<double>& pi,
                    const std::vector<double>& pihat, const LevelArray& levels,
                    const QuadSpec& spec);

double log_ho_marginal(double theta, const std::vector<double>& pi,
                       const std::vector<double>& pihat, int m,
                       const std::vector<double>& mu, const QuadSpec& spec);

// Joint law of the spectral-ratio corner process (levels in (0,1), level l
// has l entries, m <= n <= A), up to the normalization constant.
double log_jacobi_joint(int beta, int A, int n, const LevelArray& levels);

// Coordinate map lambda -> mu = -log(lambda), order-reversed per level, and
// the log-Jacobian of the inverse map (so that
// log p_mu(mu) = log p_lambda(lambda(mu)) + log_jacobian).
LevelArray ho_pattern_from_jacobi(const LevelArray& lambda_levels);
double log_jacobian_jacobi_to_ho(const LevelArray& mu_levels);

}  // namespace corners
