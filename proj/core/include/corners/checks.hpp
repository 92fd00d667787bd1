#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Verification catalog: every density formula, transition kernel, functional
// identity, pairing identity, and degeneration ladder the library claims is
// covered by one named check with a pinned threshold.  Checks are grouped so
// the CLI can run subsets; the acceptance binary maps groups onto its
// criteria list.

namespace corners {

struct CheckResult {
  std::string id;
  bool pass = false;
  double metric = 0.0;     // decisive number: max error, min p-value, ...
  double threshold = 0.0;  // pinned bound the metric was compared against
  std::string detail;      // comparison direction and context
};

// Functional equations of the hypergeometric layer: normalization at zero
// argument and at the principal point, argument symmetry, scaling, shift
// rule, explicit exponential specializations.  Deterministic.
std::vector<CheckResult> check_identities();

// Level-peeling consistency of the polytope integrals at (n, m) = (1, 2) and
// (2, 2), rational and trigonometric, both theta values.  Deterministic.
std::vector<CheckResult> check_chain();

// Pairing integrals against closed product forms: scalar cases to 1e-10,
// two-part cases by nested quadrature.  Deterministic.
std::vector<CheckResult> check_cauchy();

// Degree-truncated symmetric-function pairing against the infinite product,
// all four (q, t) corners.  Deterministic.
CheckResult check_macdonald_cauchy();

// Group integral, three routes: polytope quadrature, determinantal closed
// form, and Haar Monte Carlo.
std::vector<CheckResult> check_hciz(std::uint64_t seed);

// Transition kernels: conditional chi^2 of sampled corners against the
// kernel-induced cell probabilities, unit-parameter closed form, and
// normalization behavior of both kernels.
std::vector<CheckResult> check_kernels(std::uint64_t seed);

// Spectral-ratio process: top-marginal KS at m = 1 and joint moments at
// m = 2 against quadrature of the stated joint densities, both betas.
std::vector<CheckResult> check_jacobi_laws(std::uint64_t seed);

// Change of variables lambda -> -log lambda: the log-residual between the
// two joint densities must be constant over the support.
std::vector<CheckResult> check_pushforward(std::uint64_t seed);

// Degeneration ladders (ids below); each must have errors decreasing along
// its epsilon ladder and land under its final threshold.
std::vector<CheckResult> check_limits(const std::vector<std::string>& ids = {});
std::vector<std::string> limit_ids();

// One rung of a ladder: the relative error of the named degeneration at a
// given epsilon.  Throws std::invalid_argument for unknown ids.
double limit_error(const std::string& id, double eps);

// The pinned default ladder (epsilon sequence and final-rung threshold).
struct LimitLadder {
  std::vector<double> eps;
  double threshold = 0.0;
};
LimitLadder limit_default_ladder(const std::string& id);

// Samplers stay strictly inside the interlacing cone with the right shapes.
CheckResult check_interlacing(std::uint64_t seed);

// CSV output is a pure function of (model, draws, seed): worker count must
// not change a byte.
CheckResult check_sampling_determinism(std::uint64_t seed);

// Everything, in a stable order.
std::vector<CheckResult> run_all_checks(std::uint64_t seed);

// The acceptance list: each criterion bundles the checks that decide it.
// A criterion passes iff every bundled check passes.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::vector<CheckResult> results;
};
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace corners
