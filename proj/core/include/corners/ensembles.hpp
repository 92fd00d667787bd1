#pragma once

#include <cstdint>
#include <vector>

#include "corners/rng.hpp"

namespace corners {

// Eigenvalue triangle: levels[l-1] holds the level-l spectrum in strictly
// decreasing order.  Level l of the covariance-type model has min(l, n)
// entries; level l of the ratio-type model has l entries.
using LevelArray = std::vector<std::vector<double>>;

// Covariance corner process.  A is an m x n Gaussian array with independent
// entries of mean zero and E|A_ij|^2 = 1 / (pihat_i + pi_j); level l is the
// nonzero spectrum of the Gram matrix of the first l rows.
struct WishartModel {
  int beta = 2;               // 1 = real entries, 2 = complex entries
  std::vector<double> pi;     // column parameters, size n
  std::vector<double> pihat;  // row parameters, size >= m, pihat_i + pi_j > 0
  int m = 1;                  // number of levels sampled
};

LevelArray sample_wishart(const WishartModel& model, Rng& rng);

// Spectral-ratio corner process with m <= n <= A.  X is A x n and Y is n x n,
// both with standard entries; level l is given by the l smallest eigenvalues
// of (X*X)(X*X + Y_l*Y_l)^{-1} where Y_l keeps the first l rows of Y.  The
// remaining n - l eigenvalues equal 1 identically and are discarded.
struct JacobiModel {
  int beta = 2;
  int A = 2;
  int n = 1;
  int m = 1;
};

struct JacobiSample {
  LevelArray levels;             // level l: l values in (0,1), decreasing
  std::vector<double> lambda_x;  // spectrum of X*X, decreasing, size n
  int resamples = 0;             // retries forced by ill-conditioned pencils
};

JacobiSample sample_jacobi(const JacobiModel& model, Rng& rng);

// tau_i = 1/lambda_{p+1-i} - 1: maps a level in (0,1)^p, decreasing, to a
// positive decreasing vector.  Conditionally on the spectrum of X*X this
// turns ratio levels into covariance levels with pi = lambda_x, pihat = 0.
std::vector<double> tau_from_jacobi_level(const std::vector<double>& level);

bool strictly_interlaced(const std::vector<double>& lower,
                         const std::vector<double>& upper);
bool pattern_interlaced(const LevelArray& levels);

}  // namespace corners
