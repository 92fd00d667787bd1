#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

// Deterministic random number generation.  All variates are derived from raw
// mt19937_64 output through fixed algorithms (never std::*_distribution, whose
// results are implementation-defined), so streams are reproducible across
// platforms and across worker counts.  Independent substreams are obtained by
// mixing a stream index into the seed with splitmix64.

namespace corners {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Substream `stream` of master seed `seed`: seeds drawn from a splitmix64
  // sequence keyed on both values, so distinct (seed, stream) pairs give
  // uncorrelated generators regardless of how work is partitioned.
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    std::uint64_t b = splitmix64(s);
    (void)splitmix64(s);
    gen_.seed(b ^ splitmix64(s));
  }

  std::uint64_t raw() { return gen_(); }

  // Uniform on (0, 1]: the +1 keeps log() finite.
  double uniform() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1p-53;
  }

  // Standard normal via Box-Muller; the cosine/sine pair is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * M_PI * u2;
    cached_ = r * std::sin(ang);
    have_cached_ = true;
    return r * std::cos(ang);
  }

  // Standard complex normal: E|z|^2 = 1.
  std::complex<double> cnormal() {
    double x = normal();
    double y = normal();
    return {x * M_SQRT1_2, y * M_SQRT1_2};
  }

  // Beta(a, a) on (0, 1).  The two cases used by the beta = 1, 2 ensembles
  // have exact inverse-CDF forms; other shapes go through gamma variates.
  double beta_symmetric(double a) {
    if (a == 0.5) {
      double u = uniform();
      double s = std::sin(0.5 * M_PI * u);
      return s * s;  // arcsine law
    }
    if (a == 1.0) return uniform();
    double x = gamma_shape(a);
    double y = gamma_shape(a);
    return x / (x + y);
  }

  // Gamma(shape, 1) via Marsaglia-Tsang, boosted for shape < 1.
  double gamma_shape(double shape) {
    if (shape < 1.0) {
      double u = uniform();
      return gamma_shape(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace corners
