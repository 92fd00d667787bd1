#include "corners/sampling_csv.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <thread>
#include <vector>

namespace corners {

namespace {

void append_row(std::string& out, std::size_t draw, int level,
                const std::vector<double>& values) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%zu,%d", draw, level);
  out += buf;
  for (double v : values) {
    std::snprintf(buf, sizeof(buf), ",%.16e", v);
    out += buf;
  }
  out += '\n';
}

std::string join(const std::vector<double>& v) {
  std::string s;
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s%.16e", i ? "," : "", v[i]);
    s += buf;
  }
  return s;
}

// Renders draws [0, n) with the given per-draw function, splitting the range
// over workers.  Chunks are indexed by draw, so concatenation order (and
// therefore the output) is worker-count independent.
std::string render_draws(std::size_t draws, int workers,
                         const std::function<std::string(std::size_t)>& one) {
  if (workers < 1) workers = 1;
  std::vector<std::string> chunks(draws);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) chunks[k] = one(k);
  };
  if (workers == 1 || draws < 2) {
    work(0, draws);
  } else {
    std::vector<std::thread> threads;
    const std::size_t per = (draws + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = per * w;
      const std::size_t hi = std::min(draws, lo + per);
      if (lo >= hi) break;
      threads.emplace_back(work, lo, hi);
    }
    for (auto& t : threads) t.join();
  }
  std::string out;
  for (auto& c : chunks) out += c;
  return out;
}

}  // namespace

std::string wishart_csv(const WishartModel& model, std::size_t draws,
                        std::uint64_t seed, int workers) {
  char buf[128];
  std::string out = "# corners-lab sample\n";
  std::snprintf(buf, sizeof(buf), "# family=wishart beta=%d n=%zu m=%d draws=%zu seed=%llu\n",
                model.beta, model.pi.size(), model.m, draws,
                static_cast<unsigned long long>(seed));
  out += buf;
  out += "# pi=" + join(model.pi) + "\n";
  out += "# pihat=" + join(model.pihat) + "\n";
  out += "# columns: draw,level,values (largest eigenvalue first)\n";
  out += render_draws(draws, workers, [&](std::size_t k) {
    Rng rng(seed, k);
    const LevelArray levels = sample_wishart(model, rng);
    std::string chunk;
    for (std::size_t l = 0; l < levels.size(); ++l)
      append_row(chunk, k, static_cast<int>(l + 1), levels[l]);
    return chunk;
  });
  return out;
}

std::string jacobi_csv(const JacobiModel& model, std::size_t draws,
                       std::uint64_t seed, int workers) {
  char buf[128];
  std::string out = "# corners-lab sample\n";
  std::snprintf(buf, sizeof(buf), "# family=jacobi beta=%d A=%d n=%d m=%d draws=%zu seed=%llu\n",
                model.beta, model.A, model.n, model.m, draws,
                static_cast<unsigned long long>(seed));
  out += buf;
  out += "# columns: draw,level,values (level 0 = base spectrum)\n";
  out += render_draws(draws, workers, [&](std::size_t k) {
    Rng rng(seed, k);
    const JacobiSample s = sample_jacobi(model, rng);
    std::string chunk;
    append_row(chunk, k, 0, s.lambda_x);
    for (std::size_t l = 0; l < s.levels.size(); ++l)
      append_row(chunk, k, static_cast<int>(l + 1), s.levels[l]);
    return chunk;
  });
  return out;
}

}  // namespace corners
