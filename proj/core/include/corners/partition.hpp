#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

// Integer partitions for the symmetric-function layer.  A partition is a
// weakly decreasing vector of nonnegative ints; trailing zeros are allowed
// and ignored by length().

namespace corners {

using Partition = std::vector<int>;

inline int partition_length(const Partition& p) {
  int l = static_cast<int>(p.size());
  while (l > 0 && p[l - 1] == 0) --l;
  return l;
}

inline long partition_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0L);
}

inline int partition_part(const Partition& p, int i) {  // 1-based, 0 beyond length
  return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

// mu interlaces lambda: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
inline bool interlaces(const Partition& lambda, const Partition& mu) {
  int n = partition_length(lambda);
  if (partition_length(mu) > n) return false;
  for (int i = 1; i <= n; ++i) {
    int m = partition_part(mu, i);
    if (m > partition_part(lambda, i)) return false;
    if (m < partition_part(lambda, i + 1)) return false;
  }
  return true;
}

// Visit every mu with mu interlacing lambda (mu_i in [lambda_{i+1}, lambda_i]).
inline void for_each_interlacing(const Partition& lambda,
                                 const std::function<void(const Partition&)>& fn) {
  int n = partition_length(lambda);
  if (n == 0) {
    fn(Partition{});
    return;
  }
  Partition mu(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(mu);
      return;
    }
    int hi = partition_part(lambda, i + 1);
    int lo = partition_part(lambda, i + 2);
    for (int v = hi; v >= lo; --v) {
      // enforce weak decrease against the previous coordinate
      if (i > 0 && v > mu[i - 1]) continue;
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

// Visit every partition with at most `max_len` parts and |lambda| <= max_weight.
inline void for_each_partition(int max_len, long max_weight,
                               const std::function<void(const Partition&)>& fn) {
  Partition lam;
  std::function<void(int, long)> rec = [&](int cap, long remaining) {
    fn(lam);
    if (static_cast<int>(lam.size()) == max_len) return;
    int hi = static_cast<int>(remaining < cap ? remaining : cap);
    for (int v = 1; v <= hi; ++v) {
      lam.push_back(v);
      rec(v, remaining - v);
      lam.pop_back();
    }
  };
  rec(static_cast<int>(max_weight), max_weight);
}

}  // namespace corners
