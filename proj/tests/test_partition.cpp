#include <set>
#include <vector>

#include "corners/partition.hpp"
#include "doctest.h"

using namespace corners;

TEST_CASE("length, weight, and 1-based part access") {
  Partition p = {4, 2, 2, 0, 0};
  CHECK(partition_length(p) == 3);
  CHECK(partition_weight(p) == 8);
  CHECK(partition_part(p, 1) == 4);
  CHECK(partition_part(p, 3) == 2);
  CHECK(partition_part(p, 4) == 0);
  CHECK(partition_part(p, 99) == 0);
  CHECK(partition_length(Partition{}) == 0);
}

TEST_CASE("interlacing predicate") {
  CHECK(interlaces({3, 1}, {2, 1}));
  CHECK(interlaces({3, 1}, {3}));
  CHECK(interlaces({3, 1}, {1, 1}));
  CHECK_FALSE(interlaces({3, 1}, {4}));     // mu_1 > lambda_1
  CHECK_FALSE(interlaces({3, 1}, {2, 2}));  // mu_2 > lambda_2
  CHECK_FALSE(interlaces({3, 1}, {0}));     // mu_1 < lambda_2
  CHECK(interlaces({}, {}));
}

TEST_CASE("for_each_interlacing enumerates exactly the interlacing set") {
  Partition lam = {3, 1};
  std::set<Partition> seen;
  for_each_interlacing(lam, [&](const Partition& mu) {
    CHECK(interlaces(lam, mu));
    seen.insert(mu);
  });
  // mu_1 in {1,2,3}, mu_2 in {0,1}: 6 patterns.
  CHECK(seen.size() == 6);
}

TEST_CASE("for_each_partition respects bounds and counts") {
  // Partitions with at most 2 rows and weight <= 4:
  // (), (1), (2), (3), (4), (1,1), (2,1), (2,2), (3,1) -> 9 of them.
  int count = 0;
  for_each_partition(2, 4, [&](const Partition& lam) {
    CHECK(partition_weight(lam) <= 4);
    CHECK(static_cast<int>(lam.size()) <= 2);
    for (std::size_t i = 1; i < lam.size(); ++i) CHECK(lam[i - 1] >= lam[i]);
    ++count;
  });
  CHECK(count == 9);
}
