#include <catch2/catch_amalgamated.hpp>

#include "genchar/characters.hpp"
#include "genchar/partition.hpp"

using namespace genchar;

TEST_CASE("trivial and sign characters") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& ct : enumerate_partitions(n)) {
      CHECK(mn_character(Partition(std::vector<int>{n}), ct) == 1);
      const int expected_sign = (n - ct.rows()) % 2 == 0 ? 1 : -1;
      CHECK(mn_character(Partition(std::vector<int>(n, 1)), ct) == expected_sign);
    }
}

TEST_CASE("character table of S_3") {
  const Partition lam({2, 1});
  CHECK(mn_character(lam, Partition({1, 1, 1})) == 2);
  CHECK(mn_character(lam, Partition({2, 1})) == 0);
  CHECK(mn_character(lam, Partition({3})) == -1);
  CHECK_THROWS_WITH(mn_character(lam, Partition({2, 2})), "size mismatch");
}

TEST_CASE("first column squares sum to n!") {
  for (int n = 1; n <= 8; ++n) {
    long long sum = 0, nf = 1;
    for (int k = 2; k <= n; ++k) nf *= k;
    const Partition id_type(std::vector<int>(n, 1));
    for (const auto& lam : enumerate_partitions(n)) {
      const long long d = mn_character(lam, id_type);
      CHECK(d == static_cast<long long>(dimension(lam)));
      sum += d * d;
    }
    CHECK(sum == nf);
  }
}

TEST_CASE("conjugating the shape twists by the sign of the class") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : enumerate_partitions(n))
      for (const auto& ct : enumerate_partitions(n)) {
        const int s = (n - ct.rows()) % 2 == 0 ? 1 : -1;
        CHECK(mn_character(lam, ct) == s * mn_character(conjugate(lam), ct));
      }
}

TEST_CASE("restricted character relabels away the fixed point 1") {
  CHECK(restricted_character(Partition({2}), Permutation::identity(3)) == 1);
  CHECK(restricted_character(Partition({1, 1}), Permutation::identity(3)) == 1);
  CHECK(restricted_character(Partition({2, 1}), Permutation::identity(4)) == 2);
  CHECK(restricted_character(Partition({1, 1}), parse_permutation("(2 3)", 3)) == -1);
  CHECK(restricted_character(Partition({2}), parse_permutation("(2 3)", 3)) == 1);
  CHECK_THROWS_WITH(restricted_character(Partition({2}), parse_permutation("(1 2)", 3)),
                    "h does not fix 1");
}
