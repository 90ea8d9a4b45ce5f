#include "coxcoh/permutation.hpp"
#include "doctest.h"

using namespace coxcoh;

TEST_CASE("lexicographic enumeration") {
  const auto perms = all_permutations(4);
  REQUIRE(perms.size() == 24);
  for (std::size_t i = 0; i < perms.size(); ++i) CHECK(lex_index(perms[i]) == i);
  CHECK(perms.front() == identity_permutation(4));
  CHECK(perms.back() == Permutation{3, 2, 1, 0});
}

TEST_CASE("group operations") {
  const Permutation p{2, 0, 3, 1}, q{1, 3, 0, 2};
  CHECK(compose(p, q) == Permutation{0, 1, 2, 3});
  CHECK(inverse(p) == q);
  CHECK(sign(p) == -1);
  CHECK(sign(simple_transposition(5, 2)) == -1);
  CHECK(simple_transposition(3, 1) == Permutation{0, 2, 1});
}

TEST_CASE("partitions") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 1; n <= 7; ++n) CHECK(partitions(n).size() == counts[static_cast<std::size_t>(n)]);
  CHECK(partitions(4).front() == Partition{4});
  CHECK(partitions(4).back() == Partition{1, 1, 1, 1});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(partition_string({2, 1}) == "(2,1)");
}

TEST_CASE("sum of squared hook dimensions is n!") {
  for (int n = 1; n <= 7; ++n) {
    std::size_t sum = 0;
    for (const auto& l : partitions(n)) sum += hook_length_dimension(l) * hook_length_dimension(l);
    CHECK(sum == factorial(static_cast<std::size_t>(n)));
  }
  CHECK(hook_length_dimension({3, 2}) == 5);
}
