#include "coxcoh/configspace.hpp"
#include "doctest.h"

using namespace coxcoh;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("cell counts") {
  // a k-cell chooses which n-k of the k parts are pairs, then fills them
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto cells = enumerate_cells(n, k);
      const auto pairs = static_cast<std::size_t>(n - k);
      const std::size_t expected =
          2 * k < n ? 0 : binom(static_cast<std::size_t>(k), pairs) * factorial(static_cast<std::size_t>(n)) / (std::size_t{1} << pairs);
      CHECK(cells.size() == expected);
      for (const auto& c : cells) CHECK_NOTHROW(validate(c, n));
    }
}

TEST_CASE("partition helpers") {
  const OrderedPartition p{{{2, 3}, {1}}};
  CHECK(p.to_string() == "({2,3},{1})");
  CHECK(p.sizes() == std::vector<int>{2, 1});
  CHECK_FALSE(p.order_preserving());
  CHECK(standard_cell({2, 1}) == OrderedPartition{{{1, 2}, {3}}});
  CHECK(size_vector_to_set({1, 2, 2}).members == std::vector<std::size_t>{1, 3});
  CHECK(set_to_size_vector(IndependentSet{{1, 3}}, 5) == std::vector<int>{1, 2, 2});
  CHECK(act_right(standard_cell(p.sizes()), translating_permutation(p)) == p);
  CHECK_THROWS(validate(OrderedPartition{{{1, 2, 3}}}, 3));
  CHECK_THROWS(validate(OrderedPartition{{{1}, {1}}}, 2));
}

TEST_CASE("relative complex for three points has two one-dimensional groups") {
  const RelativeComplex c = relative_complex(3);
  CHECK_NOTHROW(c.complex.verify());
  const auto h = cohomology(c.complex);
  std::size_t nonzero = 0;
  for (auto d : h.h_dims) {
    CHECK(d <= 1);
    nonzero += d;
  }
  CHECK(nonzero == 2);
}

TEST_CASE("phi is a bijective chain map") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const PhiConfigReport r = phi_config(n);
    CHECK(r.chain_map);
    CHECK(r.bijective);
    CHECK(r.cell_dims == r.coxeter_dims);
    CHECK(r.tail_commutes == (n % 2 == 0));
    CHECK(r.tail_anticommutes == (n % 2 == 1));
  }
}

TEST_CASE("homology matches under k <-> n-k") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto r = compare_homology(n);
    CHECK(r.dual_match);
    CHECK(r.complement_matches_same_degree);
    CHECK(r.complement_h[0] == 1);
  }
}

TEST_CASE("stabilizers are parabolic") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : stabilizer_check(n)) {
      CAPTURE(s.cell);
      CHECK(s.cell_ok);
      CHECK(s.element_ok);
      CHECK(s.stabilizer_size == s.parabolic_size);
    }
}

TEST_CASE("specht decomposition of the regular representation") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& c : specht_spot_check(n)) {
      CHECK(c.ok);
      CHECK(c.weighted_sum == c.regular_dim);
    }
}

TEST_CASE("phi signs") {
  CHECK(phi_sign({2, 1}, PhiSign::head) == 1);
  CHECK(phi_sign({1, 2}, PhiSign::head) == -1);
  CHECK(phi_sign({1, 1, 1}, PhiSign::head) == -1);
  CHECK(phi_sign({1, 1, 1}, PhiSign::tail) == -1);
  CHECK(phi_sign({2, 2}, PhiSign::tail) == 1);
}
