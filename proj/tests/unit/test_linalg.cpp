#include <random>

#include "coxcoh/budget.hpp"
#include "coxcoh/linalg.hpp"
#include "doctest.h"
#include "support/oracle.hpp"

using namespace coxcoh;

TEST_CASE("rank agrees with the reference elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 12);
    const std::size_t r = size(rng), c = size(rng), k = size(rng);
    const auto q = oracle::random_q(rng, r, c, k);
    const ExactMatrix a = oracle::from_q(q);
    const std::size_t expected = oracle::rank(q);
    CHECK(exact_rank(a) == expected);
    CHECK(exact_rank(SparseMatrix(a)) == expected);
    CHECK(rref(a).pivots.size() == expected);
    CHECK(modular_rank(a, 0).rank == expected);
  }
}

TEST_CASE("rref of a known matrix") {
  const ExactMatrix a = ExactMatrix::from_rows(rationals(), {{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
  const EchelonForm e = rref(a);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.reduced.block(0, 0, 2, 3) == ExactMatrix::from_rows(rationals(), {{1, 2, 0}, {0, 0, 1}}));
}

TEST_CASE("kernel and image") {
  const ExactMatrix a = ExactMatrix::from_rows(rationals(), {{1, 2, 3}, {2, 4, 6}});
  const ExactMatrix k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());
  CHECK(image_basis(a) == ExactMatrix::from_rows(rationals(), {{1}, {2}}));
}

TEST_CASE("solve") {
  const ExactMatrix a = ExactMatrix::from_rows(rationals(), {{1, 1}, {0, 2}, {1, 3}});
  const ExactMatrix b = ExactMatrix::from_rows(rationals(), {{3}, {4}, {7}});
  const auto x = solve(a, b);
  REQUIRE(x);
  CHECK(*x == ExactMatrix::from_rows(rationals(), {{1}, {2}}));
  CHECK_FALSE(solve(a, ExactMatrix::from_rows(rationals(), {{1}, {0}, {0}})));
}

TEST_CASE("modular rank uses distinct primes from the seed") {
  const ExactMatrix a = ExactMatrix::identity(rationals(), 4);
  const ModularRank m0 = modular_rank(a, 0), m1 = modular_rank(a, 1);
  for (auto p : m0.primes) {
    CHECK(is_prime_u64(p));
    CHECK(p > (1ULL << 30));
    CHECK(p < (1ULL << 31));
  }
  CHECK(m0.primes[0] != m0.primes[1]);
  CHECK(m0.primes == modular_rank(a, 0).primes);
  CHECK(m0.primes != m1.primes);
  CHECK(m0.agreed);
}

TEST_CASE("modular rank skips primes dividing denominators") {
  const std::uint64_t p = modular_rank(ExactMatrix::identity(rationals(), 1), 0).primes[0];
  ExactMatrix a(rationals(), 1, 1);
  a.set(0, 0, Rational(1, static_cast<unsigned long>(p)));
  const ModularRank m = modular_rank(a, 0);
  CHECK(m.rank == 1);
  CHECK(m.primes[0] != p);
}

TEST_CASE("rank modes") {
  const ExactMatrix a = ExactMatrix::from_rows(rationals(), {{1, 2}, {2, 4}});
  CHECK(rank(a, {RankMode::exact}).rank == 1);
  CHECK(rank(a, {RankMode::modular}).rank == 1);
  CHECK(rank(a, {RankMode::modular}).probabilistic);
  CHECK(parse_rank_mode("auto") == RankMode::automatic);
  CHECK_THROWS(parse_rank_mode("fast"));
  ExactMatrix g(field_for(5), 1, 1);
  g.set(0, 0, FieldElement::generator(field_for(5)));
  CHECK_THROWS_AS(rank_kernel_image(g, RankMode::modular), Error);
  CHECK(rank(g).rank == 1);
}

TEST_CASE("subspace coordinates") {
  const ExactMatrix v = ExactMatrix::from_rows(rationals(), {{1, 0}, {1, 1}, {0, 1}});
  const Subspace s = Subspace::span_of(v);
  CHECK(s.dim() == 2);
  const ExactMatrix w = ExactMatrix::from_rows(rationals(), {{2}, {5}, {3}});
  CHECK(s.basis() * s.coordinates(w) == w);
  CHECK_FALSE(s.contains(ExactMatrix::from_rows(rationals(), {{1}, {0}, {0}})));
  CHECK_THROWS_AS(s.coordinates(ExactMatrix::from_rows(rationals(), {{1}, {0}, {0}})), InternalError);
  const Subspace k = Subspace::kernel_of(ExactMatrix::from_rows(rationals(), {{1, -1, 1}}));
  CHECK(same_subspace(s, k));
}
