#include <random>

#include "coxcoh/budget.hpp"
#include "coxcoh/matrix.hpp"
#include "doctest.h"
#include "support/oracle.hpp"

using namespace coxcoh;

TEST_CASE("product agrees with a schoolbook product over Q") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_q(rng, 5, 4, 3);
    const auto b = oracle::random_q(rng, 4, 6, 4);
    oracle::QMatrix c(5, std::vector<mpq_class>(6));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 6; ++j) c[i][j] += a[i][k] * b[k][j];
    CHECK(oracle::from_q(a) * oracle::from_q(b) == oracle::from_q(c));
  }
}

TEST_CASE("shape errors throw") {
  const ExactMatrix a(rationals(), 2, 3), b(rationals(), 2, 3);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS(a + ExactMatrix(rationals(), 3, 2), Error);
  CHECK_THROWS_AS(a + ExactMatrix(field_for(5), 2, 3), Error);
}

TEST_CASE("block helpers") {
  const ExactMatrix m = ExactMatrix::from_rows(rationals(), {{1, 2, 3}, {4, 5, 6}});
  CHECK(m.transpose() == ExactMatrix::from_rows(rationals(), {{1, 4}, {2, 5}, {3, 6}}));
  CHECK(m.block(0, 1, 2, 2) == ExactMatrix::from_rows(rationals(), {{2, 3}, {5, 6}}));
  CHECK(m.select_cols({2, 0}) == ExactMatrix::from_rows(rationals(), {{3, 1}, {6, 4}}));
  CHECK(hstack(m, m).cols() == 6);
  CHECK(vstack(m, m).rows() == 4);
  CHECK(kron(ExactMatrix::identity(rationals(), 2), m).rows() == 4);
  CHECK(direct_sum(m, m).nonzeros() == 12);
  CHECK(m.scaled(Rational(1, 2)).at(1, 1).to_string() == "5/2");
}

TEST_CASE("matrix power over Q(2cos(pi/5))") {
  // two reflections at angle pi/5 compose to a rotation of order 5
  const FieldSpec& f = field_for(5);
  ExactMatrix r1(f, 2, 2), r2(f, 2, 2);
  r1.set(0, 0, -1L);
  r1.set(0, 1, FieldElement::generator(f));
  r1.set(1, 1, 1L);
  r2.set(0, 0, 1L);
  r2.set(1, 0, FieldElement::generator(f));
  r2.set(1, 1, -1L);
  const ExactMatrix rot = r1 * r2;
  CHECK(matrix_power(rot, 5) == ExactMatrix::identity(f, 2));
  CHECK_FALSE(matrix_power(rot, 1) == ExactMatrix::identity(f, 2));
}

TEST_CASE("sparse and dense agree") {
  std::mt19937_64 rng(11);
  const auto a = oracle::from_q(oracle::random_q(rng, 6, 5, 2));
  const auto b = oracle::from_q(oracle::random_q(rng, 5, 4, 3));
  const SparseMatrix sa(a), sb(b);
  CHECK((sa * sb).to_dense() == a * b);
  CHECK(sa * b == a * b);
  CHECK(sa.transpose().to_dense() == a.transpose());
  CHECK((sa - sa).nonzeros() == 0);
  CHECK((sa + sa).to_dense() == a + a);
  const SparseMatrix p = SparseMatrix::permutation({2, 0, 1});
  CHECK(sparse_power(p, 3) == SparseMatrix::identity(rationals(), 3));
  CHECK(p.trace().is_zero());
}

TEST_CASE("sparse push keeps rows increasing") {
  SparseMatrix s(rationals(), 3, 1);
  s.push(1, 0, 2);
  CHECK_THROWS(s.push(0, 0, 1));
}

TEST_CASE("budget is enforced") {
  const std::size_t saved = matrix_budget_bytes();
  set_matrix_budget_bytes(1024);
  CHECK_THROWS_AS(ExactMatrix(rationals(), 100, 100), BudgetExceeded);
  set_matrix_budget_bytes(saved);
  CHECK_NOTHROW(ExactMatrix(rationals(), 100, 100));
}
