#include <cmath>
#include <numbers>

#include "coxcoh/budget.hpp"
#include "coxcoh/field.hpp"
#include "doctest.h"

using namespace coxcoh;

namespace {

double eval(const std::vector<Integer>& poly, double x) {
  double acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

}  // namespace

TEST_CASE("minimal polynomials vanish at 2cos(pi/M)") {
  for (int M = 1; M <= 30; ++M) {
    const FieldSpec& f = field_for(M);
    CAPTURE(M);
    const double y = 2 * std::cos(std::numbers::pi / M);
    CHECK(std::abs(eval(f.minpoly(), y)) < 1e-9);
    CHECK(f.minpoly().back() == 1);
    // degree of Q(cos(2pi/2M)) is phi(2M)/2, except 1 for M = 1
    const int expected = M == 1 ? 1 : euler_phi(2 * M) / 2;
    CHECK(f.degree() == expected);
    CHECK(std::abs(f.generator_value() - y) < 1e-12);
  }
}

TEST_CASE("small minimal polynomials") {
  CHECK(field_for(1).minpoly_string() == "x + 2");
  CHECK(field_for(4).minpoly() == std::vector<Integer>{-2, 0, 1});
  CHECK(field_for(5).minpoly() == std::vector<Integer>{-1, -1, 1});
  CHECK(field_for(6).minpoly() == std::vector<Integer>{-3, 0, 1});
}

TEST_CASE("fields are interned") {
  CHECK(&field_for(5) == &field_for(5));
  CHECK(&common_field(field_for(4), field_for(6)) == &field_for(12));
  CHECK(embeds_into(field_for(4), field_for(8)));
  CHECK_FALSE(embeds_into(field_for(4), field_for(6)));
}

TEST_CASE("golden ratio arithmetic") {
  const FieldSpec& f = field_for(5);
  const FieldElement y = FieldElement::generator(f);
  CHECK(y * y == y + FieldElement(f, 1L));
  const FieldElement inv = y.inverse();
  CHECK(inv == y - FieldElement(f, 1L));
  CHECK(std::abs(inv.to_double() - 2 / (1 + std::sqrt(5.0))) < 1e-12);
  CHECK_THROWS(FieldElement(f).inverse());
}

TEST_CASE("inverse and division round trip") {
  for (int M : {7, 8, 9, 12}) {
    const FieldSpec& f = field_for(M);
    const FieldElement y = FieldElement::generator(f);
    FieldElement x = y.pow(3) - y + FieldElement(f, Rational(2, 3));
    CHECK((x * x.inverse()) == FieldElement(f, 1L));
    CHECK((x / x) == FieldElement(f, 1L));
    CHECK(std::abs(x.to_double() - (std::pow(y.to_double(), 3) - y.to_double() + 2.0 / 3)) < 1e-9);
  }
}

TEST_CASE("embed_cos matches the numeric cosine") {
  const FieldSpec& f = field_for(60);
  for (int m : {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}) {
    CAPTURE(m);
    CHECK(std::abs(embed_cos(m, f).to_double() - 2 * std::cos(std::numbers::pi / m)) < 1e-9);
  }
  CHECK(embed_cos(0, f) == FieldElement(f, 2L));
}

TEST_CASE("embedding preserves values") {
  const FieldElement y5 = FieldElement::generator(field_for(5));
  const FieldElement z = embed(y5 * y5 + y5, field_for(10));
  CHECK(std::abs(z.to_double() - (y5 * y5 + y5).to_double()) < 1e-12);
  CHECK_THROWS_AS(embed(y5, field_for(4)), Error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(euler_phi(36) == 12);
}
