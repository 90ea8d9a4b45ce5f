#include "coxcoh/theorems.hpp"
#include "doctest.h"

using namespace coxcoh;

namespace {

using Dims = std::vector<std::size_t>;

// dim H^i(A_n, trivial) = 1 iff n is 3i-1 or 3i
Dims trivial_formula(int n) {
  Dims d(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i)
    if (n == 3 * i - 1 || n == 3 * i) d[static_cast<std::size_t>(i)] = 1;
  return d;
}

}  // namespace

TEST_CASE("trivial table against the stated formula") {
  for (int n = 1; n <= 9; ++n) CHECK(expected_trivial_a(n, n) == trivial_formula(n));
  for (const auto& t : verify_trivial_table(9)) {
    CAPTURE(t.group);
    CHECK(t.verdict == Verdict::exact_match);
    CHECK(t.euler == t.euler_spaces);
  }
  CHECK_THROWS(verify_trivial_table(0));
}

TEST_CASE("printed reflection table entries") {
  CHECK(expected_reflection("A5", 5) == Dims{0, 0, 1, 0, 0, 0});
  CHECK(expected_reflection("B6", 6) == Dims{0, 0, 4, 0, 0, 0, 0});
  CHECK(expected_reflection("H4", 4) == Dims{0, 2, 0, 0, 0});
  CHECK(expected_reflection("I2(7)", 2) == Dims{0, 0, 0});
  CHECK(expected_reflection("D4", 4) == Dims{3, 0, 0, 0, 0});
  CHECK(expected_reflection("D5", 5) == Dims{1, 0, 0, 0, 0, 0});
  CHECK(expected_reflection("D6", 6) == Dims{0, 3, 0, 0, 0, 0, 0});
  CHECK(expected_reflection("D7", 7) == Dims{0, 5, 0, 0, 0, 0, 0, 0});
  CHECK(expected_reflection("D8", 8) == Dims{0, 2, 0, 0, 0, 0, 0, 0, 0});
  CHECK(expected_reflection("E6", 6) == Dims{0, 0, 1, 0, 0, 0, 0});
  CHECK(expected_reflection("E7", 7) == Dims{0, 0, 2, 0, 0, 0, 0, 0});
  CHECK(expected_reflection("E8", 8) == Dims{0, 1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS(expected_reflection("Z3", 3));
}

TEST_CASE("table verdicts") {
  CHECK(compare_tables("x", {0, 2, 0}, {0, 2, 0}).verdict == Verdict::exact_match);
  const TableComparison s = compare_tables("x", {3, 0, 0}, {0, 3, 0});
  CHECK(s.verdict == Verdict::degree_shift);
  CHECK(s.shift == 1);
  CHECK(compare_tables("x", {0, 2, 0}, {0, 3, 0}).verdict == Verdict::mismatch);
  CHECK(to_string(Verdict::degree_shift) == "match-with-degree-shift");
  CHECK(parse_verdict("exact-match") == Verdict::exact_match);
}

TEST_CASE("reflection table over small groups") {
  for (const auto& t : verify_reflection_table({"A4", "B3", "H3", "F4", "I2(5)", "D4", "D5"})) {
    CAPTURE(t.group);
    CHECK(t.euler == t.euler_spaces);
    if (t.group[0] == 'D') {
      CHECK(t.verdict == Verdict::degree_shift);
      CHECK(t.shift == 1);
    } else {
      CHECK(t.verdict == Verdict::exact_match);
    }
  }
}

TEST_CASE("convolution") {
  CHECK(convolve({1, 2}, {3, 0, 1}) == Dims{3, 6, 1, 2});
  CHECK(convolve({}, {1}) == Dims{});
}

TEST_CASE("structural checks") {
  CHECK(kunneth_check({"A2", "reflection"}, {"A3", "reflection"}).passed);
  CHECK(kunneth_check({"B2", "reflection"}, {"A1", "trivial"}).passed);
  CHECK(split_additivity_check("A3", "reflection", "trivial").passed);
  for (const auto& c : geometric_check("D5")) CHECK(c.passed);
  const LesReport les = les_check({"A5", "reflection"}, 2);
  CHECK(les.passed());
  for (const auto& c : les.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  CHECK(default_kunneth_cases().size() == 10);
  CHECK(default_split_cases().size() == 5);
  CHECK(default_les_cases().size() == 8);
  CHECK(default_reflection_groups().size() == 30);
}

TEST_CASE("far representation is the restriction to V^s") {
  const CoxeterGraph g = parse_graph("A5");
  const Representation r = reflection_rep(g);
  const ParabolicDeletion p = parabolic_deletions(g, 0);
  const Representation f = far_representation(r, 0, p.far);
  CHECK(f.dim() == 4);
  CHECK(f.graph().size() == 3);
  CHECK_NOTHROW(verify_relations(f));
}
