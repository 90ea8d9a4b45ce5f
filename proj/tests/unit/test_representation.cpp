#include "coxcoh/representation.hpp"
#include "doctest.h"

using namespace coxcoh;

TEST_CASE("reflection representations satisfy the Coxeter relations") {
  for (const char* name : {"A4", "B3", "D5", "E6", "F4", "H3", "I2(7)", "A2xB2"}) {
    CAPTURE(name);
    const Representation r = reflection_rep(parse_graph(name));
    CHECK_NOTHROW(verify_relations(r, 12));
    CHECK(r.dim() == parse_graph(name).size());
  }
}

TEST_CASE("fixed spaces of commuting reflections") {
  // k independent reflections fix a subspace of codimension k
  const CoxeterGraph g = parse_graph("D6");
  const Representation r = reflection_rep(g);
  for (std::size_t k = 0; k <= max_independent_size(g); ++k)
    for (const auto& t : independent_sets(g, k)) CHECK(invariants(r, t).dim() == g.size() - k);
}

TEST_CASE("group algebra invariants") {
  const CoxeterGraph g = type_a(3);
  const Representation reg = regular_rep(g);
  CHECK(reg.dim() == 24);
  const Representation nat = natural_rep(g);
  for (std::size_t k = 0; k <= 2; ++k)
    for (const auto& t : independent_sets(g, k)) {
      CHECK(invariants(reg, t).dim() == 24 >> k);
      CHECK(invariants(nat, t).dim() == 4 - k);
    }
}

TEST_CASE("specht modules have hook-length dimension") {
  const CoxeterGraph g = type_a(4);
  for (const auto& l : partitions(5)) {
    CAPTURE(partition_string(l));
    const Representation s = specht_rep(g, l);
    CHECK(s.dim() == hook_length_dimension(l));
    CHECK_NOTHROW(verify_relations(s));
  }
}

TEST_CASE("build_rep forms") {
  const CoxeterGraph g = type_a(2);
  CHECK(build_rep("trivial(3)", g).dim() == 3);
  CHECK(build_rep("zero", g).dim() == 0);
  CHECK(build_rep("tensor(2)", g).dim() == 8);
  CHECK(build_rep("specht(2,1)", g).dim() == 2);
  CHECK(build_rep("signtwist(reflection)", g).dim() == 2);
  CHECK(invariants(build_rep("sign", g), IndependentSet{{0}}).dim() == 0);
  for (const char* bad : {"refl", "trivial(0", "specht(2,2)", "tensor(x)", "signtwist(foo)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(build_rep(bad, g), ParseError);
  }
  CHECK_THROWS(build_rep("regular", parse_graph("B2")));
}

TEST_CASE("direct sum, restriction and external tensor") {
  const CoxeterGraph g = parse_graph("B3");
  const Representation r = reflection_rep(g);
  CHECK(direct_sum(r, trivial_rep(g)).dim() == 4);
  const Representation sub = restrict(r, induced(g, {1, 2}));
  CHECK(sub.graph().label(0, 1) == 4);
  const Representation ext = external_tensor(reflection_rep(parse_graph("A2")), reflection_rep(parse_graph("H3")));
  CHECK(ext.dim() == 6);
  CHECK(ext.field().M() == 5);
  CHECK_NOTHROW(verify_relations(ext));
}

TEST_CASE("infinite labels set the warning flag") {
  const Representation r = reflection_rep(parse_graph("custom;n=2;edges=1-2:inf"));
  CHECK(r.infinite_label_warning());
  CHECK_FALSE(reflection_rep(parse_graph("A2")).infinite_label_warning());
}
