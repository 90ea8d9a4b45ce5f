#include <map>

#include "coxcoh/cochain.hpp"
#include "doctest.h"
#include "support/oracle.hpp"

using namespace coxcoh;

namespace {

// Reduced simplicial cohomology of I(S) over Q by direct enumeration:
// result[k] = dim H~^{k-1}, k = number of vertices of a face.
std::vector<std::size_t> independence_cohomology(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  std::map<std::size_t, std::vector<std::size_t>> faces;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && g.adjacent(i, j)) ok = false;
    if (ok) faces[static_cast<std::size_t>(__builtin_popcountll(mask))].push_back(mask);
  }
  const std::size_t top = faces.rbegin()->first;
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t k = 0; k < top; ++k) {
    const auto& src = faces[k];
    const auto& dst = faces[k + 1];
    oracle::QMatrix d(dst.size(), std::vector<mpq_class>(src.size()));
    for (std::size_t a = 0; a < src.size(); ++a)
      for (std::size_t b = 0; b < dst.size(); ++b) {
        const std::size_t extra = dst[b] & ~src[a];
        if ((dst[b] & src[a]) != src[a] || __builtin_popcountll(extra) != 1) continue;
        const int below = __builtin_popcountll(src[a] & (extra - 1));
        d[b][a] = below % 2 ? -1 : 1;
      }
    ranks[k + 1] = oracle::rank(d);
  }
  std::vector<std::size_t> h(top + 1);
  for (std::size_t k = 0; k <= top; ++k) h[k] = faces[k].size() - ranks[k + 1] - ranks[k];
  return h;
}

std::vector<std::size_t> h_of(const std::string& graph, const std::string& rep) {
  const CoxeterGraph g = parse_graph(graph);
  return coxeter_cohomology(build_coxeter_complex(build_rep(rep, g))).h_dims;
}

}  // namespace

TEST_CASE("simplicial complex of I(S) agrees with direct enumeration") {
  for (const char* name : {"A1", "A4", "A7", "B5", "D5", "E7", "H4", "A2xA3", "custom;n=4;edges=1-2:3,2-3:3,3-4:3,4-1:3"}) {
    CAPTURE(name);
    const CoxeterGraph g = parse_graph(name);
    CHECK(cohomology(simplicial_reduced_complex(g)).h_dims == independence_cohomology(g));
  }
}

TEST_CASE("trivial coefficients give the independence complex") {
  for (const char* name : {"A5", "D6", "E6", "F4"}) {
    CAPTURE(name);
    const CoxeterGraph g = parse_graph(name);
    const CoxeterComplex x = build_coxeter_complex(trivial_rep(g));
    CHECK(coxeter_cohomology(x).h_dims == independence_cohomology(g));
    CHECK(geometric_isomorphism(x, simplicial_reduced_complex(g)).ok);
  }
}

TEST_CASE("rank one and two reflection cases") {
  CHECK(h_of("A1", "reflection") == std::vector<std::size_t>{1, 0});
  for (const char* name : {"A2", "B2", "I2(6)", "H2", "I2(9)"}) {
    CAPTURE(name);
    CHECK(h_of(name, "reflection") == std::vector<std::size_t>{0, 0});
  }
  for (const char* name : {"A3", "B3", "H3"}) {
    CAPTURE(name);
    CHECK(h_of(name, "reflection") == std::vector<std::size_t>{0, 2, 0});
  }
}

TEST_CASE("space dimensions are sums of invariant dimensions") {
  const CoxeterGraph g = parse_graph("B4");
  const Representation r = reflection_rep(g);
  const CoxeterComplex x = build_coxeter_complex(r);
  CHECK_NOTHROW(x.complex.verify());
  for (std::size_t k = 0; k <= max_independent_size(g); ++k) {
    std::size_t sum = 0;
    for (const auto& t : independent_sets(g, k)) sum += invariants(r, t).dim();
    CHECK(x.complex.dim(static_cast<int>(k)) == sum);
  }
}

TEST_CASE("reordering the generators gives an isomorphic complex") {
  const Representation r = reflection_rep(parse_graph("D5"));
  const CoxeterComplex a = build_coxeter_complex(r);
  BuildOptions o;
  o.order = std::vector<std::size_t>{3, 0, 4, 2, 1};
  const CoxeterComplex b = build_coxeter_complex(r, o);
  CHECK(reordering_isomorphism(a, b).ok);
  CHECK(coxeter_cohomology(a).h_dims == coxeter_cohomology(b).h_dims);
}

TEST_CASE("windowed builds agree with full builds") {
  const Representation r = reflection_rep(parse_graph("A8"));
  const auto full = coxeter_cohomology(build_coxeter_complex(r));
  BuildOptions o;
  o.window = std::make_pair(2, 3);
  const CoxeterComplex w = build_coxeter_complex(r, o);
  const auto part = coxeter_cohomology(w);
  REQUIRE(part.degrees == std::vector<int>{2, 3});
  CHECK(part.h_dims[0] == full.h(2));
  CHECK(part.h_dims[1] == full.h(3));
}

TEST_CASE("a broken differential is caught") {
  GradedComplex c;
  c.min_degree = 0;
  c.max_degree = 2;
  c.dims = {{0, 1}, {1, 1}, {2, 1}};
  c.differentials[0] = ExactMatrix::from_rows(rationals(), {{1}});
  c.differentials[1] = ExactMatrix::from_rows(rationals(), {{1}});
  CHECK_THROWS_AS(c.verify(), InternalError);
  c.differentials[1] = ExactMatrix::from_rows(rationals(), {{1, 2}});
  CHECK_THROWS_AS(c.verify(), InternalError);
}

TEST_CASE("modular and exact cohomology agree on rational complexes") {
  const Representation r = regular_rep(type_a(3));
  const CoxeterComplex x = build_coxeter_complex(r);
  const auto e = coxeter_cohomology(x, {RankMode::exact});
  const auto m = coxeter_cohomology(x, {RankMode::modular, 5});
  CHECK(e.h_dims == m.h_dims);
  CHECK(m.probabilistic);
  CHECK(m.primes_agreed);
  CHECK(e.euler == e.euler_spaces);
}
