#include "coxcoh/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace coxcoh {

std::size_t GradedComplex::dim(int k) const {
  auto it = dims.find(k);
  return it == dims.end() ? 0 : it->second;
}

ExactMatrix GradedComplex::differential(int k) const {
  auto it = differentials.find(k);
  if (it != differentials.end()) return it->second;
  return ExactMatrix(*field, dim(target(k)), dim(k));
}

void GradedComplex::verify() const {
  for (const auto& [k, d] : differentials) {
    if (d.rows() != dim(target(k)) || d.cols() != dim(k))
      throw InternalError("differential out of degree " + std::to_string(k) + " has shape " +
                          std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                          std::to_string(dim(target(k))) + "x" + std::to_string(dim(k)));
    if (&d.field() != field) throw InternalError("differential over the wrong field");
  }
  for (const auto& [k, d] : differentials) {
    auto next = differentials.find(target(k));
    if (next == differentials.end()) continue;
    if (!(next->second * d).is_zero())
      throw InternalError("d^2 != 0 on degree " + std::to_string(k));
  }
}

std::size_t CohomologyReport::h(int k) const {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == k) return h_dims[i];
  return 0;
}

std::size_t CohomologyReport::total() const { return std::accumulate(h_dims.begin(), h_dims.end(), std::size_t{0}); }

CohomologyReport cohomology(const GradedComplex& c, const RankOptions& options, std::optional<std::vector<int>> degrees) {
  CohomologyReport r;
  if (degrees) {
    r.degrees = *degrees;
  } else {
    for (int k = c.min_degree; k <= c.max_degree; ++k) r.degrees.push_back(k);
  }
  std::map<int, RankResult> ranks;
  bool any_exact = false, any_modular = false;
  auto rank_out = [&](int k) -> std::size_t {
    if (c.dim(k) == 0 || c.dim(c.target(k)) == 0 || !c.has_differential(k)) return 0;
    auto it = ranks.find(k);
    if (it == ranks.end()) {
      it = ranks.emplace(k, rank(c.differentials.at(k), options)).first;
      (it->second.probabilistic ? any_modular : any_exact) = true;
      if (!it->second.primes_agreed) r.primes_agreed = false;
    }
    return it->second.rank;
  };
  const int into = c.orientation == Orientation::cochain ? -1 : 1;
  for (int k : r.degrees) {
    const std::size_t dim = c.dim(k);
    const std::size_t out = rank_out(k);
    const std::size_t in = rank_out(k + into);
    if (out + in > dim)
      throw InternalError("negative homology dimension in degree " + std::to_string(k) + " (dim " +
                          std::to_string(dim) + ", ranks " + std::to_string(out) + " and " + std::to_string(in) + ")");
    r.space_dims.push_back(dim);
    r.h_dims.push_back(dim - out - in);
    const long sgn = (k % 2 == 0) ? 1 : -1;
    r.euler_spaces += sgn * static_cast<long>(dim);
    r.euler += sgn * static_cast<long>(dim - out - in);
  }
  r.probabilistic = any_modular;
  r.mode = any_modular ? (any_exact ? "mixed" : "modular") : "exact";
  return r;
}

// ---------------------------------------------------------------------------

const ComplexBlock* CoxeterComplex::find_block(const IndependentSet& t) const {
  auto it = blocks.find(static_cast<int>(t.size()));
  if (it == blocks.end()) return nullptr;
  const auto& list = it->second;
  auto pos = std::lower_bound(list.begin(), list.end(), t,
                              [](const ComplexBlock& b, const IndependentSet& x) { return b.t < x; });
  return (pos != list.end() && pos->t == t) ? &*pos : nullptr;
}

std::vector<int> CoxeterComplex::valid_degrees() const {
  std::vector<int> out;
  for (int k = valid_min; k <= valid_max; ++k) out.push_back(k);
  return out;
}

CoxeterComplex build_coxeter_complex(const Representation& rep, const BuildOptions& options) {
  return build_coxeter_complex(std::make_shared<const Representation>(rep), options);
}

CoxeterComplex build_coxeter_complex(std::shared_ptr<const Representation> rep, const BuildOptions& options) {
  CoxeterComplex x;
  x.rep = std::move(rep);
  const CoxeterGraph& g = x.rep->graph();
  const std::size_t n = g.size();

  x.order.resize(n);
  std::iota(x.order.begin(), x.order.end(), std::size_t{0});
  if (options.order) {
    x.order = *options.order;
    auto sorted = x.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted.size() != n || sorted[i] != i) throw Error("generator order is not a permutation of S");
  }
  x.rank_of.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) x.rank_of[x.order[r]] = r;

  const int top = static_cast<int>(max_independent_size(g));
  x.valid_min = 0;
  x.valid_max = top;
  if (options.window) {
    x.valid_min = std::max(0, options.window->first);
    x.valid_max = std::min(top, options.window->second);
  }
  const int lo = std::max(0, x.valid_min - 1);
  const int hi = std::min(top, x.valid_max + 1);

  GradedComplex& c = x.complex;
  c.field = &x.rep->field();
  c.orientation = Orientation::cochain;
  c.min_degree = lo;
  c.max_degree = hi;
  for (int k = lo; k <= hi; ++k) {
    std::size_t offset = 0;
    auto& list = x.blocks[k];
    for (auto& t : independent_sets(g, static_cast<std::size_t>(k))) {
      InvariantBasis inv = invariants(*x.rep, t, options.cross_check_invariants);
      const std::size_t d = inv.dim();
      list.push_back({std::move(t), std::move(inv), offset});
      offset += d;
    }
    c.dims[k] = offset;
  }

  std::vector<SparseMatrix> gens;
  for (const auto& m : x.rep->generators()) gens.emplace_back(m);

  for (int k = lo; k < hi; ++k) {
    ExactMatrix d(*c.field, c.dim(k + 1), c.dim(k));
    for (const auto& b : x.blocks[k]) {
      if (b.invariants.dim() == 0) continue;
      const ExactMatrix& basis = b.invariants.columns();
      for (std::size_t s = 0; s < n; ++s) {
        if (b.t.contains(s)) continue;
        const IndependentSet target = b.t.with(s);
        if (!is_independent(g, target.members)) continue;
        const ComplexBlock* tb = x.find_block(target);
        if (tb == nullptr) throw InternalError("missing block " + target.to_string());
        if (tb->invariants.dim() == 0) continue;
        const ExactMatrix w = basis + gens[s] * basis;
        ExactMatrix coords;
        try {
          coords = tb->invariants.space.coordinates(w);
        } catch (const InternalError&) {
          throw InternalError("v + " + generator_name(s) + "(v) is not " + target.to_string() +
                              "-invariant for v in the block " + b.t.to_string());
        }
        std::size_t below = 0;
        for (std::size_t t : b.t.members)
          if (x.rank_of[t] < x.rank_of[s]) ++below;
        d.set_block(tb->offset, b.offset, below % 2 ? coords.scaled(Rational(-1)) : coords);
      }
    }
    c.differentials.emplace(k, std::move(d));
  }
  c.verify();
  return x;
}

CohomologyReport coxeter_cohomology(const CoxeterComplex& x, const RankOptions& options) {
  CohomologyReport r = cohomology(x.complex, options, x.valid_degrees());
  for (int k : r.degrees) {
    std::vector<std::pair<std::string, std::size_t>> list;
    auto it = x.blocks.find(k);
    if (it != x.blocks.end())
      for (const auto& b : it->second) list.emplace_back(b.t.to_string(), b.invariants.dim());
    r.blocks.push_back(std::move(list));
  }
  return r;
}

int reordering_sign(const IndependentSet& t, const std::vector<std::size_t>& from_rank,
                    const std::vector<std::size_t>& to_rank) {
  int sign = 1;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      const std::size_t u = t.members[a], v = t.members[b];
      if ((from_rank[u] < from_rank[v]) != (to_rank[u] < to_rank[v])) sign = -sign;
    }
  return sign;
}

ChainMapCheck reordering_isomorphism(const CoxeterComplex& natural, const CoxeterComplex& reordered) {
  std::map<int, ExactMatrix> maps;
  const FieldSpec& f = *natural.complex.field;
  for (const auto& [k, list] : natural.blocks) {
    auto it = reordered.blocks.find(k);
    if (it == reordered.blocks.end() || it->second.size() != list.size())
      return {false, "block structure differs in degree " + std::to_string(k)};
    ExactMatrix e(f, reordered.complex.dim(k), natural.complex.dim(k));
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& a = list[i];
      const auto& b = it->second[i];
      if (!(a.t == b.t) || !(a.invariants.columns() == b.invariants.columns()))
        return {false, "invariant bases differ for " + a.t.to_string()};
      const int eps = reordering_sign(a.t, natural.rank_of, reordered.rank_of);
      for (std::size_t j = 0; j < a.invariants.dim(); ++j) e.set(b.offset + j, a.offset + j, static_cast<long>(eps));
    }
    maps.emplace(k, std::move(e));
  }
  auto check = check_chain_map(natural.complex, reordered.complex, maps, [](int k) { return k; });
  if (!check.ok) return check;
  return check_bijective(maps);
}

GradedComplex simplicial_reduced_complex(const CoxeterGraph& g, std::size_t d) {
  GradedComplex c;
  c.orientation = Orientation::cochain;
  const int top = static_cast<int>(max_independent_size(g));
  c.min_degree = 0;
  c.max_degree = top;
  std::vector<std::vector<IndependentSet>> simplices;
  for (int k = 0; k <= top; ++k) {
    simplices.push_back(independent_sets(g, static_cast<std::size_t>(k)));
    c.dims[k] = simplices.back().size() * d;
  }
  for (int k = 0; k < top; ++k) {
    const auto& next = simplices[static_cast<std::size_t>(k + 1)];
    ExactMatrix m(rationals(), c.dims[k + 1], c.dims[k]);
    const auto& here = simplices[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < here.size(); ++i)
      for (std::size_t s = 0; s < g.size(); ++s) {
        if (here[i].contains(s)) continue;
        const IndependentSet face = here[i].with(s);
        auto pos = std::lower_bound(next.begin(), next.end(), face);
        if (pos == next.end() || !(*pos == face)) continue;
        long below = 0;
        for (std::size_t t : here[i].members) below += t < s ? 1 : 0;
        const std::size_t j = static_cast<std::size_t>(pos - next.begin());
        for (std::size_t q = 0; q < d; ++q) m.set(j * d + q, i * d + q, below % 2 ? -1L : 1L);
      }
    c.differentials.emplace(k, std::move(m));
  }
  c.verify();
  return c;
}

ChainMapCheck geometric_isomorphism(const CoxeterComplex& trivial_complex, const GradedComplex& simplicial) {
  const std::size_t d = trivial_complex.rep->dim();
  std::map<int, ExactMatrix> maps;
  for (const auto& [k, list] : trivial_complex.blocks) {
    ExactMatrix psi(rationals(), simplicial.dim(k), trivial_complex.complex.dim(k));
    const Rational scale(1, 1L << k);
    for (std::size_t i = 0; i < list.size(); ++i)
      psi.set_block(i * d, list[i].offset, list[i].invariants.columns().scaled(scale));
    maps.emplace(k, std::move(psi));
  }
  auto check = check_chain_map(trivial_complex.complex, simplicial, maps, [](int k) { return k; });
  if (!check.ok) return check;
  return check_bijective(maps);
}

ChainMapCheck check_chain_map(const GradedComplex& src, const GradedComplex& dst, const std::map<int, ExactMatrix>& maps,
                              const std::function<int(int)>& degree_map, int sign) {
  auto map_at = [&](int k) {
    auto it = maps.find(k);
    if (it != maps.end()) return it->second;
    return ExactMatrix(*dst.field, dst.dim(degree_map(k)), src.dim(k));
  };
  for (int k = src.min_degree; k <= src.max_degree; ++k) {
    const int k2 = src.target(k);
    const int j = degree_map(k), j2 = degree_map(k2);
    if (dst.target(j) != j2)
      return {false, "degree map does not match the differentials at degree " + std::to_string(k)};
    const ExactMatrix fk = map_at(k);
    if (fk.rows() != dst.dim(j) || fk.cols() != src.dim(k))
      return {false, "map in degree " + std::to_string(k) + " has the wrong shape"};
    const ExactMatrix lhs = map_at(k2) * src.differential(k);
    ExactMatrix rhs = dst.differential(j) * fk;
    if (sign < 0) rhs = rhs.scaled(Rational(-1));
    if (!(lhs == rhs)) return {false, "chain map condition fails out of degree " + std::to_string(k)};
  }
  return {true, "commutes with the differentials"};
}

ChainMapCheck check_bijective(const std::map<int, ExactMatrix>& maps, const RankOptions& options) {
  for (const auto& [k, m] : maps) {
    if (m.rows() != m.cols())
      return {false, "map in degree " + std::to_string(k) + " is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols())};
    if (rank(m, options).rank != m.rows()) return {false, "map in degree " + std::to_string(k) + " is singular"};
  }
  return {true, "bijective chain map"};
}

}  // namespace coxcoh
