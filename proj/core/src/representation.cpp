#include "coxcoh/representation.hpp"

#include <map>

namespace coxcoh {

Representation::Representation(CoxeterGraph graph, const FieldSpec& field, std::size_t dim,
                               std::vector<ExactMatrix> generators, std::string label, int relation_bound)
    : graph_(std::move(graph)), field_(&field), dim_(dim), gens_(std::move(generators)), label_(std::move(label)) {
  if (gens_.size() != graph_.size())
    throw Error("representation '" + label_ + "' has " + std::to_string(gens_.size()) + " matrices for " +
                std::to_string(graph_.size()) + " generators");
  for (const auto& m : gens_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw Error("generator matrix has the wrong shape");
    if (&m.field() != field_) throw Error("generator matrix over the wrong field");
  }
  verify_relations(*this, relation_bound);
}

Representation Representation::over(const FieldSpec& target) const {
  if (&target == field_) return *this;
  if (!embeds_into(*field_, target)) throw Error("field does not embed into the target field");
  std::vector<ExactMatrix> gens;
  for (const auto& m : gens_) gens.push_back(m.over(target));
  Representation out(graph_, target, dim_, std::move(gens), label_, 0);
  out.infinite_warning_ = infinite_warning_;
  return out;
}

void verify_relations(const Representation& rep, int bound) {
  const auto& g = rep.graph();
  const SparseMatrix id = SparseMatrix::identity(rep.field(), rep.dim());
  std::vector<SparseMatrix> gens;
  for (const auto& m : rep.generators()) gens.emplace_back(m);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (!(gens[s] * gens[s] == id))
      throw InternalError(rep.label() + ": " + generator_name(s) + " does not square to the identity");
  }
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      const int m = g.label(s, t);
      if (m == kInfiniteLabel || m > bound) continue;
      if (!(sparse_power(gens[s] * gens[t], static_cast<unsigned>(m)) == id))
        throw InternalError(rep.label() + ": braid relation of order " + std::to_string(m) + " fails for " +
                            generator_name(s) + ", " + generator_name(t));
    }
}

Representation reflection_rep(const CoxeterGraph& g) {
  const FieldSpec& f = field_for(g.field_modulus());
  std::vector<ExactMatrix> gens;
  for (std::size_t s = 0; s < g.size(); ++s) {
    ExactMatrix m = ExactMatrix::identity(f, g.size());
    m.set(s, s, -1L);
    for (std::size_t t = 0; t < g.size(); ++t)
      if (t != s) m.set(s, t, embed_cos(g.label(s, t), f));
    gens.push_back(std::move(m));
  }
  Representation rep(g, f, g.size(), std::move(gens), "reflection");
  rep.set_infinite_label_warning(g.has_infinite_label());
  return rep;
}

Representation trivial_rep(const CoxeterGraph& g, std::size_t d) {
  std::vector<ExactMatrix> gens(g.size(), ExactMatrix::identity(rationals(), d));
  return Representation(g, rationals(), d, std::move(gens), d == 1 ? "trivial" : "trivial(" + std::to_string(d) + ")");
}

Representation zero_rep(const CoxeterGraph& g) {
  std::vector<ExactMatrix> gens(g.size(), ExactMatrix(rationals(), 0, 0));
  return Representation(g, rationals(), 0, std::move(gens), "zero");
}

Representation sign_rep(const CoxeterGraph& g) {
  std::vector<ExactMatrix> gens(g.size(), ExactMatrix::from_rows(rationals(), {{-1}}));
  return Representation(g, rationals(), 1, std::move(gens), "sign");
}

bool is_type_a(const CoxeterGraph& g) { return g == type_a(g.size()); }

namespace {

void require_type_a(const CoxeterGraph& g, const std::string& what) {
  if (!is_type_a(g)) throw Error(what + " needs a type A graph, got " + g.display_name());
}

ExactMatrix permutation_matrix(std::size_t dim, const std::vector<std::size_t>& image) {
  ExactMatrix m(rationals(), dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.entry(image[j], j)[0] = 1;
  return m;
}

// Left multiplication by s_k on the lexicographically ordered group basis.
std::vector<SparseMatrix> left_multiplication(std::size_t n) {
  const auto elems = all_permutations(n);
  std::vector<SparseMatrix> gens;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Permutation s = simple_transposition(n, k);
    std::vector<std::size_t> image(elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j) image[j] = lex_index(compose(s, elems[j]));
    gens.push_back(SparseMatrix::permutation(image));
  }
  return gens;
}

}  // namespace

Representation regular_rep(const CoxeterGraph& g) {
  require_type_a(g, "the regular representation");
  const std::size_t n = g.size() + 1;
  std::vector<ExactMatrix> gens;
  for (const auto& m : left_multiplication(n)) gens.push_back(m.to_dense());
  return Representation(g, rationals(), factorial(n), std::move(gens), "regular");
}

Representation natural_rep(const CoxeterGraph& g) {
  require_type_a(g, "the natural representation");
  const std::size_t n = g.size() + 1;
  std::vector<ExactMatrix> gens;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<std::size_t> image(n);
    for (std::size_t j = 0; j < n; ++j) image[j] = j;
    std::swap(image[k], image[k + 1]);
    gens.push_back(permutation_matrix(n, image));
  }
  return Representation(g, rationals(), n, std::move(gens), "natural");
}

Representation tensor_power_rep(const CoxeterGraph& g, std::size_t m) {
  require_type_a(g, "a tensor power");
  if (m < 1) throw Error("tensor power needs m >= 1");
  const std::size_t n = g.size() + 1;
  std::size_t dim = 1;
  for (std::size_t a = 0; a < n; ++a) dim *= m;
  std::vector<std::size_t> weight(n, 1);
  for (std::size_t a = n - 1; a-- > 0;) weight[a] = weight[a + 1] * m;
  std::vector<ExactMatrix> gens;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<std::size_t> image(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const std::size_t ik = idx / weight[k] % m;
      const std::size_t ik1 = idx / weight[k + 1] % m;
      image[idx] = idx - ik * weight[k] - ik1 * weight[k + 1] + ik1 * weight[k] + ik * weight[k + 1];
    }
    gens.push_back(permutation_matrix(dim, image));
  }
  return Representation(g, rationals(), dim, std::move(gens), "tensor(" + std::to_string(m) + ")");
}

Representation specht_rep(const CoxeterGraph& g, const Partition& lambda) {
  require_type_a(g, "a Specht module");
  const std::size_t n = g.size() + 1;
  if (n > 7) throw Error("Specht modules are limited to n <= 7");
  if (!is_partition_of(lambda, static_cast<int>(n)))
    throw Error(partition_string(lambda) + " is not a partition of " + std::to_string(n));

  // Row-filled tableau: row and column of each entry.
  std::vector<int> row_of(n), col_of(n);
  {
    std::size_t e = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r)
      for (int c = 0; c < lambda[r]; ++c, ++e) {
        row_of[e] = static_cast<int>(r);
        col_of[e] = c;
      }
  }
  const auto elems = all_permutations(n);
  std::vector<const Permutation*> rows, cols;
  for (const auto& p : elems) {
    bool keeps_rows = true, keeps_cols = true;
    for (std::size_t i = 0; i < n; ++i) {
      keeps_rows = keeps_rows && row_of[static_cast<std::size_t>(p[i])] == row_of[i];
      keeps_cols = keeps_cols && col_of[static_cast<std::size_t>(p[i])] == col_of[i];
    }
    if (keeps_rows) rows.push_back(&p);
    if (keeps_cols) cols.push_back(&p);
  }
  // c = (sum of row permutations)(signed sum of column permutations).
  std::map<std::size_t, long> c;
  for (const auto* p : rows)
    for (const auto* q : cols) c[lex_index(compose(*p, *q))] += sign(*q);

  // Row g of the transposed right multiplication by c: e_g c = sum_h c_h e_{g h}.
  std::vector<std::map<std::size_t, long>> image(elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j)
    for (const auto& [h, coef] : c)
      if (coef != 0) image[j][lex_index(compose(elems[j], elems[h]))] += coef;
  SparseMatrix right(rationals(), elems.size(), elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j)
    for (const auto& [i, coef] : image[j])
      if (coef != 0) right.push(i, j, Rational(coef));
  const Subspace ideal = Subspace::span_of(right);

  std::vector<ExactMatrix> gens;
  for (const auto& m : left_multiplication(n)) gens.push_back(ideal.coordinates(m * ideal.basis()));
  return Representation(g, rationals(), ideal.dim(), std::move(gens), "specht" + partition_string(lambda));
}

Representation external_tensor(const Representation& r1, const Representation& r2) {
  const FieldSpec& f = common_field(r1.field(), r2.field());
  const Representation a = r1.over(f), b = r2.over(f);
  const ExactMatrix i1 = ExactMatrix::identity(f, a.dim()), i2 = ExactMatrix::identity(f, b.dim());
  std::vector<ExactMatrix> gens;
  for (const auto& m : a.generators()) gens.push_back(kron(m, i2));
  for (const auto& m : b.generators()) gens.push_back(kron(i1, m));
  Representation out(product(a.graph(), b.graph()), f, a.dim() * b.dim(), std::move(gens),
                     a.label() + " (x) " + b.label());
  out.set_infinite_label_warning(a.infinite_label_warning() || b.infinite_label_warning());
  return out;
}

Representation restrict(const Representation& rep, const InducedGraph& sub) {
  if (!(induced(rep.graph(), sub.to_parent).graph == sub.graph))
    throw Error("restrict: not an induced subgraph of " + rep.graph().display_name());
  std::vector<ExactMatrix> gens;
  for (std::size_t v : sub.to_parent) gens.push_back(rep.generator(v));
  return Representation(sub.graph, rep.field(), rep.dim(), std::move(gens), rep.label() + "|", 0);
}

Representation sign_twist(const Representation& rep) {
  std::vector<ExactMatrix> gens;
  for (const auto& m : rep.generators()) gens.push_back(m.scaled(Rational(-1)));
  return Representation(rep.graph(), rep.field(), rep.dim(), std::move(gens), rep.label() + " (x) sgn");
}

Representation direct_sum(const Representation& r1, const Representation& r2) {
  if (!(r1.graph() == r2.graph())) throw Error("direct_sum: representations of different groups");
  const FieldSpec& f = common_field(r1.field(), r2.field());
  const Representation a = r1.over(f), b = r2.over(f);
  std::vector<ExactMatrix> gens;
  for (std::size_t s = 0; s < a.graph().size(); ++s) gens.push_back(direct_sum(a.generator(s), b.generator(s)));
  return Representation(a.graph(), f, a.dim() + b.dim(), std::move(gens), a.label() + " + " + b.label());
}

InvariantBasis invariants(const Representation& rep, const IndependentSet& t, bool cross_check) {
  if (!is_independent(rep.graph(), t.members))
    throw Error(t.to_string() + " is not an independent set of " + rep.graph().display_name());
  const FieldSpec& f = rep.field();
  const std::size_t d = rep.dim();
  if (t.members.empty()) return {t, Subspace::whole(f, d)};

  const SparseMatrix id = SparseMatrix::identity(f, d);
  std::vector<SparseMatrix> gens, blocks;
  for (std::size_t s : t.members) {
    gens.emplace_back(rep.generator(s));
    blocks.push_back(gens.back() - id);
  }
  std::vector<const SparseMatrix*> ptrs;
  for (const auto& b : blocks) ptrs.push_back(&b);
  InvariantBasis out{t, Subspace::kernel_of(sparse_vstack(ptrs))};

  if (cross_check) {
    // P = prod (I + M_s)/2 is idempotent, so rank P = trace P.
    SparseMatrix p = id;
    for (const auto& m : gens) p = p * (id + m);
    p = p.scaled(Rational(1, 1L << t.members.size()));
    for (const auto& m : gens)
      if (!(m * p == p)) throw InternalError("averaging projector is not invariant for " + t.to_string());
    if (!(p * p == p)) throw InternalError("averaging projector is not idempotent for " + t.to_string());
    if (!(p * out.columns() == out.columns()))
      throw InternalError("averaging projector does not fix the kernel basis for " + t.to_string());
    if (!(p.trace() == FieldElement(f, static_cast<long>(out.dim()))))
      throw InternalError("projector image and kernel differ in dimension for " + t.to_string());
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// "name(arg)" -> {name, arg}; no parentheses -> {text, ""}.
std::pair<std::string, std::string> split_call(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return {text, ""};
  if (text.back() != ')') throw ParseError("unbalanced parentheses in '" + text + "'");
  return {text.substr(0, open), text.substr(open + 1, text.size() - open - 2)};
}

std::size_t parse_count(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer in " + context + ", got '" + s + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

Representation build_rep(const std::string& kind, const CoxeterGraph& g) {
  const auto [name, arg] = split_call(kind);
  auto no_arg = [&] {
    if (kind.find('(') != std::string::npos) throw ParseError("'" + name + "' takes no argument");
  };
  if (name == "reflection") {
    no_arg();
    return reflection_rep(g);
  }
  if (name == "trivial") return trivial_rep(g, arg.empty() && kind == "trivial" ? 1 : parse_count(arg, kind));
  if (name == "zero") {
    no_arg();
    return zero_rep(g);
  }
  if (name == "sign") {
    no_arg();
    return sign_rep(g);
  }
  if (name == "regular") {
    no_arg();
    return regular_rep(g);
  }
  if (name == "natural") {
    no_arg();
    return natural_rep(g);
  }
  if (name == "tensor") {
    const std::size_t m = parse_count(arg, kind);
    if (m < 1) throw ParseError("tensor(m) needs m >= 1");
    return tensor_power_rep(g, m);
  }
  if (name == "specht") {
    Partition lambda;
    std::size_t start = 0;
    while (start <= arg.size()) {
      const auto comma = arg.find(',', start);
      const auto piece = arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      lambda.push_back(static_cast<int>(parse_count(piece, kind)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!is_partition_of(lambda, static_cast<int>(g.size() + 1)))
      throw ParseError(partition_string(lambda) + " is not a partition of " + std::to_string(g.size() + 1));
    return specht_rep(g, lambda);
  }
  if (name == "signtwist") {
    if (arg.empty()) throw ParseError("signtwist needs an inner representation");
    return sign_twist(build_rep(arg, g));
  }
  throw ParseError("unknown representation kind '" + kind + "'");
}

}  // namespace coxcoh
