#include "coxcoh/theorems.hpp"

#include <algorithm>
#include <memory>
#include <regex>

namespace coxcoh {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exact_match: return "exact-match";
    case Verdict::degree_shift: return "match-with-degree-shift";
    case Verdict::mismatch: return "dimension-mismatch";
  }
  return "dimension-mismatch";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "exact-match") return Verdict::exact_match;
  if (text == "match-with-degree-shift") return Verdict::degree_shift;
  if (text == "dimension-mismatch") return Verdict::mismatch;
  throw ParseError("unknown verdict '" + text + "'");
}

namespace {

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Computed equals expected moved up by k degrees (k may be negative).
bool shifted_equal(const std::vector<std::size_t>& expected, const std::vector<std::size_t>& computed, int k) {
  const long n = static_cast<long>(std::max(expected.size(), computed.size())) + std::abs(k);
  for (long i = -std::abs(k); i < n; ++i) {
    const long j = i - k;
    const std::size_t c = (i >= 0 && i < static_cast<long>(computed.size())) ? computed[static_cast<std::size_t>(i)] : 0;
    const std::size_t e = (j >= 0 && j < static_cast<long>(expected.size())) ? expected[static_cast<std::size_t>(j)] : 0;
    if (c != e) return false;
  }
  return true;
}

struct FamilyMember {
  char family;
  int rank;
};

FamilyMember parse_family(const std::string& group) {
  static const std::regex plain(R"(([ABCDEFH])([0-9]+))");
  static const std::regex dihedral(R"(I2\(([0-9]+)\))");
  std::smatch m;
  if (std::regex_match(group, m, plain)) {
    char f = m[1].str()[0];
    if (f == 'C') f = 'B';
    return {f, std::stoi(m[2].str())};
  }
  if (std::regex_match(group, m, dihedral)) return {'I', 2};
  throw Error("unsupported group '" + group + "': expected a named finite family member");
}

}  // namespace

TableComparison compare_tables(std::string group, std::vector<std::size_t> expected, std::vector<std::size_t> computed) {
  TableComparison t;
  t.group = std::move(group);
  t.expected = std::move(expected);
  t.computed = std::move(computed);
  const auto e = trimmed(t.expected), c = trimmed(t.computed);
  if (e == c) {
    t.verdict = Verdict::exact_match;
    return t;
  }
  const int span = static_cast<int>(std::max(t.expected.size(), t.computed.size()));
  for (int k = 1; k <= span; ++k)
    for (int signed_k : {k, -k})
      if (shifted_equal(t.expected, t.computed, signed_k)) {
        t.verdict = Verdict::degree_shift;
        t.shift = signed_k;
        return t;
      }
  t.verdict = Verdict::mismatch;
  return t;
}

std::vector<std::size_t> expected_trivial_a(int n, int top) {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  for (int i = 0; i <= top; ++i)
    if (n == 3 * i - 1 || n == 3 * i) out[static_cast<std::size_t>(i)] = 1;
  return out;
}

std::vector<std::size_t> expected_reflection(const std::string& group, int top) {
  const FamilyMember f = parse_family(group);
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  auto put = [&](int i, int dim) {
    if (i < 0 || dim <= 0) return;
    if (i >= static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(i) + 1, 0);
    out[static_cast<std::size_t>(i)] = static_cast<std::size_t>(dim);
  };
  const int n = f.rank;
  if (f.family == 'D') {
    if (n < 4) throw Error("unsupported group '" + group + "'");
    if ((n - 3) % 3 == 0) put((n - 3) / 3, (n - 3) / 3 + 2);
    if ((n - 4) % 3 == 0) put((n - 4) / 3, 2 * ((n - 4) / 3) + 3);
    if ((n - 5) % 3 == 0) put((n - 5) / 3, (n - 5) / 3 + 1);
    return out;
  }
  if (f.family == 'E') {
    if (n == 6) put(2, 1);
    else if (n == 7) put(2, 2);
    else if (n == 8) put(1, 1);
    else throw Error("unsupported group '" + group + "'");
    return out;
  }
  if ((n + 1) % 3 == 0) put((n + 1) / 3, (n + 1) / 3 - 1);
  if (n % 3 == 0) put(n / 3, 2 * (n / 3));
  if ((n - 1) % 3 == 0) put((n - 1) / 3, (n - 1) / 3 + 1);
  return out;
}

std::vector<TableComparison> verify_trivial_table(int n_max, const RankOptions& options) {
  if (n_max < 1 || n_max > 12) throw Error("n_max must lie in 1..12");
  std::vector<TableComparison> out;
  for (int n = 1; n <= n_max; ++n) {
    const CoxeterGraph g = type_a(static_cast<std::size_t>(n));
    const CoxeterComplex x = build_coxeter_complex(trivial_rep(g));
    const CohomologyReport r = coxeter_cohomology(x, options);
    auto t = compare_tables(g.name(), expected_trivial_a(n, x.valid_max), r.h_dims);
    t.euler_spaces = r.euler_spaces;
    t.euler = r.euler;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TableComparison> verify_reflection_table(const std::vector<std::string>& groups, const RankOptions& options) {
  std::vector<TableComparison> out;
  for (const auto& name : groups) {
    parse_family(name);
    const CoxeterGraph g = parse_graph(name);
    const CoxeterComplex x = build_coxeter_complex(reflection_rep(g));
    const CohomologyReport r = coxeter_cohomology(x, options);
    auto t = compare_tables(name, expected_reflection(name, x.valid_max), r.h_dims);
    t.euler_spaces = r.euler_spaces;
    t.euler = r.euler;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> default_reflection_groups() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 7; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) out.push_back("E" + std::to_string(n));
  out.push_back("F4");
  for (int n = 2; n <= 4; ++n) out.push_back("H" + std::to_string(n));
  for (int p = 5; p <= 8; ++p) out.push_back("I2(" + std::to_string(p) + ")");
  return out;
}

namespace {

std::string dims_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<std::size_t> full_cohomology(const Representation& rep, const RankOptions& options) {
  return coxeter_cohomology(build_coxeter_complex(rep), options).h_dims;
}

CheckResult compare_dims(std::string name, std::vector<std::size_t> expected, std::vector<std::size_t> computed) {
  CheckResult c;
  c.name = std::move(name);
  c.passed = trimmed(expected) == trimmed(computed);
  c.detail = "expected " + dims_string(expected) + ", computed " + dims_string(computed);
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  return c;
}

}  // namespace

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<CheckResult> geometric_check(const std::string& group, std::size_t d, const RankOptions& options) {
  const CoxeterGraph g = parse_graph(group);
  const CoxeterComplex x = build_coxeter_complex(trivial_rep(g, d));
  const CohomologyReport coxeter = coxeter_cohomology(x, options);
  const CohomologyReport simplicial = cohomology(simplicial_reduced_complex(g, 1), options);
  std::vector<std::size_t> scaled = simplicial.h_dims;
  for (auto& v : scaled) v *= d;
  std::vector<CheckResult> out;
  out.push_back(compare_dims("geometric dims " + group, scaled, coxeter.h_dims));
  const ChainMapCheck iso = geometric_isomorphism(x, simplicial_reduced_complex(g, d));
  out.push_back({"geometric rescaling " + group, iso.ok, iso.detail, {}, {}});
  return out;
}

CheckResult kunneth_check(const GroupRep& a, const GroupRep& b, const RankOptions& options) {
  const CoxeterGraph g1 = parse_graph(a.graph), g2 = parse_graph(b.graph);
  const Representation r1 = build_rep(a.rep, g1), r2 = build_rep(b.rep, g2);
  const auto h1 = full_cohomology(r1, options);
  const auto h2 = full_cohomology(r2, options);
  const auto h = full_cohomology(external_tensor(r1, r2), options);
  auto c = compare_dims("kunneth " + a.to_string() + " x " + b.to_string(), convolve(h1, h2), h);
  c.detail = "factors " + dims_string(h1) + " * " + dims_string(h2) + ": " + c.detail;
  return c;
}

std::vector<std::pair<GroupRep, GroupRep>> default_kunneth_cases() {
  return {
      {{"A2", "reflection"}, {"A3", "reflection"}},
      {{"A1", "reflection"}, {"A1", "reflection"}},
      {{"A2", "trivial"}, {"A2", "trivial"}},
      {{"A3", "reflection"}, {"A1", "reflection"}},
      {{"A3", "reflection"}, {"A3", "trivial"}},
      {{"A4", "reflection"}, {"A1", "reflection"}},
      {{"B3", "reflection"}, {"A2", "trivial"}},
      {{"H3", "reflection"}, {"A1", "reflection"}},
      {{"I2(5)", "reflection"}, {"A3", "trivial"}},
      {{"D4", "reflection"}, {"A1", "sign"}},
  };
}

CheckResult split_additivity_check(const std::string& graph, const std::string& rep1, const std::string& rep2,
                                   const RankOptions& options) {
  const CoxeterGraph g = parse_graph(graph);
  const Representation r1 = build_rep(rep1, g), r2 = build_rep(rep2, g);
  const auto h1 = full_cohomology(r1, options);
  const auto h2 = full_cohomology(r2, options);
  std::vector<std::size_t> sum(std::max(h1.size(), h2.size()), 0);
  for (std::size_t i = 0; i < h1.size(); ++i) sum[i] += h1[i];
  for (std::size_t i = 0; i < h2.size(); ++i) sum[i] += h2[i];
  const auto h = full_cohomology(direct_sum(r1, r2), options);
  return compare_dims("split " + graph + " " + rep1 + " + " + rep2, sum, h);
}

std::vector<SplitCase> default_split_cases() {
  return {
      {"A3", "reflection", "trivial"},
      {"A2", "reflection", "reflection"},
      {"A4", "reflection", "zero"},
      {"D4", "reflection", "sign"},
      {"B3", "reflection", "trivial(2)"},
  };
}

Representation far_representation(const Representation& rep, std::size_t s, const InducedGraph& far) {
  const InvariantBasis fixed = invariants(rep, IndependentSet{{s}});
  std::vector<ExactMatrix> gens;
  for (std::size_t t : far.to_parent)
    gens.push_back(fixed.space.coordinates(rep.generator(t) * fixed.columns()));
  return Representation(far.graph, rep.field(), fixed.dim(), std::move(gens), rep.label() + "^" + generator_name(s));
}

bool LesReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

// rank of the map Z -> H^k(D) given the images F Z in D^k.
std::size_t induced_rank(const ExactMatrix& images, const GradedComplex& d, int k) {
  if (images.cols() == 0 || d.dim(k) == 0) return 0;
  const ExactMatrix boundaries = d.differential(k - 1);
  return exact_rank(hstack(images, boundaries)) - exact_rank(boundaries);
}

ExactMatrix cocycles(const GradedComplex& c, int k) {
  if (c.dim(k) == 0) return ExactMatrix(*c.field, 0, 0);
  return kernel_basis(c.differential(k));
}

}  // namespace

LesReport les_check(const GroupRep& group, std::size_t s) {
  const CoxeterGraph g = parse_graph(group.graph);
  if (s >= g.size()) throw Error("generator index out of range for " + group.graph);
  auto rep = std::make_shared<const Representation>(build_rep(group.rep, g));
  const ParabolicDeletion del = parabolic_deletions(g, s);
  auto rep_minus = std::make_shared<const Representation>(restrict(*rep, del.minus_s));
  auto rep_far = std::make_shared<const Representation>(far_representation(*rep, s, del.far));
  const CoxeterComplex x = build_coxeter_complex(rep);
  const CoxeterComplex xm = build_coxeter_complex(rep_minus);
  const CoxeterComplex y = build_coxeter_complex(rep_far);
  const FieldSpec& field = rep->field();
  const int top = x.complex.max_degree;

  LesReport report;
  report.name = "les " + group.to_string() + " at " + generator_name(s);
  RankOptions exact;
  exact.mode = RankMode::exact;
  const CohomologyReport hx = cohomology(x.complex, exact);
  const CohomologyReport hm = cohomology(xm.complex, exact);
  const CohomologyReport hy = cohomology(y.complex, exact);
  report.h_g = hx.h_dims;
  report.h_minus = hm.h_dims;
  report.h_far = hy.h_dims;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail), {}, {}});
  };

  // iota[k]: Y^k -> X^{k+1}, block T' -> T' u {s}.
  std::map<int, ExactMatrix> iota;
  for (int k = 0; k + 1 <= top; ++k) {
    ExactMatrix m(field, x.complex.dim(k + 1), y.complex.dim(k));
    auto it = y.blocks.find(k);
    if (it != y.blocks.end())
      for (const auto& yb : it->second) {
        if (yb.invariants.dim() == 0) continue;
        std::vector<std::size_t> members{s};
        std::size_t above = 0;
        for (std::size_t u : yb.t.members) {
          members.push_back(del.far.to_parent[u]);
          if (del.far.to_parent[u] > s) ++above;
        }
        std::sort(members.begin(), members.end());
        const ComplexBlock* xb = x.find_block(IndependentSet{members});
        if (xb == nullptr) throw InternalError("no block for " + IndependentSet{members}.to_string());
        const ExactMatrix vectors =
            invariants(*rep, IndependentSet{{s}}).columns() * yb.invariants.columns();
        ExactMatrix coords = xb->invariants.space.coordinates(vectors);
        if (above % 2) coords = coords.scaled(Rational(-1));
        m.set_block(xb->offset, yb.offset, coords);
      }
    iota.emplace(k, std::move(m));
  }
  auto iota_at = [&](int k) {  // Y^{k-1} -> X^k
    auto it = iota.find(k - 1);
    if (it != iota.end()) return it->second;
    return ExactMatrix(field, x.complex.dim(k), y.complex.dim(k - 1));
  };

  // pi[k]: X^k -> Xm^k and the section lift[k]: Xm^k -> X^k.
  std::map<int, ExactMatrix> pi, lift;
  for (int k = 0; k <= top; ++k) {
    ExactMatrix p(field, xm.complex.dim(k), x.complex.dim(k));
    ExactMatrix l(field, x.complex.dim(k), xm.complex.dim(k));
    auto it = xm.blocks.find(k);
    if (it != xm.blocks.end())
      for (const auto& mb : it->second) {
        if (mb.invariants.dim() == 0) continue;
        std::vector<std::size_t> members;
        for (std::size_t u : mb.t.members) members.push_back(del.minus_s.to_parent[u]);
        const ComplexBlock* xb = x.find_block(IndependentSet{members});
        if (xb == nullptr) throw InternalError("no block for " + IndependentSet{members}.to_string());
        p.set_block(mb.offset, xb->offset, mb.invariants.space.coordinates(xb->invariants.columns()));
        l.set_block(xb->offset, mb.offset, xb->invariants.space.coordinates(mb.invariants.columns()));
      }
    pi.emplace(k, std::move(p));
    lift.emplace(k, std::move(l));
  }

  const auto ci = check_chain_map(y.complex, x.complex, iota, [](int k) { return k + 1; });
  add("inclusion is a chain map", ci.ok, ci.detail);
  const auto cp = check_chain_map(x.complex, xm.complex, pi, [](int k) { return k; });
  add("quotient is a chain map", cp.ok, cp.detail);

  bool ses_ok = true;
  std::string ses_detail = "injective, exact in the middle and surjective in every degree";
  for (int k = 0; k <= top; ++k) {
    const ExactMatrix i_k = iota_at(k);
    const ExactMatrix& p_k = pi.at(k);
    const std::string at = " in degree " + std::to_string(k);
    if (exact_rank(i_k) != y.complex.dim(k - 1)) {
      ses_ok = false, ses_detail = "inclusion not injective" + at;
      break;
    }
    if (exact_rank(p_k) != xm.complex.dim(k)) {
      ses_ok = false, ses_detail = "quotient not surjective" + at;
      break;
    }
    if (!(p_k * i_k).is_zero() || x.complex.dim(k) != y.complex.dim(k - 1) + xm.complex.dim(k)) {
      ses_ok = false, ses_detail = "not exact in the middle" + at;
      break;
    }
    if (!(p_k * lift.at(k) == ExactMatrix::identity(field, xm.complex.dim(k)))) {
      ses_ok = false, ses_detail = "section is not a right inverse" + at;
      break;
    }
  }
  add("short exact sequence of complexes", ses_ok, ses_detail);

  // Ranks of the induced maps on cohomology, by degree.
  std::vector<std::size_t> r_iota(static_cast<std::size_t>(top + 2), 0), r_pi(r_iota), r_delta(r_iota);
  bool delta_ok = true;
  std::string delta_detail = "zig-zag lifts land in the subcomplex and give cocycles";
  for (int k = 0; k <= top; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    if (k >= 1 && y.complex.dim(k - 1) > 0) {
      const ExactMatrix z = cocycles(y.complex, k - 1);
      r_iota[kk] = induced_rank(iota_at(k) * z, x.complex, k);
    }
    if (xm.complex.dim(k) > 0 && x.complex.dim(k) > 0)
      r_pi[kk] = induced_rank(pi.at(k) * cocycles(x.complex, k), xm.complex, k);
    if (xm.complex.dim(k) > 0) {
      const ExactMatrix z = cocycles(xm.complex, k);
      if (z.cols() > 0 && y.complex.dim(k) > 0) {
        const ExactMatrix w = x.complex.differential(k) * (lift.at(k) * z);
        const auto pulled = solve(iota_at(k + 1), w);
        if (!pulled) {
          delta_ok = false, delta_detail = "d(lift) misses the subcomplex in degree " + std::to_string(k);
        } else if (!(y.complex.differential(k) * *pulled).is_zero()) {
          delta_ok = false, delta_detail = "connecting image is not a cocycle in degree " + std::to_string(k);
        } else {
          r_delta[kk] = induced_rank(*pulled, y.complex, k);
        }
      }
    }
  }
  add("connecting maps", delta_ok, delta_detail);

  bool exact_ok = true;
  std::string exact_detail = "rank(incoming) = dim ker(outgoing) at every node";
  for (int k = 0; k <= top && exact_ok; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t h_x = hx.h(k), h_m = hm.h(k), h_y = hy.h(k);
    const std::string at = std::to_string(k);
    if (r_iota[kk] + r_pi[kk] != h_x)
      exact_ok = false, exact_detail = "not exact at H^" + at + "(G)";
    else if (r_pi[kk] + r_delta[kk] != h_m)
      exact_ok = false, exact_detail = "not exact at H^" + at + "(G_s)";
    else if (r_delta[kk] + r_iota[kk + 1] != h_y)
      exact_ok = false, exact_detail = "not exact at H^" + at + "(G^s)";
  }
  add("long exact sequence", exact_ok, exact_detail);

  const bool euler_ok = hx.euler == hm.euler - hy.euler;
  add("euler identity", euler_ok,
      "chi(G) = " + std::to_string(hx.euler) + ", chi(G_s) - chi(G^s) = " + std::to_string(hm.euler) + " - " +
          std::to_string(hy.euler));
  return report;
}

std::vector<LesCase> default_les_cases() {
  std::vector<LesCase> out;
  for (std::size_t n = 4; n <= 7; ++n) out.push_back({{"A" + std::to_string(n), "reflection"}, n - 3});
  for (std::size_t n = 4; n <= 6; ++n) out.push_back({{"D" + std::to_string(n), "reflection"}, n - 3});
  out.push_back({{"E6", "reflection"}, 3});
  return out;
}

}  // namespace coxcoh
