#include "coxcoh/configspace.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace coxcoh {

int OrderedPartition::n() const {
  int total = 0;
  for (const auto& part : parts) total += static_cast<int>(part.size());
  return total;
}

std::vector<int> OrderedPartition::sizes() const {
  std::vector<int> out;
  for (const auto& part : parts) out.push_back(static_cast<int>(part.size()));
  return out;
}

bool OrderedPartition::order_preserving() const {
  int last = 0;
  for (const auto& part : parts)
    for (int x : part) {
      if (x <= last) return false;
      last = x;
    }
  return true;
}

std::string OrderedPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    s += i ? ",{" : "{";
    for (std::size_t j = 0; j < parts[i].size(); ++j) s += (j ? "," : "") + std::to_string(parts[i][j]);
    s += "}";
  }
  return s + ")";
}

bool operator<(const OrderedPartition& a, const OrderedPartition& b) {
  const auto sa = a.sizes(), sb = b.sizes();
  if (sa != sb) return sa < sb;
  return a.parts < b.parts;
}

void validate(const OrderedPartition& p, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int count = 0;
  for (const auto& part : p.parts) {
    if (part.empty() || part.size() > 2) throw Error("cell " + p.to_string() + " has a part of size other than 1 or 2");
    if (!std::is_sorted(part.begin(), part.end())) throw Error("cell " + p.to_string() + " has an unsorted part");
    for (int x : part) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
        throw Error("cell " + p.to_string() + " is not a partition of {1.." + std::to_string(n) + "}");
      seen[static_cast<std::size_t>(x)] = true;
      ++count;
    }
  }
  if (count != n) throw Error("cell " + p.to_string() + " does not cover {1.." + std::to_string(n) + "}");
}

namespace {

// Sequences of k entries in {1,2} summing to n, lexicographic.
std::vector<std::vector<int>> size_vectors(int n, int k) {
  std::vector<std::vector<int>> out;
  const int pairs = n - k;
  if (k < 0 || pairs < 0 || pairs > k) return out;
  std::vector<int> v(static_cast<std::size_t>(k), 1);
  std::fill(v.end() - pairs, v.end(), 2);
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

void fill_cells(const std::vector<int>& sizes, std::size_t pos, std::vector<int>& remaining,
                OrderedPartition& current, std::vector<OrderedPartition>& out) {
  if (pos == sizes.size()) {
    out.push_back(current);
    return;
  }
  const std::size_t r = remaining.size();
  auto recurse = [&](std::vector<int> part) {
    std::vector<int> rest;
    for (int x : remaining)
      if (std::find(part.begin(), part.end(), x) == part.end()) rest.push_back(x);
    std::swap(rest, remaining);
    current.parts.push_back(std::move(part));
    fill_cells(sizes, pos + 1, remaining, current, out);
    current.parts.pop_back();
    std::swap(rest, remaining);
  };
  if (sizes[pos] == 1) {
    for (std::size_t a = 0; a < r; ++a) recurse({remaining[a]});
  } else {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b) recurse({remaining[a], remaining[b]});
  }
}

// The elements of <T> for pairwise commuting simple transpositions.
std::vector<Permutation> parabolic_elements(std::size_t n, const IndependentSet& t) {
  std::vector<Permutation> out{identity_permutation(n)};
  for (std::size_t s : t.members) {
    const Permutation st = simple_transposition(n, s);
    const std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) out.push_back(compose(st, out[i]));
  }
  return out;
}

}  // namespace

std::vector<OrderedPartition> enumerate_cells(int n, int k) {
  std::vector<OrderedPartition> out;
  if (n < 1 || k < (n + 1) / 2 || k > n) return out;
  for (const auto& sizes : size_vectors(n, k)) {
    std::vector<int> remaining;
    for (int x = 1; x <= n; ++x) remaining.push_back(x);
    OrderedPartition current;
    fill_cells(sizes, 0, remaining, current, out);
  }
  return out;
}

OrderedPartition standard_cell(const std::vector<int>& sizes) {
  OrderedPartition p;
  int next = 1;
  for (int s : sizes) {
    if (s != 1 && s != 2) throw Error("part sizes must be 1 or 2");
    std::vector<int> part;
    for (int i = 0; i < s; ++i) part.push_back(next++);
    p.parts.push_back(std::move(part));
  }
  return p;
}

IndependentSet size_vector_to_set(const std::vector<int>& sizes) {
  IndependentSet t;
  std::size_t prefix = 0;
  for (int s : sizes) {
    if (s == 2) t.members.push_back(prefix);
    prefix += static_cast<std::size_t>(s);
  }
  return t;
}

std::vector<int> set_to_size_vector(const IndependentSet& t, int n) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos < static_cast<std::size_t>(n)) {
    if (t.contains(pos)) {
      sizes.push_back(2);
      pos += 2;
    } else {
      sizes.push_back(1);
      pos += 1;
    }
  }
  if (pos != static_cast<std::size_t>(n) || size_vector_to_set(sizes).members != t.members)
    throw Error("the set " + t.to_string() + " does not come from a size vector for n = " + std::to_string(n));
  return sizes;
}

OrderedPartition act_right(const OrderedPartition& p, const Permutation& sigma) {
  const Permutation inv = inverse(sigma);
  OrderedPartition q;
  for (const auto& part : p.parts) {
    std::vector<int> image;
    for (int x : part) image.push_back(inv[static_cast<std::size_t>(x - 1)] + 1);
    std::sort(image.begin(), image.end());
    q.parts.push_back(std::move(image));
  }
  return q;
}

Permutation translating_permutation(const OrderedPartition& p) {
  const OrderedPartition base = standard_cell(p.sizes());
  Permutation sigma(static_cast<std::size_t>(p.n()), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (std::size_t j = 0; j < p.parts[i].size(); ++j)
      sigma[static_cast<std::size_t>(p.parts[i][j] - 1)] = base.parts[i][j] - 1;
  return sigma;
}

std::size_t RelativeComplex::index_of(const OrderedPartition& p) const {
  auto it = cells.find(static_cast<int>(p.size()));
  if (it != cells.end()) {
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), p);
    if (pos != it->second.end() && *pos == p) return static_cast<std::size_t>(pos - it->second.begin());
  }
  throw Error("no cell " + p.to_string());
}

RelativeComplex relative_complex(int n, bool dense) {
  if (n < 1 || n > 7) throw Error("relative complex needs 1 <= n <= 7");
  RelativeComplex r;
  r.n = n;
  const int lo = (n + 1) / 2;
  for (int k = lo; k <= n; ++k) r.cells[k] = enumerate_cells(n, k);
  for (int k = lo; k <= n; ++k) {
    const auto& source = r.cells[k];
    const std::size_t target_dim = k > lo ? r.cells[k - 1].size() : 0;
    SparseMatrix b(rationals(), target_dim, source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
      std::vector<std::pair<std::size_t, long>> entries;
      const auto& parts = source[c].parts;
      for (std::size_t i = 1; i < parts.size(); ++i) {
        // merge G_i and G_{i+1} (1-based), i.e. parts[i-1] and parts[i]
        if (parts[i - 1].size() != 1 || parts[i].size() != 1) continue;
        OrderedPartition face;
        face.parts.assign(parts.begin(), parts.begin() + static_cast<long>(i - 1));
        std::vector<int> merged{parts[i - 1][0], parts[i][0]};
        std::sort(merged.begin(), merged.end());
        face.parts.push_back(std::move(merged));
        face.parts.insert(face.parts.end(), parts.begin() + static_cast<long>(i + 1), parts.end());
        entries.emplace_back(r.index_of(face), i % 2 ? -1 : 1);
      }
      std::sort(entries.begin(), entries.end());
      for (const auto& [row, v] : entries) b.push(row, c, Rational(v));
    }
    r.boundaries.emplace(k, std::move(b));
  }
  for (int k = lo + 1; k <= n; ++k)
    if ((r.boundaries.at(k - 1) * r.boundaries.at(k)).nonzeros() != 0)
      throw InternalError("relative boundary squares to a nonzero map out of degree " + std::to_string(k));

  if (dense) {
    GradedComplex& c = r.complex;
    c.orientation = Orientation::chain;
    c.min_degree = lo;
    c.max_degree = n;
    for (int k = lo; k <= n; ++k) {
      c.dims[k] = r.cells[k].size();
      if (k > lo) c.differentials.emplace(k, r.boundaries.at(k).to_dense());
    }
    c.verify();
  }
  return r;
}

int phi_sign(const std::vector<int>& sizes, PhiSign convention) {
  const std::size_t k = sizes.size();
  long exponent = 0;
  for (std::size_t j = 1; j < k; ++j) {
    if (convention == PhiSign::head) {
      for (std::size_t a = 0; a < j; ++a) exponent += sizes[a];
    } else {
      for (std::size_t a = j; a < k; ++a) exponent += sizes[a];
    }
  }
  return exponent % 2 ? -1 : 1;
}

namespace {

struct PhiMaps {
  std::map<int, SparseMatrix> head, tail;  // keyed by cell degree k
};

PhiMaps build_phi(const RelativeComplex& rel, const CoxeterComplex& x) {
  const int n = rel.n;
  const std::size_t nn = static_cast<std::size_t>(n);
  PhiMaps maps;
  for (const auto& [k, cells] : rel.cells) {
    const int j = n - k;
    SparseMatrix head(rationals(), x.complex.dim(j), cells.size());
    SparseMatrix tail(head);
    std::map<std::vector<std::size_t>, std::unordered_map<std::size_t, std::size_t>> coordinate_lookup;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const OrderedPartition& cell = cells[c];
      const auto sizes = cell.sizes();
      const IndependentSet t = size_vector_to_set(sizes);
      const ComplexBlock* block = x.find_block(t);
      if (block == nullptr) throw InternalError("no Coxeter block for " + t.to_string());
      auto& lookup = coordinate_lookup[t.members];
      if (lookup.empty()) {
        const auto& rows = block->invariants.space.coordinate_rows();
        for (std::size_t q = 0; q < rows.size(); ++q) lookup.emplace(rows[q], q);
      }
      const Permutation sigma = translating_permutation(cell);
      std::vector<std::size_t> support;
      for (const auto& w : parabolic_elements(nn, t)) support.push_back(lex_index(compose(w, sigma)));
      std::sort(support.begin(), support.end());
      std::vector<std::size_t> hits;
      for (std::size_t idx : support) {
        auto it = lookup.find(idx);
        if (it != lookup.end()) hits.push_back(it->second);
      }
      // The coordinates read off the identity rows must reproduce the vector.
      const ExactMatrix& basis = block->invariants.columns();
      for (std::size_t row = 0; row < basis.rows(); ++row) {
        Rational value(0);
        for (std::size_t q : hits) value += basis.entry(row, q)[0];
        const bool in_support = std::binary_search(support.begin(), support.end(), row);
        if (value != Rational(in_support ? 1 : 0))
          throw InternalError("phi: the image of " + cell.to_string() + " is not in the span of the " + t.to_string() +
                              " block");
      }
      std::sort(hits.begin(), hits.end());
      const int hs = phi_sign(sizes, PhiSign::head), ts = phi_sign(sizes, PhiSign::tail);
      for (std::size_t q : hits) {
        head.push(block->offset + q, c, Rational(hs));
        tail.push(block->offset + q, c, Rational(ts));
      }
    }
    maps.head.emplace(k, std::move(head));
    maps.tail.emplace(k, std::move(tail));
  }
  return maps;
}

SparseMatrix empty_map(std::size_t rows, std::size_t cols) { return SparseMatrix(rationals(), rows, cols); }

}  // namespace

PhiConfigReport phi_config(int n) {
  if (n < 2 || n > 6) throw Error("phi_config needs 2 <= n <= 6");
  const RelativeComplex rel = relative_complex(n, false);
  const CoxeterComplex x = build_coxeter_complex(regular_rep(type_a(static_cast<std::size_t>(n - 1))));
  const PhiMaps phi = build_phi(rel, x);

  PhiConfigReport report;
  report.n = n;
  report.cell_dims.assign(static_cast<std::size_t>(n) + 1, 0);
  report.coxeter_dims.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    auto it = rel.cells.find(k);
    report.cell_dims[static_cast<std::size_t>(k)] = it == rel.cells.end() ? 0 : it->second.size();
    report.coxeter_dims[static_cast<std::size_t>(k)] = x.complex.dim(n - k);
  }

  report.chain_map = true;
  report.tail_commutes = true;
  report.tail_anticommutes = true;
  for (const auto& [k, cells] : rel.cells) {
    const int j = n - k;
    const SparseMatrix d(x.complex.differential(j));
    const SparseMatrix& boundary = rel.boundaries.at(k);
    auto lower = [&](const std::map<int, SparseMatrix>& m) {
      auto it = m.find(k - 1);
      return it != m.end() ? it->second : empty_map(x.complex.dim(j + 1), 0);
    };
    const SparseMatrix lhs = lower(phi.head) * boundary;
    const SparseMatrix rhs = d * phi.head.at(k);
    if (!(lhs == rhs)) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& a = lhs.column(c);
        const auto& b = rhs.column(c);
        bool same = a.size() == b.size();
        for (std::size_t e = 0; same && e < a.size(); ++e) same = a[e].row == b[e].row && a[e].value == b[e].value;
        if (!same) throw InternalError("phi is not a chain map at the cell " + cells[c].to_string());
      }
      throw InternalError("phi is not a chain map out of degree " + std::to_string(k));
    }
    const SparseMatrix tl = lower(phi.tail) * boundary;
    const SparseMatrix tr = d * phi.tail.at(k);
    if (!(tl == tr)) report.tail_commutes = false;
    if (!(tl == tr.scaled(Rational(-1)))) report.tail_anticommutes = false;
  }

  report.bijective = true;
  for (const auto& [k, m] : phi.head) {
    if (m.rows() != m.cols() || exact_rank(m) != m.cols()) {
      report.bijective = false;
      report.detail = "phi is not bijective in degree " + std::to_string(k);
    }
  }
  if (report.bijective)
    report.detail = std::string("bijective chain map; the tail-sum sign ") +
                    (report.tail_commutes ? "also commutes"
                                          : report.tail_anticommutes ? "anticommutes" : "is not a chain map up to sign");
  return report;
}

ConfigHomologyReport compare_homology(int n, const RankOptions& options) {
  if (n < 2 || n > 6) throw Error("compare_homology needs 2 <= n <= 6");
  const RelativeComplex rel = relative_complex(n, true);
  const CoxeterComplex x = build_coxeter_complex(regular_rep(type_a(static_cast<std::size_t>(n - 1))));
  std::vector<int> degrees;
  for (int k = 0; k <= n; ++k) degrees.push_back(k);
  RankOptions opts = options;
  if (opts.mode == RankMode::automatic && n >= 6) opts.mode = RankMode::modular;
  const CohomologyReport hr = cohomology(rel.complex, opts, degrees);
  const CohomologyReport hc = cohomology(x.complex, opts, degrees);

  ConfigHomologyReport report;
  report.n = n;
  report.relative_h = hr.h_dims;
  report.coxeter_h = hc.h_dims;
  report.probabilistic = hr.probabilistic || hc.probabilistic;
  report.primes_agreed = hr.primes_agreed && hc.primes_agreed;
  report.mode = hr.mode == hc.mode ? hr.mode : "mixed";
  const std::size_t nn = static_cast<std::size_t>(n);
  report.complement_h.resize(nn + 1);
  report.dual_match = true;
  report.complement_matches_same_degree = true;
  report.complement_matches_printed_degree = true;
  for (std::size_t k = 0; k <= nn; ++k) {
    report.complement_h[k] = report.relative_h[nn - k];
    if (report.relative_h[k] != report.coxeter_h[nn - k]) report.dual_match = false;
  }
  for (std::size_t j = 0; j <= nn; ++j) {
    if (report.complement_h[j] != report.coxeter_h[j]) report.complement_matches_same_degree = false;
    if (report.complement_h[j] != report.coxeter_h[nn - j]) report.complement_matches_printed_degree = false;
  }
  return report;
}

std::vector<StabilizerCheck> stabilizer_check(int n) {
  if (n < 1 || n > 5) throw Error("stabilizer_check needs 1 <= n <= 5");
  const std::size_t nn = static_cast<std::size_t>(n);
  const auto group = all_permutations(nn);
  std::vector<StabilizerCheck> out;
  for (int k = (n + 1) / 2; k <= n; ++k)
    for (const auto& sizes : size_vectors(n, k)) {
      const OrderedPartition cell = standard_cell(sizes);
      const IndependentSet t = size_vector_to_set(sizes);
      std::set<Permutation> parabolic;
      for (auto& w : parabolic_elements(nn, t)) parabolic.insert(std::move(w));
      std::set<Permutation> cell_stab, element_stab;
      for (const auto& sigma : group) {
        if (act_right(cell, sigma) == cell) cell_stab.insert(sigma);
        std::set<Permutation> translate;
        for (const auto& w : parabolic) translate.insert(compose(w, sigma));
        if (translate == parabolic) element_stab.insert(sigma);
      }
      StabilizerCheck c;
      c.cell = cell.to_string();
      c.stabilizer_size = cell_stab.size();
      c.parabolic_size = parabolic.size();
      c.cell_ok = cell_stab == parabolic;
      c.element_ok = element_stab == parabolic;
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<SpechtSpotCheck> specht_spot_check(int n) {
  if (n < 2 || n > 5) throw Error("specht_spot_check needs 2 <= n <= 5");
  const CoxeterGraph g = type_a(static_cast<std::size_t>(n - 1));
  RankOptions exact;
  exact.mode = RankMode::exact;
  auto h_of = [&](const Representation& rep) { return coxeter_cohomology(build_coxeter_complex(rep), exact).h_dims; };
  const auto regular = h_of(regular_rep(g));
  struct Piece {
    std::string name;
    std::size_t f;
    std::vector<std::size_t> h, twisted;
  };
  std::vector<Piece> pieces;
  for (const auto& lambda : partitions(n)) {
    const Representation s = specht_rep(g, lambda);
    pieces.push_back({partition_string(lambda), hook_length_dimension(lambda), h_of(s), h_of(sign_twist(s))});
  }
  std::vector<SpechtSpotCheck> out;
  for (std::size_t j = 0; j < regular.size(); ++j) {
    SpechtSpotCheck c;
    c.n = n;
    c.degree = static_cast<int>(j);
    c.regular_dim = regular[j];
    for (const auto& p : pieces) {
      c.weighted_sum += p.f * p.h[j];
      c.twisted_sum += p.f * p.twisted[j];
      c.multiplicities.emplace_back(p.name, p.twisted[j]);
    }
    c.ok = c.weighted_sum == c.regular_dim && c.twisted_sum == c.regular_dim;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace coxcoh
