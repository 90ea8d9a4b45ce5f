#include "coxcoh/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>

#include "coxcoh/budget.hpp"

namespace coxcoh {
namespace {

// Sparse row: sorted column indices, `degree` coefficients per entry.
struct SparseRow {
  std::vector<std::size_t> cols;
  std::vector<Rational> vals;
};

struct SparseEchelon {
  std::vector<SparseRow> rows;      // pivot rows ordered by pivot column
  std::vector<std::size_t> pivots;
};

SparseRow extract_row(const ExactMatrix& a, std::size_t i) {
  SparseRow r;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.is_zero(i, j)) continue;
    r.cols.push_back(j);
    const auto e = a.entry(i, j);
    r.vals.insert(r.vals.end(), e.begin(), e.end());
  }
  return r;
}

std::span<const Rational> coeff(const SparseRow& r, std::size_t k, std::size_t d) {
  return {r.vals.data() + k * d, d};
}

// Coefficient of column c in r, or an empty span.
std::span<const Rational> lookup(const SparseRow& r, std::size_t c, std::size_t d) {
  auto it = std::lower_bound(r.cols.begin(), r.cols.end(), c);
  if (it == r.cols.end() || *it != c) return {};
  return coeff(r, static_cast<std::size_t>(it - r.cols.begin()), d);
}

// out = x - f * y
void sub_multiple(const FieldSpec& F, const SparseRow& x, std::span<const Rational> f, const SparseRow& y,
                  SparseRow& out) {
  const std::size_t d = static_cast<std::size_t>(F.degree());
  out.cols.clear();
  out.vals.clear();
  out.cols.reserve(x.cols.size() + y.cols.size());
  out.vals.reserve((x.cols.size() + y.cols.size()) * d);
  std::size_t i = 0, j = 0;
  Rational t;
  while (i < x.cols.size() || j < y.cols.size()) {
    const std::size_t cx = i < x.cols.size() ? x.cols[i] : SIZE_MAX;
    const std::size_t cy = j < y.cols.size() ? y.cols[j] : SIZE_MAX;
    if (cx < cy) {
      out.cols.push_back(cx);
      const auto src = coeff(x, i++, d);
      out.vals.insert(out.vals.end(), src.begin(), src.end());
      continue;
    }
    const std::size_t base = out.vals.size();
    if (cy < cx) {
      out.vals.resize(base + d);
      F.sub_mul({out.vals.data() + base, d}, f, coeff(y, j++, d));
    } else {
      const auto src = coeff(x, i++, d);
      out.vals.insert(out.vals.end(), src.begin(), src.end());
      if (d == 1) {
        mpq_mul(t.get_mpq_t(), f[0].get_mpq_t(), y.vals[j].get_mpq_t());
        mpq_sub(out.vals[base].get_mpq_t(), out.vals[base].get_mpq_t(), t.get_mpq_t());
      } else {
        F.sub_mul({out.vals.data() + base, d}, f, coeff(y, j, d));
      }
      ++j;
    }
    if (F.is_zero({out.vals.data() + base, d})) {
      out.vals.resize(base);
    } else {
      out.cols.push_back(cy);
    }
  }
}

void scale_row(const FieldSpec& F, SparseRow& r, std::span<const Rational> f) {
  const std::size_t d = static_cast<std::size_t>(F.degree());
  std::vector<Rational> tmp(d);
  for (std::size_t k = 0; k < r.cols.size(); ++k) {
    std::span<Rational> e{r.vals.data() + k * d, d};
    if (d == 1) {
      mpq_mul(e[0].get_mpq_t(), e[0].get_mpq_t(), f[0].get_mpq_t());
    } else {
      F.mul(e, f, tmp);
      for (std::size_t q = 0; q < d; ++q) e[q] = tmp[q];
    }
  }
}

// Gaussian elimination on sparse rows. Rows are bucketed by leading column
// and the shortest row of each bucket becomes the pivot. With `reduce` the
// pivot rows are back-substituted into reduced row echelon form (which does
// not depend on the pivot choices).
std::vector<SparseRow> rows_of(const ExactMatrix& a) {
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(extract_row(a, i));
  return rows;
}

std::vector<SparseRow> rows_of(const SparseMatrix& a) {
  const SparseMatrix t = a.transpose();
  std::vector<SparseRow> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : t.column(i)) {
      rows[i].cols.push_back(e.row);
      rows[i].vals.insert(rows[i].vals.end(), e.value.begin(), e.value.end());
    }
  return rows;
}

SparseEchelon sparse_eliminate(const FieldSpec& F, std::size_t ncols, std::vector<SparseRow> input, bool reduce) {
  const std::size_t d = static_cast<std::size_t>(F.degree());
  std::vector<SparseRow> rows;
  std::vector<std::vector<std::size_t>> bucket(ncols);
  for (auto& r : input) {
    if (r.cols.empty()) continue;
    bucket[r.cols.front()].push_back(rows.size());
    rows.push_back(std::move(r));
  }

  SparseEchelon out;
  std::vector<Rational> inv(d), factor(d);
  SparseRow scratch;
  for (std::size_t c = 0; c < ncols; ++c) {
    auto& here = bucket[c];
    if (here.empty()) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < here.size(); ++k)
      if (rows[here[k]].cols.size() < rows[here[best]].cols.size()) best = k;
    std::swap(here[0], here[best]);
    SparseRow pivot = std::move(rows[here[0]]);
    F.inverse(coeff(pivot, 0, d), inv);
    scale_row(F, pivot, inv);
    for (std::size_t k = 1; k < here.size(); ++k) {
      SparseRow& r = rows[here[k]];
      const auto lead = coeff(r, 0, d);
      std::copy(lead.begin(), lead.end(), factor.begin());
      sub_multiple(F, r, factor, pivot, scratch);
      std::swap(r, scratch);
      if (!r.cols.empty()) bucket[r.cols.front()].push_back(here[k]);
    }
    std::vector<std::size_t>().swap(here);
    out.pivots.push_back(c);
    out.rows.push_back(std::move(pivot));
  }

  if (reduce) {
    for (std::size_t k = out.rows.size(); k-- > 0;) {
      const std::size_t c = out.pivots[k];
      for (std::size_t j = 0; j < k; ++j) {
        const auto e = lookup(out.rows[j], c, d);
        if (e.empty()) continue;
        std::copy(e.begin(), e.end(), factor.begin());
        sub_multiple(F, out.rows[j], factor, out.rows[k], scratch);
        std::swap(out.rows[j], scratch);
      }
    }
  }
  return out;
}

SparseEchelon sparse_eliminate(const ExactMatrix& a, bool reduce) {
  return sparse_eliminate(a.field(), a.cols(), rows_of(a), reduce);
}

SparseEchelon sparse_eliminate(const SparseMatrix& a, bool reduce) {
  return sparse_eliminate(a.field(), a.cols(), rows_of(a), reduce);
}

ExactMatrix densify(const FieldSpec& F, const std::vector<SparseRow>& rows, std::size_t nrows, std::size_t cols) {
  const std::size_t d = static_cast<std::size_t>(F.degree());
  ExactMatrix m(F, nrows, cols);
  for (std::size_t i = 0; i < rows.size() && i < nrows; ++i)
    for (std::size_t k = 0; k < rows[i].cols.size(); ++k) {
      auto dst = m.entry(i, rows[i].cols[k]);
      for (std::size_t q = 0; q < d; ++q) dst[q] = rows[i].vals[k * d + q];
    }
  return m;
}

// Kernel basis together with the free columns of `a`; row free[t] of the
// basis is the t-th unit vector.
template <class Matrix>
std::pair<ExactMatrix, std::vector<std::size_t>> kernel_with_free_rows(const Matrix& a) {
  const SparseEchelon e = sparse_eliminate(a, true);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free, free_pos(a.cols(), SIZE_MAX);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) {
      free_pos[j] = free.size();
      free.push_back(j);
    }

  ExactMatrix k(a.field(), a.cols(), free.size());
  const std::size_t d = static_cast<std::size_t>(a.field().degree());
  for (std::size_t t = 0; t < free.size(); ++t) k.entry(free[t], t)[0] = 1;
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    const SparseRow& row = e.rows[r];
    for (std::size_t q = 0; q < row.cols.size(); ++q) {
      const std::size_t t = free_pos[row.cols[q]];
      if (t == SIZE_MAX) continue;
      auto dst = k.entry(e.pivots[r], t);
      for (std::size_t z = 0; z < d; ++z) dst[z] = -row.vals[q * d + z];
    }
  }
  return {std::move(k), std::move(free)};
}

}  // namespace

std::string to_string(RankMode mode) {
  switch (mode) {
    case RankMode::exact: return "exact";
    case RankMode::modular: return "modular";
    case RankMode::automatic: return "auto";
  }
  return "?";
}

RankMode parse_rank_mode(const std::string& text) {
  if (text == "exact") return RankMode::exact;
  if (text == "modular") return RankMode::modular;
  if (text == "auto") return RankMode::automatic;
  throw Error("unknown rank mode '" + text + "' (expected exact, modular or auto)");
}

EchelonForm rref(ExactMatrix a) {
  SparseEchelon e = sparse_eliminate(a, true);
  return {densify(a.field(), e.rows, a.rows(), a.cols()), std::move(e.pivots)};
}

std::size_t exact_rank(const ExactMatrix& a) {
  if (a.empty()) return 0;
  return sparse_eliminate(a, false).pivots.size();
}

std::size_t exact_rank(const SparseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return sparse_eliminate(a, false).pivots.size();
}

ExactMatrix kernel_basis(const ExactMatrix& a) { return kernel_with_free_rows(a).first; }

ExactMatrix image_basis(const ExactMatrix& a) { return a.select_cols(rref(a).pivots); }

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw Error("solve: row mismatch");
  const EchelonForm e = rref(hstack(a, b));
  ExactMatrix x(a.field(), a.cols(), b.cols());
  const std::size_t d = static_cast<std::size_t>(a.field().degree());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t p = e.pivots[r];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto src = e.reduced.entry(r, a.cols() + j);
      auto dst = x.entry(p, j);
      for (std::size_t q = 0; q < d; ++q) dst[q] = src[q];
    }
  }
  return x;
}

RankResult rank(const ExactMatrix& a, const RankOptions& options) {
  if (a.empty()) return {0, false, true};
  RankMode mode = options.mode;
  if (mode == RankMode::automatic) {
    mode = (a.field().is_rational() && a.cols() > options.exact_column_limit) ? RankMode::modular
                                                                              : RankMode::exact;
  }
  if (mode == RankMode::modular) {
    if (!a.field().is_rational()) throw Error("modular rank requires the rational field");
    const ModularRank m = modular_rank(a, options.seed);
    return {m.rank, true, m.agreed};
  }
  return {exact_rank(a), false, true};
}

RankKernelImage rank_kernel_image(const ExactMatrix& a, RankMode mode, std::uint64_t seed) {
  RankKernelImage out;
  if (mode == RankMode::automatic) {
    mode = (a.field().is_rational() && a.cols() > 2000) ? RankMode::modular : RankMode::exact;
  }
  out.mode_used = mode;
  if (mode == RankMode::modular) {
    if (!a.field().is_rational()) {
      throw Error("modular mode is only available over Q (field degree " +
                  std::to_string(a.field().degree()) + ")");
    }
    out.modular = modular_rank(a, seed);
    out.rank = out.modular->rank;
    out.probabilistic = true;
    return out;
  }
  const EchelonForm e = rref(a);
  out.rank = e.pivots.size();
  out.kernel = kernel_basis(a);
  out.image = a.select_cols(e.pivots);
  return out;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(ExactMatrix basis, std::vector<std::size_t> rows)
    : basis_(std::move(basis)), coord_rows_(std::move(rows)) {}

Subspace Subspace::kernel_of(const ExactMatrix& constraints) {
  auto [k, free] = kernel_with_free_rows(constraints);
  return Subspace(std::move(k), std::move(free));
}

Subspace Subspace::kernel_of(const SparseMatrix& constraints) {
  auto [k, free] = kernel_with_free_rows(constraints);
  return Subspace(std::move(k), std::move(free));
}

Subspace Subspace::span_of(const ExactMatrix& vectors) {
  SparseEchelon e = sparse_eliminate(vectors.transpose(), true);
  ExactMatrix basis = densify(vectors.field(), e.rows, e.rows.size(), vectors.rows()).transpose();
  return Subspace(std::move(basis), std::move(e.pivots));
}

Subspace Subspace::span_of(const SparseMatrix& vectors) {
  SparseEchelon e = sparse_eliminate(vectors.transpose(), true);
  ExactMatrix basis = densify(vectors.field(), e.rows, e.rows.size(), vectors.rows()).transpose();
  return Subspace(std::move(basis), std::move(e.pivots));
}

Subspace Subspace::whole(const FieldSpec& field, std::size_t n) {
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  return Subspace(ExactMatrix::identity(field, n), std::move(rows));
}

ExactMatrix Subspace::coordinates(const ExactMatrix& vectors) const {
  if (vectors.rows() != ambient_dim()) throw Error("Subspace::coordinates: ambient dimension mismatch");
  ExactMatrix c = vectors.select_rows(coord_rows_);
  if (!(basis_ * c == vectors)) throw InternalError("vector does not lie in the subspace");
  return c;
}

bool Subspace::contains(const ExactMatrix& vectors) const {
  if (vectors.rows() != ambient_dim()) return false;
  return basis_ * vectors.select_rows(coord_rows_) == vectors;
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.contains(b.basis()) &&
         b.contains(a.basis());
}

}  // namespace coxcoh
