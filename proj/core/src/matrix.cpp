#include "coxcoh/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "coxcoh/budget.hpp"

namespace coxcoh {

namespace {
// Rough per-entry footprint of an mpq_class including its limb allocations.
constexpr std::size_t kBytesPerRational = 96;
}  // namespace

ExactMatrix::ExactMatrix() : field_(&rationals()) {}

ExactMatrix::ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), stride_(static_cast<std::size_t>(field.degree())) {
  const std::size_t n = rows * cols * stride_;
  charge_matrix_bytes(n * kBytesPerRational,
                      std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  data_.resize(n);
}

ExactMatrix ExactMatrix::identity(const FieldSpec& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i)[0] = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  ExactMatrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("from_rows: ragged input");
    for (std::size_t j = 0; j < c; ++j) m.entry(i, j)[0] = rows[i][j];
  }
  return m;
}

bool ExactMatrix::is_zero(std::size_t i, std::size_t j) const {
  const Rational* p = data_.data() + (i * cols_ + j) * stride_;
  for (std::size_t k = 0; k < stride_; ++k)
    if (sgn(p[k]) != 0) return false;
  return true;
}

FieldElement ExactMatrix::at(std::size_t i, std::size_t j) const {
  const auto e = entry(i, j);
  return FieldElement(*field_, std::vector<Rational>(e.begin(), e.end()));
}

void ExactMatrix::set(std::size_t i, std::size_t j, const FieldElement& value) {
  const FieldElement v = embed(value, *field_);
  auto e = entry(i, j);
  const auto c = v.coeffs();
  for (std::size_t k = 0; k < stride_; ++k) e[k] = c[k];
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  auto e = entry(i, j);
  e[0] = value;
  for (std::size_t k = 1; k < stride_; ++k) e[k] = 0;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) n += is_zero(i, j) ? 0 : 1;
  return n;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_zero(i, j)) continue;
      auto src = entry(i, j);
      auto dst = t.entry(j, i);
      for (std::size_t k = 0; k < stride_; ++k) dst[k] = src[k];
    }
  return t;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& factor) const {
  const FieldElement f = embed(factor, *field_);
  ExactMatrix out(*field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_zero(i, j)) continue;
      field_->mul(entry(i, j), f.coeffs(), out.entry(i, j));
    }
  return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
  ExactMatrix out(*this);
  for (auto& x : out.data_)
    if (sgn(x) != 0) x *= factor;
  return out;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("block: out of range");
  ExactMatrix out(*field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      auto src = entry(r0 + i, c0 + j);
      auto dst = out.entry(i, j);
      for (std::size_t k = 0; k < stride_; ++k) dst[k] = src[k];
    }
  return out;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& src) {
  require_compatible(src, "set_block");
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw Error("set_block: out of range");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) {
      auto s = src.entry(i, j);
      auto d = entry(r0 + i, c0 + j);
      for (std::size_t k = 0; k < stride_; ++k) d[k] = s[k];
    }
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  ExactMatrix out(*field_, idx.size(), cols_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t j = 0; j < cols_; ++j) {
      auto s = entry(idx[r], j);
      auto d = out.entry(r, j);
      for (std::size_t k = 0; k < stride_; ++k) d[k] = s[k];
    }
  return out;
}

ExactMatrix ExactMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  ExactMatrix out(*field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      auto s = entry(i, idx[c]);
      auto d = out.entry(i, c);
      for (std::size_t k = 0; k < stride_; ++k) d[k] = s[k];
    }
  return out;
}

ExactMatrix ExactMatrix::over(const FieldSpec& target) const {
  if (&target == field_) return *this;
  ExactMatrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero(i, j)) out.set(i, j, at(i, j));
  return out;
}

void ExactMatrix::require_compatible(const ExactMatrix& other, const char* op) const {
  if (field_ != other.field_) throw Error(std::string(op) + ": field mismatch");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_compatible(rhs, "operator+");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("operator+: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(rhs.data_[k]) != 0) data_[k] += rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_compatible(rhs, "operator-");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("operator-: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(rhs.data_[k]) != 0) data_[k] -= rhs.data_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  a.require_compatible(b, "operator*");
  if (a.cols_ != b.rows_) {
    throw Error("operator*: shape mismatch " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  ExactMatrix c(*a.field_, a.rows_, b.cols_);
  // Nonzero column positions of each row of b, computed once.
  std::vector<std::vector<std::size_t>> b_support(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b.is_zero(k, j)) b_support[k].push_back(j);
  const FieldSpec& f = *a.field_;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (b_support[k].empty() || a.is_zero(i, k)) continue;
      const auto aik = a.entry(i, k);
      for (std::size_t j : b_support[k]) f.add_mul(c.entry(i, j), aik, b.entry(k, j));
    }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (a.data_[k] != b.data_[k]) return false;
  return true;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

ExactMatrix hstack(const std::vector<const ExactMatrix*>& parts) {
  if (parts.empty()) return {};
  const FieldSpec& f = parts.front()->field();
  const std::size_t rows = parts.front()->rows();
  std::size_t cols = 0;
  for (const auto* p : parts) {
    if (p->rows() != rows) throw Error("hstack: row mismatch");
    cols += p->cols();
  }
  ExactMatrix out(f, rows, cols);
  std::size_t c0 = 0;
  for (const auto* p : parts) {
    out.set_block(0, c0, *p);
    c0 += p->cols();
  }
  return out;
}

ExactMatrix vstack(const std::vector<const ExactMatrix*>& parts) {
  if (parts.empty()) return {};
  const FieldSpec& f = parts.front()->field();
  const std::size_t cols = parts.front()->cols();
  std::size_t rows = 0;
  for (const auto* p : parts) {
    if (p->cols() != cols) throw Error("vstack: column mismatch");
    rows += p->rows();
  }
  ExactMatrix out(f, rows, cols);
  std::size_t r0 = 0;
  for (const auto* p : parts) {
    out.set_block(r0, 0, *p);
    r0 += p->rows();
  }
  return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (&a.field() != &b.field()) throw Error("kron: field mismatch");
  const FieldSpec& f = a.field();
  ExactMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.is_zero(i, j)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.is_zero(k, l)) continue;
          f.mul(a.entry(i, j), b.entry(k, l), out.entry(i * b.rows() + k, j * b.cols() + l));
        }
    }
  return out;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  if (&a.field() != &b.field()) throw Error("direct_sum: field mismatch");
  ExactMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

ExactMatrix matrix_power(const ExactMatrix& a, unsigned e) {
  if (a.rows() != a.cols()) throw Error("matrix_power: non-square matrix");
  ExactMatrix result = ExactMatrix::identity(a.field(), a.rows());
  ExactMatrix base = a;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace coxcoh

namespace coxcoh {

SparseMatrix::SparseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix::SparseMatrix(const ExactMatrix& dense)
    : SparseMatrix(dense.field(), dense.rows(), dense.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (dense.is_zero(i, j)) continue;
      const auto e = dense.entry(i, j);
      columns_[j].push_back({i, std::vector<Rational>(e.begin(), e.end())});
    }
}

SparseMatrix SparseMatrix::permutation(const std::vector<std::size_t>& image) {
  SparseMatrix m(rationals(), image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m.columns_[j].push_back({image[j], {Rational(1)}});
  return m;
}

void SparseMatrix::push(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw Error("SparseMatrix::push: index out of range");
  if (!columns_[j].empty() && columns_[j].back().row >= i) throw Error("SparseMatrix::push: rows out of order");
  if (sgn(value) == 0) return;
  std::vector<Rational> v(static_cast<std::size_t>(field_->degree()));
  v[0] = value;
  columns_[j].push_back({i, std::move(v)});
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(*field_, cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) t.columns_[e.row].push_back({j, e.value});
  return t;
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  SparseMatrix out(*field_, rows_, cols_);
  if (sgn(factor) == 0) return out;
  out.columns_ = columns_;
  for (auto& col : out.columns_)
    for (auto& e : col)
      for (auto& x : e.value) x *= factor;
  return out;
}

SparseMatrix SparseMatrix::combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("sparse sum: shape mismatch");
  const FieldSpec& f = *a.field_;
  SparseMatrix c(f, a.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      const std::size_t rx = p < x.size() ? x[p].row : SIZE_MAX;
      const std::size_t ry = q < y.size() ? y[q].row : SIZE_MAX;
      if (rx < ry) {
        c.columns_[j].push_back(x[p++]);
      } else if (ry < rx) {
        Entry e = y[q++];
        if (subtract)
          for (auto& v : e.value) v = -v;
        c.columns_[j].push_back(std::move(e));
      } else {
        Entry e = x[p++];
        for (std::size_t k = 0; k < e.value.size(); ++k) {
          if (subtract)
            e.value[k] -= y[q].value[k];
          else
            e.value[k] += y[q].value[k];
        }
        ++q;
        if (!f.is_zero(e.value)) c.columns_[j].push_back(std::move(e));
      }
    }
  }
  return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return SparseMatrix::combine(a, b, false); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return SparseMatrix::combine(a, b, true); }

SparseMatrix sparse_vstack(const std::vector<const SparseMatrix*>& parts) {
  if (parts.empty()) return SparseMatrix(rationals(), 0, 0);
  const FieldSpec& f = parts.front()->field();
  const std::size_t cols = parts.front()->cols();
  std::size_t rows = 0;
  for (const auto* p : parts) {
    if (p->cols() != cols || &p->field() != &f) throw Error("sparse_vstack: shape mismatch");
    rows += p->rows();
  }
  SparseMatrix out(f, rows, cols);
  std::size_t r0 = 0;
  for (const auto* p : parts) {
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& e : p->columns_[j]) out.columns_[j].push_back({r0 + e.row, e.value});
    r0 += p->rows();
  }
  return out;
}

SparseMatrix SparseMatrix::identity(const FieldSpec& field, std::size_t n) {
  SparseMatrix m(field, n, n);
  std::vector<Rational> one(static_cast<std::size_t>(field.degree()));
  one[0] = 1;
  for (std::size_t j = 0; j < n; ++j) m.columns_[j].push_back({j, one});
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

ExactMatrix SparseMatrix::to_dense() const {
  ExactMatrix out(*field_, rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) {
      auto dst = out.entry(e.row, j);
      for (std::size_t k = 0; k < e.value.size(); ++k) dst[k] = e.value[k];
    }
  return out;
}

FieldElement SparseMatrix::trace() const {
  FieldElement t(*field_);
  for (std::size_t j = 0; j < std::min(rows_, cols_); ++j)
    for (const auto& e : columns_[j])
      if (e.row == j) t += FieldElement(*field_, e.value);
  return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field_ != b.field_) throw Error("sparse product: field mismatch");
  if (a.cols_ != b.rows_) throw Error("sparse product: shape mismatch");
  const FieldSpec& f = *a.field_;
  const std::size_t d = static_cast<std::size_t>(f.degree());
  SparseMatrix c(f, a.rows_, b.cols_);
  std::vector<std::vector<Rational>> acc(a.rows_);
  std::vector<bool> touched(a.rows_, false);
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < b.cols_; ++j) {
    rows.clear();
    for (const auto& bk : b.columns_[j])
      for (const auto& ai : a.columns_[bk.row]) {
        if (!touched[ai.row]) {
          touched[ai.row] = true;
          acc[ai.row].assign(d, Rational(0));
          rows.push_back(ai.row);
        }
        f.add_mul(acc[ai.row], ai.value, bk.value);
      }
    std::sort(rows.begin(), rows.end());
    for (std::size_t r : rows) {
      touched[r] = false;
      if (!f.is_zero(acc[r])) c.columns_[j].push_back({r, std::move(acc[r])});
    }
  }
  return c;
}

ExactMatrix operator*(const SparseMatrix& a, const ExactMatrix& b) {
  if (a.field_ != &b.field()) throw Error("sparse product: field mismatch");
  if (a.cols_ != b.rows()) throw Error("sparse product: shape mismatch");
  const FieldSpec& f = *a.field_;
  ExactMatrix c(f, a.rows_, b.cols());
  for (std::size_t k = 0; k < a.cols_; ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b.is_zero(k, j)) continue;
      for (const auto& ai : a.columns_[k]) f.add_mul(c.entry(ai.row, j), ai.value, b.entry(k, j));
    }
  return c;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t j = 0; j < a.cols_; ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].row != y[k].row || x[k].value != y[k].value) return false;
  }
  return true;
}

SparseMatrix sparse_power(const SparseMatrix& a, unsigned e) {
  if (a.rows() != a.cols()) throw Error("sparse_power: non-square matrix");
  if (e == 0) return SparseMatrix::identity(a.field(), a.rows());
  SparseMatrix result = a;
  SparseMatrix base = a;
  --e;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace coxcoh
