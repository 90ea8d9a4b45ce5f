#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coxcoh/field.hpp"

namespace coxcoh {

/// Dense matrix over a FieldSpec. Entry (i, j) occupies `degree` consecutive
/// rationals in row-major order. Multiplication skips zero entries, so the
/// block-sparse matrices produced by the complexes stay cheap.
class ExactMatrix {
 public:
  ExactMatrix();
  ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const FieldSpec& field, std::size_t n);
  /// Row-major integer entries.
  static ExactMatrix from_rows(const FieldSpec& field, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  const FieldSpec& field() const { return *field_; }

  std::span<Rational> entry(std::size_t i, std::size_t j) {
    return {data_.data() + (i * cols_ + j) * stride_, stride_};
  }
  std::span<const Rational> entry(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * cols_ + j) * stride_, stride_};
  }
  bool is_zero(std::size_t i, std::size_t j) const;
  FieldElement at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& value);
  void set(std::size_t i, std::size_t j, const Rational& value);
  void set(std::size_t i, std::size_t j, long value) { set(i, j, Rational(value)); }

  bool is_zero() const;
  std::size_t nonzeros() const;

  ExactMatrix transpose() const;
  ExactMatrix scaled(const FieldElement& factor) const;
  ExactMatrix scaled(const Rational& factor) const;
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& src);
  ExactMatrix select_rows(const std::vector<std::size_t>& idx) const;
  ExactMatrix select_cols(const std::vector<std::size_t>& idx) const;
  /// Same matrix with entries embedded into a larger field.
  ExactMatrix over(const FieldSpec& target) const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

 private:
  void require_compatible(const ExactMatrix& other, const char* op) const;

  const FieldSpec* field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 1;
  std::vector<Rational> data_;
};

ExactMatrix hstack(const std::vector<const ExactMatrix*>& parts);
ExactMatrix vstack(const std::vector<const ExactMatrix*>& parts);
inline ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) { return hstack({&a, &b}); }
inline ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) { return vstack({&a, &b}); }
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
/// A^e for square A.
ExactMatrix matrix_power(const ExactMatrix& a, unsigned e);

/// Column-compressed copy of a matrix, for products of the very sparse
/// permutation-like matrices of group-algebra representations.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::vector<Rational> value;
  };

  SparseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  explicit SparseMatrix(const ExactMatrix& dense);
  static SparseMatrix identity(const FieldSpec& field, std::size_t n);
  /// Column j has a single 1 in row image[j].
  static SparseMatrix permutation(const std::vector<std::size_t>& image);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return *field_; }
  const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
  /// Appends a nonzero entry; rows within a column must arrive in increasing order.
  void push(std::size_t i, std::size_t j, const Rational& value);
  std::size_t nonzeros() const;

  ExactMatrix to_dense() const;
  SparseMatrix transpose() const;
  SparseMatrix scaled(const Rational& factor) const;
  /// Sum of the diagonal entries.
  FieldElement trace() const;

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend ExactMatrix operator*(const SparseMatrix& a, const ExactMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract);

  const FieldSpec* field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> columns_;  // sorted by row, no zeros

  friend SparseMatrix sparse_vstack(const std::vector<const SparseMatrix*>& parts);
};

SparseMatrix sparse_power(const SparseMatrix& a, unsigned e);
SparseMatrix sparse_vstack(const std::vector<const SparseMatrix*>& parts);

}  // namespace coxcoh
