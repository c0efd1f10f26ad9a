// Sparse (CSC) and dense matrices over an exact field.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/field.hpp"

namespace hh {

template <class K>
struct Entry {
  std::uint32_t index;
  K value;
};

// Sorted by index, no zeros.
template <class K>
using SparseVector = std::vector<Entry<K>>;

// Sorts by index, sums duplicates and drops zeros.
template <class K>
void normalize(SparseVector<K>& v);

template <class K>
struct Triplet {
  std::uint32_t row, col;
  K value;
};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class K>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<K> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<K> column(std::size_t j) const;
  std::vector<K> apply(std::span<const K> x) const;
  DenseMatrix transpose() const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

template <class K>
class SparseMatrix {
 public:
  SparseMatrix() : col_ptr_(1, 0) {}
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_ptr_(cols + 1, 0) {}

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet<K>> t);
  // Columns need not be sorted; they are normalized.
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector<K>> cols);
  static SparseMatrix identity(std::size_t n, const FieldSpec& f);
  static SparseMatrix from_dense(const DenseMatrix<K>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return row_idx_.size(); }

  std::span<const std::uint32_t> col_rows(std::size_t j) const {
    return {row_idx_.data() + col_ptr_[j], col_ptr_[j + 1] - col_ptr_[j]};
  }
  std::span<const K> col_values(std::size_t j) const {
    return {values_.data() + col_ptr_[j], col_ptr_[j + 1] - col_ptr_[j]};
  }
  SparseVector<K> column(std::size_t j) const;
  K at(std::size_t i, std::size_t j) const;

  std::vector<Triplet<K>> triplets() const;
  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const K& c) const;
  std::vector<K> apply(std::span<const K> x) const;

  SparseMatrix select_columns(std::span<const std::uint32_t> cols) const;
  // Keeps rows listed in `rows`, renumbered in that order.
  SparseMatrix select_rows(std::span<const std::uint32_t> rows) const;
  // [this | o] and [this ; o].
  SparseMatrix hconcat(const SparseMatrix& o) const;
  SparseMatrix vconcat(const SparseMatrix& o) const;
  DenseMatrix<K> to_dense() const;

  bool is_zero() const { return row_idx_.empty(); }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> col_ptr_;
  std::vector<std::uint32_t> row_idx_;
  std::vector<K> values_;
};

// Block matrix [[a, b], [c, d]]; empty (0x0) blocks are treated as zero of the
// appropriate shape. Shapes are given explicitly.
template <class K>
SparseMatrix<K> block_matrix(std::size_t top_rows, std::size_t bottom_rows, std::size_t left_cols,
                             std::size_t right_cols, const SparseMatrix<K>* a, const SparseMatrix<K>* b,
                             const SparseMatrix<K>* c, const SparseMatrix<K>* d);

// Kronecker product a (x) b with index (i_a * rows_b + i_b, j_a * cols_b + j_b).
template <class K>
SparseMatrix<K> kronecker(const SparseMatrix<K>& a, const SparseMatrix<K>& b);

}  // namespace hh
