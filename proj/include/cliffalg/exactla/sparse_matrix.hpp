#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cliffalg/exactla/rational.hpp"

namespace cliffalg::exactla {

using Index = std::uint32_t;

// Sparse coordinate vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<Index, Rational>;

  SparseVector() = default;

  // Sorts, merges duplicate indices and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector unit(Index i, Rational value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Index leading() const { return entries_.front().first; }
  Index last() const { return entries_.back().first; }

  Rational at(Index i) const;

  // this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  SparseVector scaled(const Rational& factor) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// Order-independent accumulation of a sparse vector.
class SparseAccumulator {
 public:
  void add(Index i, const Rational& value);
  void add(const SparseVector& v, const Rational& factor = 1);
  bool empty() const;
  SparseVector finish() const;

 private:
  std::map<Index, Rational> terms_;
};

// Row-major sparse matrix over the rationals.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  // Throws DimensionMismatch when an entry falls outside cols.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseVector> row_data);

  static SparseMatrix from_columns(std::size_t rows, std::span<const SparseVector> columns);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return data_[r]; }
  const std::vector<SparseVector>& row_data() const { return data_; }
  Rational at(std::size_t r, std::size_t c) const;
  std::size_t nnz() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& x) const;
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  std::vector<SparseVector> columns() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

}  // namespace cliffalg::exactla
