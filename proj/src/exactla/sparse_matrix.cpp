#include "cliffalg/exactla/sparse_matrix.hpp"

#include <algorithm>

#include "cliffalg/error.hpp"

namespace cliffalg::exactla {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
  return v;
}

SparseVector SparseVector::unit(Index i, Rational value) {
  SparseVector v;
  if (value != 0) v.entries_.emplace_back(i, std::move(value));
  return v;
}

Rational SparseVector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index key) { return e.first < key; });
  if (it != entries_.end() && it->first == i) return it->second;
  return 0;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (factor == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational s = a->second + factor * b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Rational& factor) const {
  SparseVector v;
  if (factor == 0) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) v.entries_.emplace_back(i, x * factor);
  return v;
}

void SparseAccumulator::add(Index i, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(i, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparseAccumulator::add(const SparseVector& v, const Rational& factor) {
  if (factor == 0) return;
  for (const auto& [i, x] : v.entries()) add(i, x * factor);
}

bool SparseAccumulator::empty() const { return terms_.empty(); }

SparseVector SparseAccumulator::finish() const {
  std::vector<SparseVector::Entry> entries(terms_.begin(), terms_.end());
  return SparseVector::from_entries(std::move(entries));
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseVector> row_data)
    : rows_(rows), cols_(cols), data_(std::move(row_data)) {
  if (data_.size() != rows_) throw DimensionMismatch("row count does not match row data");
  for (const auto& r : data_) {
    if (!r.empty() && r.last() >= cols_) throw DimensionMismatch("matrix entry outside column range");
  }
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::span<const SparseVector> columns) {
  std::vector<std::vector<SparseVector::Entry>> buckets(rows);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, x] : columns[c].entries()) {
      if (r >= rows) throw DimensionMismatch("column entry outside row range");
      buckets[r].emplace_back(static_cast<Index>(c), x);
    }
  }
  std::vector<SparseVector> data;
  data.reserve(rows);
  for (auto& b : buckets) data.push_back(SparseVector::from_entries(std::move(b)));
  return SparseMatrix(rows, columns.size(), std::move(data));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense.front().size();
  std::vector<SparseVector> data;
  for (const auto& row : dense) {
    if (row.size() != cols) throw DimensionMismatch("ragged dense matrix");
    std::vector<SparseVector::Entry> entries;
    for (std::size_t c = 0; c < cols; ++c) entries.emplace_back(static_cast<Index>(c), row[c]);
    data.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return SparseMatrix(rows, cols, std::move(data));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<SparseVector> data;
  for (std::size_t i = 0; i < n; ++i) data.push_back(SparseVector::unit(static_cast<Index>(i)));
  return SparseMatrix(n, n, std::move(data));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const { return data_.at(r).at(static_cast<Index>(c)); }

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& r : data_) total += r.nnz();
  return total;
}

SparseMatrix SparseMatrix::transpose() const {
  const auto cols = columns();
  return SparseMatrix(cols_, rows_, cols);
}

std::vector<SparseVector> SparseMatrix::columns() const {
  std::vector<std::vector<SparseVector::Entry>> buckets(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, x] : data_[r].entries()) buckets[c].emplace_back(static_cast<Index>(r), x);
  }
  std::vector<SparseVector> out;
  out.reserve(cols_);
  for (auto& b : buckets) out.push_back(SparseVector::from_entries(std::move(b)));
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  if (!x.empty() && x.last() >= cols_) throw DimensionMismatch("vector longer than matrix columns");
  std::vector<SparseVector::Entry> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    const auto& row = data_[r].entries();
    auto a = row.begin();
    auto b = x.entries().begin();
    while (a != row.end() && b != x.entries().end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        s += a->second * b->second;
        ++a;
        ++b;
      }
    }
    if (s != 0) out.emplace_back(static_cast<Index>(r), std::move(s));
  }
  return SparseVector::from_entries(std::move(out));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("inner dimensions differ in matrix product");
  std::vector<SparseVector> data;
  data.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseAccumulator acc;
    for (const auto& [k, x] : data_[r].entries()) acc.add(rhs.data_[k], x);
    data.push_back(acc.finish());
  }
  return SparseMatrix(rows_, rhs.cols_, std::move(data));
}

}  // namespace cliffalg::exactla
