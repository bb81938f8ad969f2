#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cliffalg/exactla/sparse_matrix.hpp"

namespace cliffalg::exactla {

// Reduced row echelon form of a row set: leading entry of each row is 1,
// pivot columns strictly increasing, every pivot column zero in other rows.
struct EchelonForm {
  std::size_t cols = 0;
  std::vector<SparseVector> rows;
  std::vector<Index> pivots;

  std::size_t rank() const { return rows.size(); }
};

// Fraction-free elimination. Rows are scaled to primitive integer vectors,
// the pivot for each column is the sparsest row leading there (ties go to
// the earliest row), and the result is normalized at the end. The reduced
// form of a row space is unique, so the result does not depend on the
// elimination order.
//
// The default entry points split the rows into blocks with disjoint column
// supports and reduce the blocks concurrently with OpenMP. The serial
// namespace keeps the single-block reference path; both return identical
// values.
std::size_t rank(const SparseMatrix& m);
std::size_t rank(std::size_t cols, std::span<const SparseVector> rows);
EchelonForm reduced_row_echelon(const SparseMatrix& m);
EchelonForm reduced_row_echelon(std::size_t cols, std::span<const SparseVector> rows);

namespace serial {
std::size_t rank(const SparseMatrix& m);
std::size_t rank(std::size_t cols, std::span<const SparseVector> rows);
EchelonForm reduced_row_echelon(const SparseMatrix& m);
EchelonForm reduced_row_echelon(std::size_t cols, std::span<const SparseVector> rows);
}  // namespace serial

}  // namespace cliffalg::exactla
