#pragma once

#include <cstddef>
#include <vector>

#include "cliffalg/exactla/elimination.hpp"
#include "cliffalg/exactla/sparse_matrix.hpp"

namespace cliffalg::exactla {

// A linear subspace of Q^ambient, held by its reduced echelon basis. Two
// subspaces are equal iff their bases compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const SparseVector> vectors);
  static Subspace full(std::size_t ambient_dim);
  static Subspace from_echelon(EchelonForm form);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  // The representative of v modulo this subspace with zero pivot coordinates.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<Index> pivots_;
};

// Right kernel of m.
Subspace kernel_basis(const SparseMatrix& m);
// Span of the rows of m.
Subspace row_space(const SparseMatrix& m);
// Span of the columns of m.
Subspace column_space(const SparseMatrix& m);

// Throw DimensionMismatch on differing ambient dimensions.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
// Vectors of the dual space pairing to zero with a under the coordinate dot
// product.
Subspace annihilator(const Subspace& a);

}  // namespace cliffalg::exactla
