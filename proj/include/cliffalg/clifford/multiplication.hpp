#pragma once

#include <vector>

#include "cliffalg/clifford/sections.hpp"
#include "cliffalg/exactla/sparse_matrix.hpp"

namespace cliffalg::clifford {

// Coordinates of a homogeneous element in the section basis of its degree.
exactla::SparseVector coordinates(const SectionBasis& basis, const CliffordElement& x);
CliffordElement element(const SectionBasis& basis, const exactla::SparseVector& coords);

// The map V^{(x)d} -> B_d sending a word a_1 ... a_d to e_{a_1} ... e_{a_d}.
// Columns are words in lexicographic order (first letter most significant),
// rows the section basis of B_d.
exactla::SparseMatrix multiplication_matrix(const FamilyPtr& family, int d);

// Left multiplication B_i (x) B_j -> B_{i+j}. Column x * dim B_j + y holds
// the coordinates of basis(x) * basis(y).
exactla::SparseMatrix product_matrix(const FamilyPtr& family, int i, int j);

// Columns are computed concurrently in the default versions.
namespace serial {
exactla::SparseMatrix multiplication_matrix(const FamilyPtr& family, int d);
exactla::SparseMatrix product_matrix(const FamilyPtr& family, int i, int j);
}  // namespace serial

}  // namespace cliffalg::clifford
