#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cliffalg/exactla/sparse_matrix.hpp"
#include "cliffalg/quadalg/presentation.hpp"

namespace cliffalg::quadalg {

// A connected graded algebra through degree max_degree(), given on chosen
// bases. mult(i, j) maps A_i (x) A_j -> A_{i+j}; column x * dim A_j + y holds
// the product of basis elements x and y. Only the pairs a caller needs are
// stored.
class GradedAlgebraTable {
 public:
  explicit GradedAlgebraTable(std::vector<std::size_t> dims);

  int max_degree() const { return static_cast<int>(dims_.size()) - 1; }
  int ngen() const { return static_cast<int>(dim(1)); }
  // 0 in negative degrees; throws InvalidInput past max_degree().
  std::size_t dim(int d) const;
  const std::vector<std::size_t>& dims() const { return dims_; }
  HilbertSeries hilbert() const;

  // Throws DimensionMismatch on a wrongly shaped matrix.
  void set_mult(int i, int j, exactla::SparseMatrix m);
  bool has_mult(int i, int j) const { return mult_.count({i, j}) > 0; }
  // Throws InvalidInput when the pair was not stored.
  const exactla::SparseMatrix& mult(int i, int j) const;

  void set_weights(int d, std::vector<Weight> weights);
  const std::vector<Weight>* weights(int d) const;

 private:
  std::vector<std::size_t> dims_;
  std::map<std::pair<int, int>, exactla::SparseMatrix> mult_;
  std::map<int, std::vector<Weight>> weights_;
};

// Checks (xy)z = x(yz) on every triple of basis elements of degrees i, j, l.
// Needs mult for (i,j), (i+j,l), (j,l) and (i,j+l).
bool associative_on_basis(const GradedAlgebraTable& t, int i, int j, int l);

}  // namespace cliffalg::quadalg
