#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffalg/exactla/rational.hpp"
#include "cliffalg/exactla/sparse_matrix.hpp"

namespace cliffalg::clifford {

using exactla::Rational;
using Matrix = std::vector<std::vector<Rational>>;
// Torus weight: multidegree in the coordinates of V.
using Weight = std::vector<int>;

// A k-dimensional space U of quadratic forms on V = k^n, given by k
// symmetric Gram matrices. Generators of V and the coefficient variables of
// U^dual are indexed from 0.
class QuadricFamily {
 public:
  // Throws ValidationError unless every matrix is n x n and symmetric, the
  // matrices are linearly independent and 1 <= k <= n(n+1)/2.
  static QuadricFamily create(int n, std::vector<Matrix> basis, std::string label = {});
  // Shape and symmetry are still checked; independence is not. The zero
  // family used to test the exterior-algebra degeneration needs this.
  static QuadricFamily unchecked(int n, std::vector<Matrix> basis, std::string label = {});

  int n() const { return n_; }
  int k() const { return static_cast<int>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::string& label() const { return label_; }

  // Coordinates of q(e_a, e_b) in the basis of U^dual dual to basis(): entry
  // c is basis()[c][a][b].
  const exactla::SparseVector& pairing(int a, int b) const { return pairing_[a * n_ + b]; }

  // When every basis quadric is a single monomial x_a x_b, the coefficient
  // variable c carries torus weight e_a + e_b and the algebra is graded by
  // weight. Empty otherwise.
  const std::optional<std::vector<Weight>>& coefficient_weights() const { return weights_; }

  // New basis element i is sum_j change[i][j] * basis()[j]. Throws
  // ValidationError when change is not invertible.
  QuadricFamily with_basis_change(const Matrix& change, std::string label = {}) const;

  bool operator==(const QuadricFamily& other) const { return n_ == other.n_ && basis_ == other.basis_; }

 private:
  QuadricFamily(int n, std::vector<Matrix> basis, std::string label);

  int n_ = 0;
  std::vector<Matrix> basis_;
  std::string label_;
  std::vector<exactla::SparseVector> pairing_;
  std::optional<std::vector<Weight>> weights_;
};

using FamilyPtr = std::shared_ptr<const QuadricFamily>;

// All quadrics: E_aa for each a, then E_ab + E_ba for a < b in lexicographic order.
FamilyPtr universal_family(int n);
// The coordinate squares x_1^2, ..., x_n^2.
FamilyPtr toric_family(int n);

// q(e_a, e_b) as a dense coordinate vector of length k.
std::vector<Rational> q_pair(const QuadricFamily& family, int a, int b);

}  // namespace cliffalg::clifford
