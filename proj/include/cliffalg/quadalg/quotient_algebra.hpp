#pragma once

#include <vector>

#include "cliffalg/quadalg/graded_algebra_table.hpp"
#include "cliffalg/quadalg/presentation.hpp"

namespace cliffalg::quadalg {

// Graded components of T(V)/<R> through a degree cap, built inductively:
// A_d is A_{d-1} (x) V modulo the images of A_{d-e} (x) R_e. The basis of
// A_d is the set of lexicographically first words independent modulo the
// ideal, so structure constants are deterministic.
class QuotientAlgebra {
 public:
  QuotientAlgebra(AlgebraPresentation p, int cap);

  const AlgebraPresentation& presentation() const { return p_; }
  int cap() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t dim(int d) const { return basis_.at(d).size(); }
  HilbertSeries hilbert() const;
  // Normal words of A_d, increasing.
  const std::vector<Word>& basis_words(int d) const { return basis_.at(d); }

  // x (in A_i coordinates) times the word w, in A_{i+|w|}.
  SparseVector multiply(int i, const SparseVector& x, const Word& w) const;
  SparseVector normal_form(const Word& w) const;
  // A_i (x) A_j -> A_{i+j} in the GradedAlgebraTable column convention.
  exactla::SparseMatrix mult_matrix(int i, int j) const;

  // dims through cap with mult(1, d) for every d < cap plus all pairs
  // i + j <= pair_cap; torus weights of the normal words when declared.
  GradedAlgebraTable table(int pair_cap = 0) const;

 private:
  SparseVector extend(int d, const SparseVector& x, int letter) const;

  AlgebraPresentation p_;
  std::vector<std::vector<Word>> basis_;
  // extension_[d][x * n + a] = normal form of basis(x) * a, for x in A_{d-1}
  std::vector<std::vector<SparseVector>> extension_;
};

}  // namespace cliffalg::quadalg
