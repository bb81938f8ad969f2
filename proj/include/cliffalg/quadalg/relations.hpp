#pragma once

#include <optional>
#include <vector>

#include "cliffalg/partitions/schur.hpp"
#include "cliffalg/quadalg/graded_algebra_table.hpp"

namespace cliffalg::quadalg {

// Relations of a table generated in degree 1, degree by degree. K_d is the
// kernel of V^{(x)d} -> A_d and G_d = V (x) K_{d-1} + K_{d-1} (x) V is the
// part generated from lower degrees.
struct RelationDegree {
  int degree = 0;
  std::size_t kernel_dim = 0;
  std::size_t generated_dim = 0;
  // Representatives of K_d / G_d, reduced modulo G_d.
  Subspace new_relations;
  // dim of the kernel of V (x) K_{d-1} + K_{d-1} (x) V -> V^{(x)d}: the
  // linear syzygies among the relations of degree d - 1.
  std::int64_t syzygy_dim = 0;

  // Characters, present when the table carries torus weights; the Schur
  // expansions only when the character is symmetric.
  std::optional<partitions::Polynomial> kernel_character;
  std::optional<partitions::SchurMultiset> kernel_schur;
  std::optional<partitions::SchurMultiset> new_schur;
  std::optional<partitions::SchurMultiset> syzygy_schur;

  std::size_t new_dim() const { return kernel_dim - generated_dim; }
};

// Degrees 2..dmax. Checks surjectivity of V (x) A_{d-1} -> A_d first and
// throws GenerationFailure naming the first degree where it fails.
std::vector<RelationDegree> minimal_relations(const GradedAlgebraTable& t, int dmax);

// The map V^{(x)d} -> A_d on the table bases, composed from mult(1, *).
exactla::SparseMatrix word_map(const GradedAlgebraTable& t, int d);

}  // namespace cliffalg::quadalg
