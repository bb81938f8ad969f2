#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "cliffalg/partitions/schur.hpp"
#include "cliffalg/quadalg/presentation.hpp"
#include "cliffalg/quadalg/relations.hpp"

namespace cliffalg::maximal {

using partitions::SchurMultiset;
using quadalg::GradedAlgebraTable;

// B over all quadrics on k^n through degree D: dims from the section
// bases, mult(1, d) from the Clifford product, torus weights in every degree,
// and all products of degrees i + j <= pair_cap.
GradedAlgebraTable build_B(int n, int D, int pair_cap = 0);

// dim B_i = sum_s C(n, i-2s) dim Sym^s(Sym^2 V).
std::int64_t dim_from_sections(int n, int i);
// dim B_i = sum over |alpha| = i with at most n rows of dim Sigma^alpha V.
std::int64_t dim_from_diagrams(int n, int i);

struct DegreeDecomposition {
  int degree;
  SchurMultiset observed;
  // every alpha with |alpha| = i and at most n rows, once each
  bool multiplicity_free_and_complete;
};

std::vector<DegreeDecomposition> verify_decomposition(int n, int D);

// The degree-3 relations: Ker(V (x) Lambda^2 V -> Lambda^3 V) placed in
// V^{(x)3} by v (x) (w ^ u) -> w (x) v (x) u - u (x) v (x) w.
quadalg::Subspace cubic_relation_space(int n);
// T(V) / <cubic relations> with the standard torus weights.
quadalg::AlgebraPresentation cubic_presentation(int n);

struct RelationSyzygyReport {
  int n;
  // surjectivity of V (x) B_{d-1} -> B_d for d = 2..4
  std::vector<bool> generated;
  std::vector<quadalg::RelationDegree> degrees;
  bool cubic_kernel_matches;
  // V (x) R + R (x) V - Sigma^{2,2}: what a single quartic syzygy predicts
  SchurMultiset expected_quartic_kernel;
  SchurMultiset expected_syzygy;
};

// Kernels and characters of V^{(x)d} -> B_d for d = 2, 3, 4.
RelationSyzygyReport relation_and_syzygy_report(int n);

}  // namespace cliffalg::maximal
