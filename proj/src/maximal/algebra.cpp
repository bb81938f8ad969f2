#include "cliffalg/maximal/algebra.hpp"

#include "cliffalg/clifford/multiplication.hpp"
#include "cliffalg/combinatorics.hpp"
#include "cliffalg/exactla/elimination.hpp"

namespace cliffalg::maximal {

using clifford::SectionBasis;
using quadalg::SparseVector;
using quadalg::Word;

GradedAlgebraTable build_B(int n, int D, int pair_cap) {
  const auto family = clifford::universal_family(n);
  std::vector<SectionBasis> bases;
  std::vector<std::size_t> dims;
  for (int d = 0; d <= D; ++d) {
    bases.emplace_back(family, d);
    dims.push_back(bases.back().size());
  }
  GradedAlgebraTable t(dims);
  for (int d = 0; d <= D; ++d) t.set_weights(d, bases[d].weights());
  for (int d = 0; d < D; ++d) t.set_mult(1, d, clifford::product_matrix(family, 1, d));
  for (int i = 0; i <= std::min(pair_cap, D); ++i) {
    for (int j = 0; i + j <= std::min(pair_cap, D); ++j) {
      if (!t.has_mult(i, j)) t.set_mult(i, j, clifford::product_matrix(family, i, j));
    }
  }
  return t;
}

std::int64_t dim_from_sections(int n, int i) {
  const int k = n * (n + 1) / 2;
  std::int64_t total = 0;
  for (int s = 0; 2 * s <= i; ++s) total += binomial(n, i - 2 * s) * binomial(k + s - 1, s);
  return total;
}

std::int64_t dim_from_diagrams(int n, int i) {
  std::int64_t total = 0;
  for (const auto& alpha : partitions::enumerate_diagrams(n, i)) total += partitions::schur_dim(alpha, n);
  return total;
}

std::vector<DegreeDecomposition> verify_decomposition(int n, int D) {
  const auto family = clifford::universal_family(n);
  std::vector<DegreeDecomposition> out;
  for (int i = 0; i <= D; ++i) {
    const auto character = partitions::SymmetricPolynomial::from_polynomial(SectionBasis(family, i).character());
    auto observed = partitions::decompose_character(character);
    SchurMultiset expected;
    for (const auto& alpha : partitions::enumerate_diagrams(n, i)) expected.add(alpha, 1);
    out.push_back(DegreeDecomposition{i, observed, observed == expected});
  }
  return out;
}

quadalg::Subspace cubic_relation_space(int n) {
  // V (x) Lambda^2 V with basis (a, b < c), mapped to Lambda^3 V.
  std::vector<std::array<int, 3>> source;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) source.push_back({a, b, c});
    }
  }
  std::map<std::array<int, 3>, exactla::Index> triples;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) triples.emplace(std::array{a, b, c}, static_cast<exactla::Index>(triples.size()));
    }
  }
  std::vector<SparseVector> columns;
  for (const auto& [a, b, c] : source) {
    if (a == b || a == c) {
      columns.emplace_back();
      continue;
    }
    // a ^ b ^ c with b < c: move a past the smaller of b, c
    std::array<int, 3> sorted{a, b, c};
    std::sort(sorted.begin(), sorted.end());
    const int moves = (a > b) + (a > c);
    columns.push_back(SparseVector::unit(triples.at(sorted), moves % 2 ? -1 : 1));
  }
  const auto kernel = exactla::kernel_basis(exactla::SparseMatrix::from_columns(triples.size(), columns));
  std::vector<SparseVector> images;
  for (const auto& v : kernel.basis()) {
    exactla::SparseAccumulator acc;
    for (const auto& [idx, x] : v.entries()) {
      const auto& [a, b, c] = source[idx];
      acc.add(quadalg::word_index(n, Word{b, a, c}), x);
      acc.add(quadalg::word_index(n, Word{c, a, b}), -x);
    }
    images.push_back(acc.finish());
  }
  return quadalg::Subspace::span(quadalg::word_count(n, 3), images);
}

quadalg::AlgebraPresentation cubic_presentation(int n) {
  std::vector<quadalg::Weight> weights(n, quadalg::Weight(n, 0));
  for (int a = 0; a < n; ++a) weights[a][a] = 1;
  quadalg::AlgebraPresentation p(n, weights);
  p.add_relations(3, cubic_relation_space(n));
  return p;
}

RelationSyzygyReport relation_and_syzygy_report(int n) {
  const auto t = build_B(n, 4);
  RelationSyzygyReport report;
  report.n = n;
  for (int d = 2; d <= 4; ++d) report.generated.push_back(exactla::rank(t.mult(1, d - 1)) == t.dim(d));
  report.degrees = quadalg::minimal_relations(t, 4);
  // with no quadratic relations the new cubic relations are the whole kernel
  report.cubic_kernel_matches =
      report.degrees[0].kernel_dim == 0 && report.degrees[1].new_relations == cubic_relation_space(n);

  const SchurMultiset v{{partitions::YoungDiagram{1}, 1}};
  const SchurMultiset r{{partitions::YoungDiagram{2, 1}, 1}};
  const auto vr = partitions::decompose_character(partitions::character_of(v, n) * partitions::character_of(r, n));
  SchurMultiset expected;
  for (const auto& [alpha, m] : vr.terms()) expected.add(alpha, 2 * m);
  expected.add(partitions::YoungDiagram{2, 2}, -1);
  report.expected_quartic_kernel = expected.restricted_to_rows(n);
  report.expected_syzygy = SchurMultiset{{partitions::YoungDiagram{2, 2}, 1}}.restricted_to_rows(n);
  return report;
}

}  // namespace cliffalg::maximal
