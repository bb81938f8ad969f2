#pragma once

#include <optional>
#include <vector>

#include "cliffalg/exactla/subspace.hpp"
#include "cliffalg/quadalg/hilbert_series.hpp"

namespace cliffalg::quadalg {

using exactla::Index;
using exactla::Rational;
using exactla::SparseVector;
using exactla::Subspace;
using Word = std::vector<int>;
using Weight = std::vector<int>;

// Words of length d over n letters are indexed lexicographically, the first
// letter most significant.
std::size_t word_count(int n, int d);
Index word_index(int n, const Word& w);
Word word_letters(int n, int d, Index index);

struct Relation {
  int degree;
  Subspace space;
};

// T(V) / <R> with V = k^ngen. Generator weights, when given, grade
// everything by torus weight.
class AlgebraPresentation {
 public:
  explicit AlgebraPresentation(int ngen, std::optional<std::vector<Weight>> weights = std::nullopt);

  // Throws InvalidInput for degree < 2 and DimensionMismatch when the
  // subspace does not live in ngen^degree.
  void add_relations(int degree, Subspace space);

  int ngen() const { return ngen_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::optional<std::vector<Weight>>& weights() const { return weights_; }
  Weight word_weight(const Word& w) const;

 private:
  int ngen_;
  std::vector<Relation> relations_;
  std::optional<std::vector<Weight>> weights_;
};

// Span of V^{(x)a} (x) R_e (x) V^{(x)b} over a + e + b = d, by brute force.
Subspace ideal_component(const AlgebraPresentation& p, int d);
std::size_t component_dim(const AlgebraPresentation& p, int d);
HilbertSeries hilbert(const AlgebraPresentation& p, int cap);

}  // namespace cliffalg::quadalg
