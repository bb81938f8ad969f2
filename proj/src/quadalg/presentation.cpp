#include "cliffalg/quadalg/presentation.hpp"

#include "cliffalg/error.hpp"
#include "cliffalg/quadalg/quotient_algebra.hpp"

namespace cliffalg::quadalg {

std::size_t word_count(int n, int d) {
  std::size_t c = 1;
  for (int i = 0; i < d; ++i) c *= static_cast<std::size_t>(n);
  return c;
}

Index word_index(int n, const Word& w) {
  Index idx = 0;
  for (int a : w) idx = idx * n + a;
  return idx;
}

Word word_letters(int n, int d, Index index) {
  Word w(d);
  for (int i = d - 1; i >= 0; --i) {
    w[i] = static_cast<int>(index % n);
    index /= n;
  }
  return w;
}

AlgebraPresentation::AlgebraPresentation(int ngen, std::optional<std::vector<Weight>> weights)
    : ngen_(ngen), weights_(std::move(weights)) {
  if (ngen < 1) throw InvalidInput("presentation needs at least one generator");
  if (weights_ && static_cast<int>(weights_->size()) != ngen) {
    throw DimensionMismatch("one weight per generator expected");
  }
}

void AlgebraPresentation::add_relations(int degree, Subspace space) {
  if (degree < 2) throw InvalidInput("relations must have degree at least 2");
  if (space.ambient_dim() != word_count(ngen_, degree)) {
    throw DimensionMismatch("relation subspace does not live in V^(x)" + std::to_string(degree));
  }
  relations_.push_back(Relation{degree, std::move(space)});
}

Weight AlgebraPresentation::word_weight(const Word& w) const {
  if (!weights_) throw InvalidInput("presentation carries no weights");
  Weight total((*weights_)[0].size(), 0);
  for (int a : w) {
    for (std::size_t c = 0; c < total.size(); ++c) total[c] += (*weights_)[a][c];
  }
  return total;
}

Subspace ideal_component(const AlgebraPresentation& p, int d) {
  const int n = p.ngen();
  std::vector<SparseVector> gens;
  for (const auto& rel : p.relations()) {
    const int e = rel.degree;
    if (e > d) continue;
    for (int a = 0; a + e <= d; ++a) {
      const std::size_t left = word_count(n, a);
      const std::size_t right = word_count(n, d - e - a);
      const std::size_t middle = word_count(n, e);
      for (std::size_t u = 0; u < left; ++u) {
        for (std::size_t w = 0; w < right; ++w) {
          for (const auto& r : rel.space.basis()) {
            std::vector<SparseVector::Entry> entries;
            for (const auto& [idx, x] : r.entries()) {
              entries.emplace_back(static_cast<Index>((u * middle + idx) * right + w), x);
            }
            gens.push_back(SparseVector::from_entries(std::move(entries)));
          }
        }
      }
    }
  }
  return Subspace::span(word_count(n, d), gens);
}

std::size_t component_dim(const AlgebraPresentation& p, int d) { return QuotientAlgebra(p, d).dim(d); }

HilbertSeries hilbert(const AlgebraPresentation& p, int cap) { return QuotientAlgebra(p, cap).hilbert(); }

}  // namespace cliffalg::quadalg
