#include "cliffalg/exactla/subspace.hpp"

#include <algorithm>

#include "cliffalg/error.hpp"

namespace cliffalg::exactla {

Subspace Subspace::span(std::size_t ambient_dim, std::span<const SparseVector> vectors) {
  return from_echelon(reduced_row_echelon(ambient_dim, vectors));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(SparseVector::unit(static_cast<Index>(i)));
    s.pivots_.push_back(static_cast<Index>(i));
  }
  return s;
}

Subspace Subspace::from_echelon(EchelonForm form) {
  Subspace s(form.cols);
  s.basis_ = std::move(form.rows);
  s.pivots_ = std::move(form.pivots);
  return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (!v.empty() && v.last() >= ambient_) throw DimensionMismatch("vector outside subspace ambient");
  SparseAccumulator acc;
  acc.add(v);
  for (const auto& [i, x] : v.entries()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it != pivots_.end() && *it == i) acc.add(basis_[it - pivots_.begin()], -x);
  }
  return acc.finish();
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const SparseVector& v) { return contains(v); });
}

Subspace kernel_basis(const SparseMatrix& m) {
  const EchelonForm form = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : form.pivots) is_pivot[p] = true;
  // Column f of the echelon rows, gathered once.
  std::vector<std::vector<std::pair<Index, Rational>>> by_column(m.cols());
  for (std::size_t j = 0; j < form.rows.size(); ++j) {
    for (const auto& [c, x] : form.rows[j].entries()) {
      if (!is_pivot[c]) by_column[c].emplace_back(form.pivots[j], -x);
    }
  }
  std::vector<SparseVector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    auto entries = by_column[f];
    entries.emplace_back(static_cast<Index>(f), 1);
    vectors.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace row_space(const SparseMatrix& m) { return Subspace::span(m.cols(), m.row_data()); }

Subspace column_space(const SparseMatrix& m) {
  const auto cols = m.columns();
  return Subspace::span(m.rows(), cols);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum of different ambients");
  std::vector<SparseVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace annihilator(const Subspace& a) {
  return kernel_basis(SparseMatrix(a.dim(), a.ambient_dim(), a.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspace intersection of different ambients");
  }
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

}  // namespace cliffalg::exactla
