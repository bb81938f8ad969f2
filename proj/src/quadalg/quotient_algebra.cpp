#include "cliffalg/quadalg/quotient_algebra.hpp"

#include <algorithm>

#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"

namespace cliffalg::quadalg {
namespace {

SparseVector reversed(const SparseVector& v, std::size_t size) {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(v.nnz());
  for (const auto& [i, x] : v.entries()) entries.emplace_back(static_cast<Index>(size - 1 - i), x);
  return SparseVector::from_entries(std::move(entries));
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(AlgebraPresentation p, int cap) : p_(std::move(p)) {
  if (cap < 0) throw InvalidInput("negative degree cap");
  const int n = p_.ngen();
  basis_.push_back({Word{}});
  extension_.emplace_back();
  for (int d = 1; d <= cap; ++d) {
    const std::size_t ambient = basis_[d - 1].size() * n;
    // Images of A_{d-e} (x) R_e inside A_{d-1} (x) V.
    std::vector<std::vector<SparseVector>> pieces;
    for (const auto& rel : p_.relations()) {
      const int e = rel.degree;
      if (e > d) continue;
      const std::size_t lower = basis_[d - e].size();
      std::vector<std::vector<SparseVector>> per_x(lower);
#pragma omp parallel for schedule(dynamic)
      for (long long x = 0; x < static_cast<long long>(lower); ++x) {
        // prefixes[u] = basis(x) * u for words u of length e - 1
        std::vector<SparseVector> prefixes{SparseVector::unit(static_cast<Index>(x))};
        for (int len = 1; len < e; ++len) {
          std::vector<SparseVector> next;
          next.reserve(prefixes.size() * n);
          for (const auto& v : prefixes) {
            for (int a = 0; a < n; ++a) next.push_back(extend(d - e + len, v, a));
          }
          prefixes = std::move(next);
        }
        for (const auto& r : rel.space.basis()) {
          exactla::SparseAccumulator acc;
          for (const auto& [widx, coeff] : r.entries()) {
            const auto& v = prefixes[widx / n];
            const int last = static_cast<int>(widx % n);
            for (const auto& [y, c] : v.entries()) acc.add(static_cast<Index>(y * n + last), coeff * c);
          }
          auto img = acc.finish();
          if (!img.empty()) per_x[x].push_back(reversed(img, ambient));
        }
      }
      pieces.insert(pieces.end(), per_x.begin(), per_x.end());
    }
    std::vector<SparseVector> gens;
    for (auto& piece : pieces) {
      for (auto& v : piece) gens.push_back(std::move(v));
    }
    // Reversed coordinates put the pivots on the last words, leaving the
    // first words as the quotient basis.
    const auto form = exactla::reduced_row_echelon(ambient, gens);
    std::vector<long long> pivot_row(ambient, -1);
    for (std::size_t r = 0; r < form.rows.size(); ++r) pivot_row[ambient - 1 - form.pivots[r]] = static_cast<long long>(r);
    std::vector<Index> quotient_index(ambient, 0);
    std::vector<Word> words;
    for (std::size_t j = 0; j < ambient; ++j) {
      if (pivot_row[j] >= 0) continue;
      quotient_index[j] = static_cast<Index>(words.size());
      Word w = basis_[d - 1][j / n];
      w.push_back(static_cast<int>(j % n));
      words.push_back(std::move(w));
    }
    std::vector<SparseVector> ext(ambient);
    for (std::size_t j = 0; j < ambient; ++j) {
      if (pivot_row[j] < 0) {
        ext[j] = SparseVector::unit(quotient_index[j]);
        continue;
      }
      std::vector<SparseVector::Entry> entries;
      for (const auto& [ri, x] : form.rows[pivot_row[j]].entries()) {
        const std::size_t orig = ambient - 1 - ri;
        if (orig == j) continue;
        entries.emplace_back(quotient_index[orig], -x);
      }
      ext[j] = SparseVector::from_entries(std::move(entries));
    }
    basis_.push_back(std::move(words));
    extension_.push_back(std::move(ext));
  }
}

SparseVector QuotientAlgebra::extend(int d, const SparseVector& x, int letter) const {
  const int n = p_.ngen();
  exactla::SparseAccumulator acc;
  for (const auto& [i, c] : x.entries()) acc.add(extension_[d][i * n + letter], c);
  return acc.finish();
}

HilbertSeries QuotientAlgebra::hilbert() const {
  std::vector<std::int64_t> c;
  for (const auto& b : basis_) c.push_back(static_cast<std::int64_t>(b.size()));
  return HilbertSeries(c);
}

SparseVector QuotientAlgebra::multiply(int i, const SparseVector& x, const Word& w) const {
  if (i + static_cast<int>(w.size()) > cap()) throw InvalidInput("product beyond the degree cap");
  SparseVector v = x;
  int d = i;
  for (int a : w) v = extend(++d, v, a);
  return v;
}

SparseVector QuotientAlgebra::normal_form(const Word& w) const { return multiply(0, SparseVector::unit(0), w); }

exactla::SparseMatrix QuotientAlgebra::mult_matrix(int i, int j) const {
  const std::size_t di = dim(i), dj = dim(j);
  std::vector<SparseVector> columns(di * dj);
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(di * dj); ++idx) {
    columns[idx] = multiply(i, SparseVector::unit(static_cast<Index>(idx / dj)), basis_[j][idx % dj]);
  }
  return exactla::SparseMatrix::from_columns(dim(i + j), columns);
}

GradedAlgebraTable QuotientAlgebra::table(int pair_cap) const {
  std::vector<std::size_t> dims;
  for (const auto& b : basis_) dims.push_back(b.size());
  GradedAlgebraTable t(dims);
  for (int d = 0; d < cap(); ++d) t.set_mult(1, d, mult_matrix(1, d));
  for (int i = 0; i <= std::min(pair_cap, cap()); ++i) {
    for (int j = 0; i + j <= std::min(pair_cap, cap()); ++j) {
      if (!t.has_mult(i, j)) t.set_mult(i, j, mult_matrix(i, j));
    }
  }
  if (p_.weights()) {
    for (int d = 0; d <= cap(); ++d) {
      std::vector<Weight> w;
      for (const auto& word : basis_[d]) w.push_back(p_.word_weight(word));
      t.set_weights(d, std::move(w));
    }
  }
  return t;
}

}  // namespace cliffalg::quadalg
