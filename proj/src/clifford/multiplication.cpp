#include "cliffalg/clifford/multiplication.hpp"

#include "cliffalg/error.hpp"

namespace cliffalg::clifford {
namespace {

std::vector<CliffordElement> basis_elements(const SectionBasis& basis) {
  std::vector<CliffordElement> out;
  out.reserve(basis.size());
  for (const auto& key : basis.keys()) out.push_back(CliffordElement::basis(basis.family(), key));
  return out;
}

// Word products level by level: the word a w' is L_a applied to w'.
exactla::SparseMatrix words_matrix(const FamilyPtr& family, int d, bool parallel) {
  if (d < 1) throw InvalidInput("word length must be at least 1");
  const int n = family->n();
  std::vector<CliffordElement> level{CliffordElement::scalar(family, 1)};
  for (int len = 1; len <= d; ++len) {
    const long long prev = static_cast<long long>(level.size());
    std::vector<CliffordElement> next(prev * n, CliffordElement(family));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long idx = 0; idx < prev * n; ++idx) {
      const int a = static_cast<int>(idx / prev);
      next[idx] = left_generator_action(a, level[idx % prev]);
    }
    level = std::move(next);
  }
  const SectionBasis basis(family, d);
  std::vector<exactla::SparseVector> columns(level.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long idx = 0; idx < static_cast<long long>(level.size()); ++idx) {
    columns[idx] = coordinates(basis, level[idx]);
  }
  return exactla::SparseMatrix::from_columns(basis.size(), columns);
}

exactla::SparseMatrix products(const FamilyPtr& family, int i, int j, bool parallel) {
  const SectionBasis left(family, i);
  const SectionBasis right(family, j);
  const SectionBasis target(family, i + j);
  const auto xs = basis_elements(left);
  const auto ys = basis_elements(right);
  const long long total = static_cast<long long>(xs.size() * ys.size());
  std::vector<exactla::SparseVector> columns(total);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long idx = 0; idx < total; ++idx) {
    columns[idx] = coordinates(target, clifford_mul(xs[idx / ys.size()], ys[idx % ys.size()]));
  }
  return exactla::SparseMatrix::from_columns(target.size(), columns);
}

}  // namespace

exactla::SparseVector coordinates(const SectionBasis& basis, const CliffordElement& x) {
  std::vector<exactla::SparseVector::Entry> entries;
  entries.reserve(x.terms().size());
  for (const auto& [key, value] : x.terms()) entries.emplace_back(basis.index_of(key), value);
  return exactla::SparseVector::from_entries(std::move(entries));
}

CliffordElement element(const SectionBasis& basis, const exactla::SparseVector& coords) {
  CliffordElement x(basis.family());
  for (const auto& [i, value] : coords.entries()) x.add_term(basis.key(i), value);
  return x;
}

exactla::SparseMatrix multiplication_matrix(const FamilyPtr& family, int d) { return words_matrix(family, d, true); }

exactla::SparseMatrix product_matrix(const FamilyPtr& family, int i, int j) { return products(family, i, j, true); }

namespace serial {

exactla::SparseMatrix multiplication_matrix(const FamilyPtr& family, int d) { return words_matrix(family, d, false); }

exactla::SparseMatrix product_matrix(const FamilyPtr& family, int i, int j) { return products(family, i, j, false); }

}  // namespace serial

}  // namespace cliffalg::clifford
