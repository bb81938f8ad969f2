#include "cliffalg/minimal/toric.hpp"

#include <algorithm>

#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"
#include "cliffalg/quadalg/duality.hpp"
#include "cliffalg/quadalg/quotient_algebra.hpp"

namespace cliffalg::minimal {

using quadalg::SparseVector;
using quadalg::Word;

namespace {

std::vector<quadalg::Weight> unit_weights(int n) {
  std::vector<quadalg::Weight> w(n, quadalg::Weight(n, 0));
  for (int a = 0; a < n; ++a) w[a][a] = 1;
  return w;
}

// Nondecreasing words of length d.
std::vector<Word> sorted_words(int n, int d) {
  std::vector<Word> out;
  Word w(d, 0);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == d) {
      out.push_back(w);
      return;
    }
    for (int a = from; a < n; ++a) {
      w[pos] = a;
      self(self, pos + 1, a);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

quadalg::AlgebraPresentation toric_presentation(const ToricParameters& p) {
  const int n = p.n;
  std::vector<SparseVector> rels;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rels.push_back(SparseVector::from_entries(
          {{quadalg::word_index(n, {i, j}), 1}, {quadalg::word_index(n, {j, i}), -p.q}}));
    }
  }
  quadalg::AlgebraPresentation out(n, unit_weights(n));
  out.add_relations(2, quadalg::Subspace::span(n * n, rels));
  return out;
}

ToricFamilyResult toric_family(const ToricParameters& p, int D) {
  auto presentation = toric_presentation(p);
  auto hilbert = quadalg::QuotientAlgebra(presentation, D).hilbert();
  auto dual_relations = quadalg::quadratic_dual(presentation.relations()[0].space, p.n);
  quadalg::AlgebraPresentation dual(p.n);
  dual.add_relations(2, dual_relations);
  const quadalg::QuotientAlgebra dual_algebra(dual, p.n + 1);
  std::vector<std::size_t> dual_dims;
  for (int d = 0; d <= p.n + 1; ++d) dual_dims.push_back(dual_algebra.dim(d));
  return ToricFamilyResult{std::move(presentation), std::move(hilbert), std::move(dual_relations),
                           std::move(dual_dims)};
}

bool pbw_check(const ToricParameters& p, int D) {
  if (p.q == 0) throw NotApplicable("the sorted-monomial basis is not claimed at q = 0");
  return pbw_check(toric_presentation(p), D);
}

bool pbw_check(const quadalg::AlgebraPresentation& p, int D) {
  const int n = p.ngen();
  const quadalg::QuotientAlgebra a(p, D);
  for (int d = 0; d <= D; ++d) {
    const auto words = sorted_words(n, d);
    if (words.size() != static_cast<std::size_t>(binomial(n + d - 1, d)) || a.dim(d) != words.size()) return false;
    std::vector<SparseVector> images;
    for (const auto& w : words) images.push_back(a.normal_form(w));
    if (exactla::rank(a.dim(d), images) != words.size()) return false;
  }
  return true;
}

}  // namespace cliffalg::minimal
