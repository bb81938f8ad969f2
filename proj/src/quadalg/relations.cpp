#include "cliffalg/quadalg/relations.hpp"

#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"

namespace cliffalg::quadalg {
namespace {

partitions::Polynomial pivot_character(const Subspace& s, int n, int d, const std::vector<Weight>& gen_weights) {
  partitions::Polynomial p(static_cast<int>(gen_weights[0].size()));
  for (Index pivot : s.pivots()) {
    Weight w(gen_weights[0].size(), 0);
    for (int a : word_letters(n, d, pivot)) {
      for (std::size_t c = 0; c < w.size(); ++c) w[c] += gen_weights[a][c];
    }
    p.add(w, 1);
  }
  return p;
}

partitions::Polynomial combine(const partitions::Polynomial& a, std::int64_t ca, const partitions::Polynomial& b,
                               std::int64_t cb) {
  partitions::Polynomial out(a.nvars());
  for (const auto& [e, c] : a.terms()) out.add(e, ca * c);
  for (const auto& [e, c] : b.terms()) out.add(e, cb * c);
  return out;
}

std::optional<partitions::SchurMultiset> schur_expansion(const partitions::Polynomial& p) {
  if (!p.is_symmetric()) return std::nullopt;
  return partitions::decompose_character(partitions::SymmetricPolynomial::from_polynomial(p));
}

}  // namespace

exactla::SparseMatrix word_map(const GradedAlgebraTable& t, int d) {
  const int n = t.ngen();
  if (d < 1) throw InvalidInput("word length must be at least 1");
  std::vector<SparseVector> columns;
  for (int a = 0; a < n; ++a) columns.push_back(SparseVector::unit(static_cast<Index>(a)));
  for (int len = 2; len <= d; ++len) {
    const auto m = t.mult(1, len - 1).columns();
    const std::size_t lower = t.dim(len - 1);
    std::vector<SparseVector> next(columns.size() * n);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(next.size()); ++idx) {
      const std::size_t a = idx / columns.size();
      exactla::SparseAccumulator acc;
      for (const auto& [x, c] : columns[idx % columns.size()].entries()) acc.add(m[a * lower + x], c);
      next[idx] = acc.finish();
    }
    columns = std::move(next);
  }
  return exactla::SparseMatrix::from_columns(t.dim(d), columns);
}

std::vector<RelationDegree> minimal_relations(const GradedAlgebraTable& t, int dmax) {
  const int n = t.ngen();
  if (dmax > t.max_degree()) throw InvalidInput("relations requested beyond the table");
  for (int d = 2; d <= dmax; ++d) {
    if (exactla::rank(t.mult(1, d - 1)) != t.dim(d)) {
      throw GenerationFailure("V (x) A_" + std::to_string(d - 1) + " -> A_" + std::to_string(d) + " is not onto", d);
    }
  }
  const std::vector<Weight>* gen_weights = t.weights(1);
  std::vector<RelationDegree> out;
  Subspace previous(static_cast<std::size_t>(n));
  std::optional<partitions::Polynomial> previous_char;
  if (gen_weights) previous_char = partitions::Polynomial(static_cast<int>((*gen_weights)[0].size()));
  for (int d = 2; d <= dmax; ++d) {
    const std::size_t ambient = word_count(n, d);
    const Subspace kernel = exactla::kernel_basis(word_map(t, d));
    std::vector<SparseVector> gens;
    const std::size_t lower = word_count(n, d - 1);
    for (const auto& k : previous.basis()) {
      for (int a = 0; a < n; ++a) {
        std::vector<SparseVector::Entry> left, right;
        for (const auto& [i, x] : k.entries()) {
          left.emplace_back(static_cast<Index>(a * lower + i), x);
          right.emplace_back(static_cast<Index>(i * n + a), x);
        }
        gens.push_back(SparseVector::from_entries(std::move(left)));
        gens.push_back(SparseVector::from_entries(std::move(right)));
      }
    }
    const Subspace generated = Subspace::span(ambient, gens);
    std::vector<SparseVector> fresh;
    for (const auto& k : kernel.basis()) {
      auto r = generated.reduce(k);
      if (!r.empty()) fresh.push_back(std::move(r));
    }

    RelationDegree rd;
    rd.degree = d;
    rd.kernel_dim = kernel.dim();
    rd.generated_dim = generated.dim();
    rd.new_relations = Subspace::span(ambient, fresh);
    rd.syzygy_dim = static_cast<std::int64_t>(2 * n * previous.dim()) - static_cast<std::int64_t>(generated.dim());
    if (gen_weights) {
      partitions::Polynomial v(static_cast<int>((*gen_weights)[0].size()));
      for (const auto& w : *gen_weights) v.add(w, 1);
      const auto kernel_char = pivot_character(kernel, n, d, *gen_weights);
      const auto generated_char = pivot_character(generated, n, d, *gen_weights);
      rd.kernel_character = kernel_char;
      rd.kernel_schur = schur_expansion(kernel_char);
      rd.new_schur = schur_expansion(combine(kernel_char, 1, generated_char, -1));
      rd.syzygy_schur = schur_expansion(combine(v * *previous_char, 2, generated_char, -1));
      previous_char = kernel_char;
    }
    out.push_back(std::move(rd));
    previous = kernel;
  }
  return out;
}

}  // namespace cliffalg::quadalg
