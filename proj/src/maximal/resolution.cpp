#include "cliffalg/maximal/resolution.hpp"

#include "cliffalg/maximal/algebra.hpp"
#include "cliffalg/partitions/schur.hpp"
#include "cliffalg/quadalg/hilbert_series.hpp"

namespace cliffalg::maximal {
namespace {

std::string schur_label(const YoungDiagram& alpha) {
  if (alpha.empty()) return "k";
  if (alpha == YoungDiagram{1}) return "V";
  return "S" + alpha.to_string();
}

}  // namespace

std::int64_t ResolutionTermTable::module_rank(int i) const {
  std::int64_t total = 0;
  for (const auto& t : terms.at(i)) total += t.schur_dim;
  return total;
}

std::vector<std::int64_t> ResolutionTermTable::euler_polynomial() const {
  std::vector<std::int64_t> p(n * n + 1, 0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (const auto& t : terms[i]) p[t.shift] += (i % 2 ? -1 : 1) * t.schur_dim;
  }
  return p;
}

ResolutionTermTable resolution_terms(int n) {
  ResolutionTermTable table{n, std::vector<std::vector<ResolutionTerm>>(n * (n + 1) / 2 + 1)};
  const std::int64_t spinor = std::int64_t{1} << (n - 1);
  for (const auto& alpha : partitions::enumerate_symmetric_diagrams(n)) {
    const int i = (alpha.size() + alpha.diag_length()) / 2;
    const auto dim = partitions::schur_dim(alpha, n);
    const std::string shift = std::to_string(alpha.size());
    table.terms[i].push_back(ResolutionTerm{alpha, alpha.size(), dim, spinor * dim,
                                            schur_label(alpha) + "⊗B(-" + shift + ")",
                                            schur_label(alpha) + "⊗B_{-" + shift + "}"});
  }
  // within a term, larger diagrams first
  for (auto& term : table.terms) {
    std::stable_sort(term.begin(), term.end(), [](const ResolutionTerm& a, const ResolutionTerm& b) {
      return a.shift > b.shift;
    });
  }
  return table;
}

bool euler_identity_check(int n, int D) {
  auto p = resolution_terms(n).euler_polynomial();
  p.resize(D + 1, 0);
  std::vector<std::int64_t> h;
  for (int i = 0; i <= D; ++i) h.push_back(dim_from_sections(n, i));
  return (quadalg::HilbertSeries(p) * quadalg::HilbertSeries(h)).is_one();
}

std::vector<DualEntry> dual_table(int n) {
  std::vector<DualEntry> out;
  for (const auto& alpha : partitions::enumerate_symmetric_diagrams(n)) {
    out.push_back(DualEntry{alpha, alpha.size(), (alpha.size() + alpha.diag_length()) / 2,
                            partitions::schur_dim(alpha, n)});
  }
  return out;
}

}  // namespace cliffalg::maximal
