#include "cliffalg/quadalg/duality.hpp"

#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"

namespace cliffalg::quadalg {

Subspace quadratic_dual(const Subspace& r, int n) {
  if (r.ambient_dim() != word_count(n, 2)) throw DimensionMismatch("quadratic relations must live in V (x) V");
  return exactla::annihilator(r);
}

bool frobenius_check(const GradedAlgebraTable& t, int topdeg) {
  if (topdeg < 0) throw NotFrobeniusShaped("negative top degree");
  if (t.max_degree() < topdeg + 1) throw NotFrobeniusShaped("table stops before the degree above the top");
  if (t.dim(topdeg) != 1) return false;
  for (int d = topdeg + 1; d <= t.max_degree(); ++d) {
    if (t.dim(d) != 0) return false;
  }
  for (int i = 0; i <= topdeg; ++i) {
    const std::size_t di = t.dim(i), dj = t.dim(topdeg - i);
    if (di != dj) return false;
    const auto& m = t.mult(i, topdeg - i);
    std::vector<std::vector<SparseVector::Entry>> rows(di);
    for (const auto& [col, x] : m.row(0).entries()) rows[col / dj].emplace_back(static_cast<Index>(col % dj), x);
    std::vector<SparseVector> pairing;
    for (auto& r : rows) pairing.push_back(SparseVector::from_entries(std::move(r)));
    if (exactla::rank(dj, pairing) != di) return false;
  }
  return true;
}

}  // namespace cliffalg::quadalg
