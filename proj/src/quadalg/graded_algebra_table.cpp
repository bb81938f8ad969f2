#include "cliffalg/quadalg/graded_algebra_table.hpp"

#include "cliffalg/error.hpp"

namespace cliffalg::quadalg {

GradedAlgebraTable::GradedAlgebraTable(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty() || dims_[0] != 1) throw InvalidInput("graded table must start with dim A_0 = 1");
}

std::size_t GradedAlgebraTable::dim(int d) const {
  if (d < 0) return 0;
  if (d > max_degree()) throw InvalidInput("degree " + std::to_string(d) + " beyond the table");
  return dims_[d];
}

HilbertSeries GradedAlgebraTable::hilbert() const {
  return HilbertSeries(std::vector<std::int64_t>(dims_.begin(), dims_.end()));
}

void GradedAlgebraTable::set_mult(int i, int j, exactla::SparseMatrix m) {
  if (m.rows() != dim(i + j) || m.cols() != dim(i) * dim(j)) {
    throw DimensionMismatch("multiplication matrix has the wrong shape");
  }
  mult_[{i, j}] = std::move(m);
}

const exactla::SparseMatrix& GradedAlgebraTable::mult(int i, int j) const {
  auto it = mult_.find({i, j});
  if (it == mult_.end()) {
    throw InvalidInput("multiplication " + std::to_string(i) + " x " + std::to_string(j) + " not stored");
  }
  return it->second;
}

void GradedAlgebraTable::set_weights(int d, std::vector<Weight> weights) {
  if (weights.size() != dim(d)) throw DimensionMismatch("one weight per basis element expected");
  weights_[d] = std::move(weights);
}

const std::vector<Weight>* GradedAlgebraTable::weights(int d) const {
  auto it = weights_.find(d);
  return it == weights_.end() ? nullptr : &it->second;
}

bool associative_on_basis(const GradedAlgebraTable& t, int i, int j, int l) {
  const auto mij = t.mult(i, j).columns();
  const auto mjl = t.mult(j, l).columns();
  const auto& left = t.mult(i + j, l);
  const auto& right = t.mult(i, j + l);
  const std::size_t di = t.dim(i), dj = t.dim(j), dl = t.dim(l), djl = t.dim(j + l);
  const auto left_cols = left.columns();
  const auto right_cols = right.columns();
  for (std::size_t x = 0; x < di; ++x) {
    for (std::size_t y = 0; y < dj; ++y) {
      for (std::size_t z = 0; z < dl; ++z) {
        exactla::SparseAccumulator a, b;
        for (const auto& [u, c] : mij[x * dj + y].entries()) a.add(left_cols[u * dl + z], c);
        for (const auto& [v, c] : mjl[y * dl + z].entries()) b.add(right_cols[x * djl + v], c);
        if (!(a.finish() == b.finish())) return false;
      }
    }
  }
  return true;
}

}  // namespace cliffalg::quadalg
