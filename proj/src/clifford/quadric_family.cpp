#include "cliffalg/clifford/quadric_family.hpp"

#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"
#include "cliffalg/exactla/subspace.hpp"

namespace cliffalg::clifford {
namespace {

void check_shape(int n, const std::vector<Matrix>& basis) {
  if (n < 1) throw ValidationError("quadric family needs n >= 1");
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Matrix& m = basis[c];
    if (static_cast<int>(m.size()) != n) {
      throw ValidationError("matrix " + std::to_string(c) + " does not have n rows");
    }
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != n) {
        throw ValidationError("matrix " + std::to_string(c) + " does not have n columns");
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (m[a][b] != m[b][a]) throw ValidationError("matrix " + std::to_string(c) + " is not symmetric");
      }
    }
  }
}

// Upper-triangular flattening: one coordinate per unordered pair a <= b.
exactla::SparseVector flatten(int n, const Matrix& m) {
  std::vector<exactla::SparseVector::Entry> entries;
  exactla::Index idx = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) entries.emplace_back(idx++, m[a][b]);
  }
  return exactla::SparseVector::from_entries(std::move(entries));
}

}  // namespace

QuadricFamily::QuadricFamily(int n, std::vector<Matrix> basis, std::string label)
    : n_(n), basis_(std::move(basis)), label_(std::move(label)) {
  pairing_.resize(static_cast<std::size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      std::vector<exactla::SparseVector::Entry> entries;
      for (int c = 0; c < k(); ++c) entries.emplace_back(static_cast<exactla::Index>(c), basis_[c][a][b]);
      pairing_[a * n_ + b] = exactla::SparseVector::from_entries(std::move(entries));
    }
  }
  std::vector<Weight> weights;
  for (const Matrix& m : basis_) {
    int pa = -1;
    int pb = -1;
    bool single = true;
    for (int a = 0; a < n_ && single; ++a) {
      for (int b = a; b < n_; ++b) {
        if (m[a][b] == 0) continue;
        if (pa >= 0) {
          single = false;
          break;
        }
        pa = a;
        pb = b;
      }
    }
    if (!single || pa < 0) return;
    Weight w(n_, 0);
    ++w[pa];
    ++w[pb];
    weights.push_back(std::move(w));
  }
  weights_ = std::move(weights);
}

QuadricFamily QuadricFamily::create(int n, std::vector<Matrix> basis, std::string label) {
  check_shape(n, basis);
  const int k = static_cast<int>(basis.size());
  if (k < 1 || k > n * (n + 1) / 2) {
    throw ValidationError("family dimension k must satisfy 1 <= k <= n(n+1)/2");
  }
  std::vector<exactla::SparseVector> rows;
  for (const Matrix& m : basis) rows.push_back(flatten(n, m));
  const auto flat_dim = static_cast<std::size_t>(n * (n + 1) / 2);
  if (exactla::rank(flat_dim, rows) != static_cast<std::size_t>(k)) {
    const auto deps = exactla::kernel_basis(exactla::SparseMatrix::from_columns(flat_dim, rows));
    std::string vec;
    for (int c = 0; c < k; ++c) vec += (c ? ", " : "") + exactla::to_string(deps.basis()[0].at(c));
    throw ValidationError("family matrices are linearly dependent: sum of c_i * matrix_i = 0 for c = (" + vec + ")");
  }
  return QuadricFamily(n, std::move(basis), std::move(label));
}

QuadricFamily QuadricFamily::unchecked(int n, std::vector<Matrix> basis, std::string label) {
  check_shape(n, basis);
  return QuadricFamily(n, std::move(basis), std::move(label));
}

QuadricFamily QuadricFamily::with_basis_change(const Matrix& change, std::string label) const {
  const int kk = k();
  if (static_cast<int>(change.size()) != kk) throw ValidationError("basis change must be k x k");
  std::vector<exactla::SparseVector> rows;
  for (const auto& row : change) {
    if (static_cast<int>(row.size()) != kk) throw ValidationError("basis change must be k x k");
    std::vector<exactla::SparseVector::Entry> entries;
    for (int j = 0; j < kk; ++j) entries.emplace_back(static_cast<exactla::Index>(j), row[j]);
    rows.push_back(exactla::SparseVector::from_entries(std::move(entries)));
  }
  if (exactla::rank(static_cast<std::size_t>(kk), rows) != static_cast<std::size_t>(kk)) {
    throw ValidationError("basis change is not invertible");
  }
  std::vector<Matrix> next(kk, Matrix(n_, std::vector<Rational>(n_, 0)));
  for (int i = 0; i < kk; ++i) {
    for (int j = 0; j < kk; ++j) {
      if (change[i][j] == 0) continue;
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) next[i][a][b] += change[i][j] * basis_[j][a][b];
      }
    }
  }
  return QuadricFamily(n_, std::move(next), label.empty() ? label_ : std::move(label));
}

FamilyPtr universal_family(int n) {
  std::vector<Matrix> basis;
  const Matrix zero(n, std::vector<Rational>(n, 0));
  for (int a = 0; a < n; ++a) {
    Matrix m = zero;
    m[a][a] = 1;
    basis.push_back(std::move(m));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Matrix m = zero;
      m[a][b] = 1;
      m[b][a] = 1;
      basis.push_back(std::move(m));
    }
  }
  return std::make_shared<const QuadricFamily>(QuadricFamily::create(n, std::move(basis), "universal"));
}

FamilyPtr toric_family(int n) {
  std::vector<Matrix> basis;
  for (int a = 0; a < n; ++a) {
    Matrix m(n, std::vector<Rational>(n, 0));
    m[a][a] = 1;
    basis.push_back(std::move(m));
  }
  return std::make_shared<const QuadricFamily>(QuadricFamily::create(n, std::move(basis), "toric"));
}

std::vector<Rational> q_pair(const QuadricFamily& family, int a, int b) {
  if (a < 0 || b < 0 || a >= family.n() || b >= family.n()) throw InvalidInput("q_pair index out of range");
  std::vector<Rational> out;
  for (const auto& m : family.basis()) out.push_back(m[a][b]);
  return out;
}

}  // namespace cliffalg::clifford
