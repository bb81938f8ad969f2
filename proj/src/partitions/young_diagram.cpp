#include "cliffalg/partitions/young_diagram.hpp"

#include <algorithm>
#include <numeric>

#include "cliffalg/error.hpp"

namespace cliffalg::partitions {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw InvalidInput("Young diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw InvalidInput("Young diagram rows must be weakly decreasing");
  }
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

YoungDiagram YoungDiagram::transpose() const {
  std::vector<int> cols;
  if (!rows_.empty()) {
    cols.resize(rows_.front(), 0);
    for (int r : rows_) {
      for (int c = 0; c < r; ++c) ++cols[c];
    }
  }
  return YoungDiagram(std::move(cols));
}

int YoungDiagram::diag_length() const {
  int t = 0;
  while (t < length() && rows_[t] >= t + 1) ++t;
  return t;
}

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

namespace {

void partitions_into(int remaining, int max_part, int rows_left, std::vector<int>& prefix,
                     std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, rows_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(int n, int i) {
  if (n < 1 || i < 0) throw InvalidInput("enumerate_diagrams needs n >= 1 and i >= 0");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  partitions_into(i, i, n, prefix, out);
  return out;
}

std::vector<YoungDiagram> enumerate_symmetric_diagrams(int n) {
  if (n < 1) throw InvalidInput("enumerate_symmetric_diagrams needs n >= 1");
  std::vector<YoungDiagram> out;
  for (int size = 0; size <= n * n; ++size) {
    for (const auto& d : enumerate_diagrams(n, size)) {
      if (d.row(0) <= n && d.is_symmetric()) out.push_back(d);
    }
  }
  return out;
}

std::vector<YoungDiagram> hooks(const YoungDiagram& alpha) {
  if (!alpha.is_symmetric()) throw InvalidInput("hooks need a symmetric diagram, got " + alpha.to_string());
  std::vector<YoungDiagram> out;
  for (int t = 1; t <= alpha.diag_length(); ++t) {
    const int arm = alpha.row(t - 1) - t;
    std::vector<int> rows{arm + 1};
    rows.insert(rows.end(), arm, 1);
    out.emplace_back(std::move(rows));
  }
  return out;
}

YoungDiagram doubled(const YoungDiagram& beta) {
  std::vector<int> rows = beta.rows();
  for (int& r : rows) r *= 2;
  return YoungDiagram(std::move(rows));
}

std::pair<YoungDiagram, int> halving_bijection(const YoungDiagram& alpha) {
  std::vector<int> rows;
  for (int r : alpha.rows()) {
    if (r / 2 > 0) rows.push_back(r / 2);
  }
  YoungDiagram beta(std::move(rows));
  return {beta, alpha.size() - 2 * beta.size()};
}

}  // namespace cliffalg::partitions
