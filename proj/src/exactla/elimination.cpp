#include "cliffalg/exactla/elimination.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cliffalg/error.hpp"

namespace cliffalg::exactla {
namespace {

using IntRow = std::vector<std::pair<Index, Integer>>;

// Rows below this many eliminations per pivot step are not worth a team.
constexpr std::size_t kParallelRowThreshold = 64;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_integer_row(const SparseVector& v) {
  Integer l = 1;
  for (const auto& [c, x] : v.entries()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  IntRow row;
  row.reserve(v.nnz());
  for (const auto& [c, x] : v.entries()) {
    Integer scaled = l / x.get_den();
    scaled *= x.get_num();
    row.emplace_back(c, std::move(scaled));
  }
  make_primitive(row);
  return row;
}

// Returns a*row - b*pivot where a, b cancel the shared leading entry.
IntRow eliminate(const IntRow& row, const IntRow& pivot) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  const Integer a = pivot.front().second / g;
  const Integer b = row.front().second / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto r = row.begin() + 1;
  auto p = pivot.begin() + 1;
  while (r != row.end() || p != pivot.end()) {
    if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
      out.emplace_back(r->first, a * r->second);
      ++r;
    } else if (r == row.end() || p->first < r->first) {
      out.emplace_back(p->first, -b * p->second);
      ++p;
    } else {
      Integer s = a * r->second - b * p->second;
      if (s != 0) out.emplace_back(r->first, std::move(s));
      ++r;
      ++p;
    }
  }
  make_primitive(out);
  return out;
}

// Clears `row` at column `col` using `pivot`, whose leading column is `col`.
void eliminate_at(IntRow& row, Index col, const IntRow& pivot) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, Index key) { return e.first < key; });
  if (it == row.end() || it->first != col) return;
  Integer g;
  mpz_gcd(g.get_mpz_t(), it->second.get_mpz_t(), pivot.front().second.get_mpz_t());
  const Integer a = pivot.front().second / g;
  const Integer b = it->second / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto r = row.begin();
  auto p = pivot.begin();
  while (r != row.end() || p != pivot.end()) {
    if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
      out.emplace_back(r->first, a * r->second);
      ++r;
    } else if (r == row.end() || p->first < r->first) {
      out.emplace_back(p->first, -b * p->second);
      ++p;
    } else {
      Integer s = a * r->second - b * p->second;
      if (s != 0) out.emplace_back(r->first, std::move(s));
      ++r;
      ++p;
    }
  }
  make_primitive(out);
  row = std::move(out);
}

// Forward elimination; returns rows with strictly increasing leading columns.
std::vector<IntRow> forward(std::vector<IntRow> input, bool parallel_steps) {
  std::map<Index, std::vector<IntRow>> buckets;
  for (auto& row : input) {
    if (!row.empty()) buckets[row.front().first].push_back(std::move(row));
  }
  std::vector<IntRow> echelon;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    std::vector<IntRow>& rows = node.mapped();
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() < rows[best].size()) best = i;
    }
    IntRow pivot = std::move(rows[best]);
    std::vector<IntRow> reduced(rows.size());
    const auto count = static_cast<long>(rows.size());
    const bool go_parallel = parallel_steps && rows.size() >= kParallelRowThreshold;
#pragma omp parallel for schedule(static) if (go_parallel)
    for (long i = 0; i < count; ++i) {
      if (static_cast<std::size_t>(i) == best) continue;
      reduced[i] = eliminate(rows[i], pivot);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (i == best || reduced[i].empty()) continue;
      buckets[reduced[i].front().first].push_back(std::move(reduced[i]));
    }
    echelon.push_back(std::move(pivot));
  }
  return echelon;
}

void back_substitute(std::vector<IntRow>& echelon) {
  for (std::size_t j = echelon.size(); j-- > 0;) {
    for (std::size_t k = j + 1; k < echelon.size(); ++k) {
      eliminate_at(echelon[j], echelon[k].front().first, echelon[k]);
    }
  }
}

EchelonForm normalize(std::size_t cols, std::vector<IntRow>& echelon) {
  EchelonForm form;
  form.cols = cols;
  form.rows.reserve(echelon.size());
  form.pivots.reserve(echelon.size());
  for (auto& row : echelon) {
    const Integer lead = row.front().second;
    std::vector<SparseVector::Entry> entries;
    entries.reserve(row.size());
    for (auto& [c, x] : row) {
      Rational q(x, lead);
      q.canonicalize();
      entries.emplace_back(c, std::move(q));
    }
    form.pivots.push_back(row.front().first);
    form.rows.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return form;
}

std::vector<IntRow> integer_rows(std::size_t cols, std::span<const SparseVector> rows) {
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (!r.empty() && r.last() >= cols) throw DimensionMismatch("row entry outside column range");
    if (!r.empty()) out.push_back(to_integer_row(r));
  }
  return out;
}

// Groups rows into blocks whose column supports are pairwise disjoint.
std::vector<std::vector<IntRow>> split_blocks(std::size_t cols, std::vector<IntRow> rows) {
  std::vector<Index> parent(cols);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& row : rows) {
    const Index root = find(row.front().first);
    for (const auto& [c, x] : row) {
      const Index other = find(c);
      if (other != root) parent[other] = root;
    }
  }
  std::map<Index, std::size_t> block_of_root;
  std::vector<std::vector<IntRow>> blocks;
  for (auto& row : rows) {
    const Index root = find(row.front().first);
    auto [it, inserted] = block_of_root.try_emplace(root, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(std::move(row));
  }
  return blocks;
}

template <class Reduce>
std::vector<std::vector<IntRow>> run_blocks(std::vector<std::vector<IntRow>>& blocks, Reduce reduce) {
  std::vector<std::vector<IntRow>> results(blocks.size());
  const auto count = static_cast<long>(blocks.size());
  if (count == 1) {
    results[0] = reduce(std::move(blocks[0]), true);
    return results;
  }
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < count; ++b) results[b] = reduce(std::move(blocks[b]), false);
  return results;
}

std::vector<IntRow> merge_by_pivot(std::vector<std::vector<IntRow>>& results) {
  std::vector<IntRow> merged;
  for (auto& block : results) {
    for (auto& row : block) merged.push_back(std::move(row));
  }
  std::sort(merged.begin(), merged.end(),
            [](const IntRow& a, const IntRow& b) { return a.front().first < b.front().first; });
  return merged;
}

}  // namespace

namespace serial {

std::size_t rank(std::size_t cols, std::span<const SparseVector> rows) {
  return forward(integer_rows(cols, rows), false).size();
}

std::size_t rank(const SparseMatrix& m) { return serial::rank(m.cols(), std::span<const SparseVector>(m.row_data())); }

EchelonForm reduced_row_echelon(std::size_t cols, std::span<const SparseVector> rows) {
  auto echelon = forward(integer_rows(cols, rows), false);
  back_substitute(echelon);
  return normalize(cols, echelon);
}

EchelonForm reduced_row_echelon(const SparseMatrix& m) {
  return serial::reduced_row_echelon(m.cols(), std::span<const SparseVector>(m.row_data()));
}

}  // namespace serial

std::size_t rank(std::size_t cols, std::span<const SparseVector> rows) {
  auto int_rows = integer_rows(cols, rows);
  if (int_rows.empty()) return 0;
  auto blocks = split_blocks(cols, std::move(int_rows));
  auto results = run_blocks(blocks, [](std::vector<IntRow> block, bool inner_parallel) {
    return forward(std::move(block), inner_parallel);
  });
  std::size_t total = 0;
  for (const auto& r : results) total += r.size();
  return total;
}

std::size_t rank(const SparseMatrix& m) { return rank(m.cols(), std::span<const SparseVector>(m.row_data())); }

EchelonForm reduced_row_echelon(std::size_t cols, std::span<const SparseVector> rows) {
  auto int_rows = integer_rows(cols, rows);
  if (int_rows.empty()) return EchelonForm{cols, {}, {}};
  auto blocks = split_blocks(cols, std::move(int_rows));
  auto results = run_blocks(blocks, [](std::vector<IntRow> block, bool inner_parallel) {
    auto echelon = forward(std::move(block), inner_parallel);
    back_substitute(echelon);
    return echelon;
  });
  auto merged = merge_by_pivot(results);
  return normalize(cols, merged);
}

EchelonForm reduced_row_echelon(const SparseMatrix& m) {
  return reduced_row_echelon(m.cols(), std::span<const SparseVector>(m.row_data()));
}

}  // namespace cliffalg::exactla
