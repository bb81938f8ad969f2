#include "cliffalg/clifford/sections.hpp"

#include <algorithm>
#include <bit>

#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"

namespace cliffalg::clifford {

std::int64_t section_dim(const QuadricFamily& family, int i, int p) {
  const int n = family.n();
  const int k = family.k();
  std::int64_t total = 0;
  if (p == 0 && i >= 0) {
    for (int s = 0; 2 * s <= i; ++s) total += binomial(n, i - 2 * s) * binomial(k + s - 1, s);
  } else if (p == k && i <= n - 2 * k) {
    for (int s = 0; i + 2 * k + 2 * s <= n; ++s) total += binomial(n, i + 2 * k + 2 * s) * binomial(k + s - 1, s);
  }
  return total;
}

ExtTable::ExtTable(const QuadricFamily& family, int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw InvalidInput("empty Ext range");
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      ExtEntry entry;
      for (int p : {0, family.k()}) {
        if (auto d = section_dim(family, j - i, p); d != 0) entry[p] = d;
      }
      entries_.emplace(std::pair{i, j}, std::move(entry));
    }
  }
}

ExtTable ext_table(const QuadricFamily& family, int lo, int hi) { return ExtTable(family, lo, hi); }

std::vector<std::vector<int>> monomials(int k, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(k, 0);
  // exponents in decreasing lexicographic order
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (k == 0) {
    if (s == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, s);
  return out;
}

SectionBasis::SectionBasis(FamilyPtr family, int degree) : family_(std::move(family)), degree_(degree) {
  const int n = family_->n();
  const int k = family_->k();
  if (degree >= 0) {
    for (int m = degree % 2; m <= std::min(n, degree); m += 2) {
      const auto monos = monomials(k, (degree - m) / 2);
      std::vector<std::uint32_t> subsets;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) == m) subsets.push_back(mask);
      }
      for (auto mask : subsets) {
        for (const auto& e : monos) keys_.push_back(BasisKey{mask, e});
      }
    }
  }
  std::sort(keys_.begin(), keys_.end());
  for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], static_cast<exactla::Index>(i));

  if (const auto& cw = family_->coefficient_weights()) {
    weights_.reserve(keys_.size());
    for (const auto& key : keys_) {
      Weight w(n, 0);
      for (int a = 0; a < n; ++a) w[a] += (key.subset >> a) & 1;
      for (int c = 0; c < k; ++c) {
        for (int a = 0; a < n; ++a) w[a] += key.exponents[c] * (*cw)[c][a];
      }
      weights_.push_back(std::move(w));
    }
  }
}

exactla::Index SectionBasis::index_of(const BasisKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw InvalidInput("basis key not in this graded component");
  return it->second;
}

partitions::Polynomial SectionBasis::character() const {
  if (!has_weights()) throw InvalidInput("family carries no torus weights");
  partitions::Polynomial p(family_->n());
  for (const auto& w : weights_) p.add(w, 1);
  return p;
}

}  // namespace cliffalg::clifford
