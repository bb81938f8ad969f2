#include "cliffalg/minimal/basepoint.hpp"

#include <map>

#include "cliffalg/clifford/sections.hpp"
#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"

namespace cliffalg::minimal {

const char* to_string(BasepointStatus s) {
  switch (s) {
    case BasepointStatus::empty_intersection: return "empty-intersection";
    case BasepointStatus::inconclusive: return "inconclusive";
    case BasepointStatus::common_zero_possible: return "common-zero-possible";
  }
  return "inconclusive";
}

BasepointCertificate basepoint_check(const FamilyPtr& family, int dcap) {
  const int n = family->n();
  if (family->k() != n) throw WrongFamilyShape("basepoint check needs dim U = dim V");
  if (dcap <= 0) dcap = 2 * n + 2;
  // each quadric as a polynomial: sum_a m_aa x_a^2 + sum_{a<b} 2 m_ab x_a x_b
  std::vector<std::vector<std::pair<std::vector<int>, exactla::Rational>>> quadrics;
  for (const auto& m : family->basis()) {
    std::vector<std::pair<std::vector<int>, exactla::Rational>> terms;
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        if (m[a][b] == 0) continue;
        std::vector<int> e(n, 0);
        ++e[a];
        ++e[b];
        terms.emplace_back(e, a == b ? m[a][b] : exactla::Rational(2 * m[a][b]));
      }
    }
    quadrics.push_back(std::move(terms));
  }
  BasepointCertificate cert{family, BasepointStatus::inconclusive, 0, dcap};
  for (int d = 2; d <= dcap; ++d) {
    std::map<std::vector<int>, exactla::Index> target;
    for (const auto& e : clifford::monomials(n, d)) target.emplace(e, static_cast<exactla::Index>(target.size()));
    std::vector<exactla::SparseVector> rows;
    for (const auto& shift : clifford::monomials(n, d - 2)) {
      for (const auto& q : quadrics) {
        std::vector<exactla::SparseVector::Entry> entries;
        for (const auto& [e, c] : q) {
          auto sum = e;
          for (int a = 0; a < n; ++a) sum[a] += shift[a];
          entries.emplace_back(target.at(sum), c);
        }
        rows.push_back(exactla::SparseVector::from_entries(std::move(entries)));
      }
    }
    if (exactla::rank(target.size(), rows) == static_cast<std::size_t>(binomial(n + d - 1, d))) {
      cert.status = BasepointStatus::empty_intersection;
      cert.witness_degree = d;
      break;
    }
  }
  return cert;
}

}  // namespace cliffalg::minimal
