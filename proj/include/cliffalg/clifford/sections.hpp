#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cliffalg/clifford/clifford_element.hpp"
#include "cliffalg/partitions/symmetric_polynomial.hpp"

namespace cliffalg::clifford {

// dim H^p(P(U), B_i): for p = 0 and i >= 0 the sum over s of
// C(n, i-2s) C(k+s-1, s); for p = k and i <= n-2k the sum over s of
// C(n, i+2k+2s) C(k+s-1, s); zero otherwise.
std::int64_t section_dim(const QuadricFamily& family, int i, int p);

// Nonzero cohomology dimensions of B_{j-i}, keyed by cohomological degree.
using ExtEntry = std::map<int, std::int64_t>;

// Ext^*(B_i, B_j) for lo <= i, j <= hi, computed as H^*(B_{j-i}).
class ExtTable {
 public:
  ExtTable(const QuadricFamily& family, int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const ExtEntry& at(int i, int j) const { return entries_.at({i, j}); }

 private:
  int lo_;
  int hi_;
  std::map<std::pair<int, int>, ExtEntry> entries_;
};

ExtTable ext_table(const QuadricFamily& family, int lo, int hi);

// The basis of B_d = sum_s Lambda^{d-2s} V (x) Sym^s(U^dual), ordered by
// BasisKey. In degree 1 it is e_0, ..., e_{n-1}.
class SectionBasis {
 public:
  SectionBasis(FamilyPtr family, int degree);

  const FamilyPtr& family() const { return family_; }
  int degree() const { return degree_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<BasisKey>& keys() const { return keys_; }
  const BasisKey& key(std::size_t i) const { return keys_[i]; }
  // Throws InvalidInput for a key outside this component.
  exactla::Index index_of(const BasisKey& key) const;

  // Torus weight of each basis element when the family declares coefficient
  // weights: the indicator of S plus the weights of the coefficient monomial.
  bool has_weights() const { return !weights_.empty(); }
  const std::vector<Weight>& weights() const { return weights_; }
  // Sum of x^weight over the basis. Throws InvalidInput without weights.
  partitions::Polynomial character() const;

 private:
  FamilyPtr family_;
  int degree_;
  std::vector<BasisKey> keys_;
  std::map<BasisKey, exactla::Index> index_;
  std::vector<Weight> weights_;
};

// Degree-s monomials in k variables, in graded-lex order.
std::vector<std::vector<int>> monomials(int k, int s);

}  // namespace cliffalg::clifford
