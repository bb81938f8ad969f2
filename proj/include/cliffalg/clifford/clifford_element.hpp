#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffalg/clifford/quadric_family.hpp"

namespace cliffalg::clifford {

// Basis element e_S (x) y^m of the global-section algebra: a wedge of the
// generators in S (bitmask over 0..n-1, increasing order) times a monomial
// in the k commuting coefficient variables of U^dual.
struct BasisKey {
  std::uint32_t subset = 0;
  std::vector<int> exponents;

  int wedge_degree() const;
  int coefficient_degree() const;
  // |S| + 2 * |m|
  int degree() const { return wedge_degree() + 2 * coefficient_degree(); }

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

// Wedge degree, then the subset mask, then the coefficient monomial in
// graded-lex order.
bool operator<(const BasisKey& a, const BasisKey& b);

class CliffordElement {
 public:
  explicit CliffordElement(FamilyPtr family) : family_(std::move(family)) {}

  static CliffordElement scalar(FamilyPtr family, const Rational& value);
  static CliffordElement generator(FamilyPtr family, int a);
  static CliffordElement basis(FamilyPtr family, BasisKey key, const Rational& value = 1);

  const FamilyPtr& family() const { return family_; }
  const std::map<BasisKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // The common degree of all terms; empty for zero or mixed elements.
  std::optional<int> degree() const;

  void add_term(const BasisKey& key, const Rational& value);

  CliffordElement operator+(const CliffordElement& other) const;
  CliffordElement operator-(const CliffordElement& other) const;
  CliffordElement scaled(const Rational& factor) const;

  // "e0^e2*y1 - 3/2*y0^2" style rendering.
  std::string to_string() const;

  bool operator==(const CliffordElement& other) const { return terms_ == other.terms_; }

 private:
  FamilyPtr family_;
  std::map<BasisKey, Rational> terms_;
};

// Left multiplication by the generator e_a:
//   e_a * (w_1 ^ ... ^ w_m) = e_a ^ w_1 ^ ... ^ w_m
//                            + sum_i (-1)^(i-1) q(e_a, w_i) w_1 ^ .. (w_i omitted) .. ^ w_m
CliffordElement left_generator_action(int a, const CliffordElement& x);

// The Clifford product. A wedge basis element e_S with S = {s_1 < ... < s_m}
// acts by e_{s_1} ^ w' = e_{s_1} * w' - contraction, unfolded recursively,
// so the product is the Clifford algebra product transported to the wedge
// basis. Throws InvalidInput for elements over different families.
CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y);

}  // namespace cliffalg::clifford
