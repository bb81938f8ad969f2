#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cliffalg/partitions/symmetric_polynomial.hpp"
#include "cliffalg/partitions/young_diagram.hpp"

namespace cliffalg::partitions {

// A formal integer combination of Schur functors, zero multiplicities dropped.
class SchurMultiset {
 public:
  SchurMultiset() = default;
  SchurMultiset(std::initializer_list<std::pair<const YoungDiagram, std::int64_t>> init);

  void add(const YoungDiagram& alpha, std::int64_t multiplicity);
  std::int64_t multiplicity(const YoungDiagram& alpha) const;
  const std::map<YoungDiagram, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool multiplicity_free() const;

  // Drop every diagram with more than n rows.
  SchurMultiset restricted_to_rows(int n) const;
  // Sum of multiplicity * dim over the diagrams.
  std::int64_t dimension(int n) const;

  // "2S(3,1) + S(2,2)"; zero prints as "0".
  std::string to_string() const;

  friend bool operator==(const SchurMultiset&, const SchurMultiset&) = default;

 private:
  std::map<YoungDiagram, std::int64_t> terms_;
};

// Weyl dimension formula; 0 when alpha has more than n rows.
std::int64_t schur_dim(const YoungDiagram& alpha, int n);

// Number of semistandard tableaux of shape alpha and content mu.
std::int64_t kostka_number(const YoungDiagram& alpha, const Exponent& mu);

// Character of Sigma^alpha (k^n) in the monomial basis; degree_cap as in
// SymmetricPolynomial.
SymmetricPolynomial schur_polynomial(const YoungDiagram& alpha, int n,
                                     int degree_cap = SymmetricPolynomial::kNoCap);

// Expansion in Schur polynomials. Peels off the Schur polynomial of the
// lexicographically largest surviving exponent, which is dominance-maximal,
// until nothing is left. Virtual characters give negative multiplicities.
SchurMultiset decompose_character(const SymmetricPolynomial& p);

SymmetricPolynomial character_of(const SchurMultiset& m, int n, int degree_cap = SymmetricPolynomial::kNoCap);

// Sigma^alpha (x) Lambda^k: add k boxes, no two in one row, within n rows.
SchurMultiset pieri(const YoungDiagram& alpha, int k, int n);

// Sym^s(Sym^2 V) = sum over |beta| = s of Sigma^{2 beta} V.
SchurMultiset plethysm_sym_sym2(int s, int n);

}  // namespace cliffalg::partitions
