#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <vector>

namespace cliffalg::partitions {

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}.
using Exponent = std::vector<int>;

// A polynomial in nvars commuting variables with integer coefficients.
// Used for torus characters: a weight w contributes the monomial x^w.
class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }

  void add(const Exponent& e, std::int64_t c);
  bool is_symmetric() const;

  Polynomial operator*(const Polynomial& other) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_;
  std::map<Exponent, std::int64_t> terms_;
};

// A symmetric polynomial stored by the coefficients of its dominant
// (weakly decreasing) exponents, i.e. in the monomial symmetric basis.
// Terms of total degree above degree_cap are dropped.
class SymmetricPolynomial {
 public:
  static constexpr int kNoCap = INT_MAX;

  explicit SymmetricPolynomial(int nvars, int degree_cap = kNoCap) : nvars_(nvars), cap_(degree_cap) {}

  // Throws InvalidInput if p is not invariant under permuting variables.
  static SymmetricPolynomial from_polynomial(const Polynomial& p, int degree_cap = kNoCap);

  int nvars() const { return nvars_; }
  int degree_cap() const { return cap_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // e must be dominant (weakly decreasing) with nvars entries.
  std::int64_t coefficient(const Exponent& e) const;
  void add(const Exponent& dominant, std::int64_t c);

  Polynomial expand() const;
  // Value at x = (1, ..., 1).
  std::int64_t evaluate_at_ones() const;

  SymmetricPolynomial operator+(const SymmetricPolynomial& other) const;
  SymmetricPolynomial operator-(const SymmetricPolynomial& other) const;
  SymmetricPolynomial operator*(const SymmetricPolynomial& other) const;
  SymmetricPolynomial scaled(std::int64_t c) const;

  friend bool operator==(const SymmetricPolynomial& a, const SymmetricPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  int cap_;
  std::map<Exponent, std::int64_t> terms_;
};

// Number of distinct permutations of e.
std::int64_t orbit_size(const Exponent& e);
// Sorted into weakly decreasing order.
Exponent dominant_representative(Exponent e);

}  // namespace cliffalg::partitions
