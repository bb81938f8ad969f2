#include "cliffalg/partitions/symmetric_polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cliffalg/error.hpp"

namespace cliffalg::partitions {
namespace {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool is_dominant(const Exponent& e) { return std::is_sorted(e.begin(), e.end(), std::greater<>()); }

}  // namespace

std::int64_t orbit_size(const Exponent& e) {
  Exponent sorted = e;
  std::sort(sorted.begin(), sorted.end());
  std::int64_t count = 1;
  std::int64_t k = 0;
  // multinomial n! / prod(m_i!) built incrementally to stay in range
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    k = (i > 0 && sorted[i] == sorted[i - 1]) ? k + 1 : 1;
    count = count * static_cast<std::int64_t>(i + 1) / k;
  }
  return count;
}

Exponent dominant_representative(Exponent e) {
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

void Polynomial::add(const Exponent& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != nvars_) throw InvalidInput("exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i + 1 < nvars_; ++i) {
      Exponent swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = terms_.find(swapped);
      if (it == terms_.end() || it->second != c) return false;
    }
  }
  return true;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw InvalidInput("polynomials in different variable counts");
  Polynomial out(nvars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      Exponent e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

SymmetricPolynomial SymmetricPolynomial::from_polynomial(const Polynomial& p, int degree_cap) {
  if (!p.is_symmetric()) throw InvalidInput("polynomial is not symmetric");
  SymmetricPolynomial s(p.nvars(), degree_cap);
  for (const auto& [e, c] : p.terms()) {
    if (is_dominant(e)) s.add(e, c);
  }
  return s;
}

std::int64_t SymmetricPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void SymmetricPolynomial::add(const Exponent& dominant, std::int64_t c) {
  if (static_cast<int>(dominant.size()) != nvars_ || !is_dominant(dominant)) {
    throw InvalidInput("symmetric polynomial terms are keyed by dominant exponents");
  }
  if (c == 0 || degree(dominant) > cap_) return;
  auto [it, inserted] = terms_.try_emplace(dominant, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial SymmetricPolynomial::expand() const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent perm = e;
    std::sort(perm.begin(), perm.end());
    do {
      p.add(perm, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return p;
}

std::int64_t SymmetricPolynomial::evaluate_at_ones() const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) total += c * orbit_size(e);
  return total;
}

SymmetricPolynomial SymmetricPolynomial::operator+(const SymmetricPolynomial& other) const {
  if (nvars_ != other.nvars_) throw InvalidInput("symmetric polynomials in different variable counts");
  SymmetricPolynomial out(nvars_, std::min(cap_, other.cap_));
  for (const auto& [e, c] : terms_) out.add(e, c);
  for (const auto& [e, c] : other.terms_) out.add(e, c);
  return out;
}

SymmetricPolynomial SymmetricPolynomial::operator-(const SymmetricPolynomial& other) const {
  return *this + other.scaled(-1);
}

SymmetricPolynomial SymmetricPolynomial::scaled(std::int64_t c) const {
  SymmetricPolynomial out(nvars_, cap_);
  for (const auto& [e, x] : terms_) out.add(e, x * c);
  return out;
}

SymmetricPolynomial SymmetricPolynomial::operator*(const SymmetricPolynomial& other) const {
  if (nvars_ != other.nvars_) throw InvalidInput("symmetric polynomials in different variable counts");
  const int cap = std::min(cap_, other.cap_);
  // Only dominant exponents of the product are needed: pair each dominant
  // term of this with every monomial of the other factor.
  const Polynomial rhs = other.expand();
  SymmetricPolynomial out(nvars_, cap);
  for (const auto& [a, ca] : terms_) {
    Exponent perm = a;
    std::sort(perm.begin(), perm.end());
    do {
      for (const auto& [b, cb] : rhs.terms()) {
        Exponent e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = perm[i] + b[i];
        if (is_dominant(e)) out.add(e, ca * cb);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace cliffalg::partitions
