#include "cliffalg/clifford/clifford_element.hpp"

#include <bit>
#include <numeric>

#include "cliffalg/error.hpp"

namespace cliffalg::clifford {
namespace {

bool same_family(const FamilyPtr& a, const FamilyPtr& b) { return a == b || (a && b && *a == *b); }

void check_family(const CliffordElement& x, const CliffordElement& y) {
  if (!same_family(x.family(), y.family())) throw InvalidInput("Clifford elements over different families");
}

// Multiply every term by the linear form sum_c form[c] * y_c.
void add_times_linear_form(CliffordElement& out, const CliffordElement& x, const exactla::SparseVector& form,
                           const Rational& factor) {
  for (const auto& [c, qc] : form.entries()) {
    const Rational f = factor * qc;
    for (const auto& [key, value] : x.terms()) {
      BasisKey next = key;
      ++next.exponents[c];
      out.add_term(next, f * value);
    }
  }
}

// e_S * y for the wedge basis element e_S.
CliffordElement wedge_basis_action(std::uint32_t subset, const CliffordElement& y) {
  if (subset == 0) return y;
  const int first = std::countr_zero(subset);
  const std::uint32_t rest = subset & (subset - 1);
  CliffordElement out = left_generator_action(first, wedge_basis_action(rest, y));
  // subtract the contraction of e_first into e_rest
  const QuadricFamily& family = *y.family();
  int position = 0;
  for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1, ++position) {
    const int s = std::countr_zero(bits);
    const auto& form = family.pairing(first, s);
    if (form.empty()) continue;
    const Rational sign = (position % 2 == 0) ? Rational(-1) : Rational(1);
    add_times_linear_form(out, wedge_basis_action(rest & ~(1u << s), y), form, sign);
  }
  return out;
}

}  // namespace

int BasisKey::wedge_degree() const { return std::popcount(subset); }

int BasisKey::coefficient_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool operator<(const BasisKey& a, const BasisKey& b) {
  if (a.wedge_degree() != b.wedge_degree()) return a.wedge_degree() < b.wedge_degree();
  if (a.subset != b.subset) return a.subset < b.subset;
  if (a.coefficient_degree() != b.coefficient_degree()) return a.coefficient_degree() < b.coefficient_degree();
  return a.exponents > b.exponents;
}

CliffordElement CliffordElement::scalar(FamilyPtr family, const Rational& value) {
  const int k = family->k();
  return basis(std::move(family), BasisKey{0, std::vector<int>(k, 0)}, value);
}

CliffordElement CliffordElement::generator(FamilyPtr family, int a) {
  if (a < 0 || a >= family->n()) throw InvalidInput("generator index out of range");
  const int k = family->k();
  return basis(std::move(family), BasisKey{1u << a, std::vector<int>(k, 0)});
}

CliffordElement CliffordElement::basis(FamilyPtr family, BasisKey key, const Rational& value) {
  if (static_cast<int>(key.exponents.size()) != family->k()) {
    throw InvalidInput("coefficient monomial length differs from family dimension");
  }
  if (family->n() < 32 && (key.subset >> family->n()) != 0) throw InvalidInput("wedge subset out of range");
  CliffordElement x(std::move(family));
  x.add_term(key, value);
  return x;
}

std::optional<int> CliffordElement::degree() const {
  std::optional<int> d;
  for (const auto& [key, value] : terms_) {
    if (d && *d != key.degree()) return std::nullopt;
    d = key.degree();
  }
  return d;
}

void CliffordElement::add_term(const BasisKey& key, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

CliffordElement CliffordElement::operator+(const CliffordElement& other) const {
  check_family(*this, other);
  CliffordElement out = *this;
  for (const auto& [key, value] : other.terms_) out.add_term(key, value);
  return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& other) const {
  return *this + other.scaled(-1);
}

CliffordElement CliffordElement::scaled(const Rational& factor) const {
  CliffordElement out(family_);
  if (factor == 0) return out;
  for (const auto& [key, value] : terms_) out.terms_.emplace(key, value * factor);
  return out;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [key, value] : terms_) {
    std::string factors;
    for (std::uint32_t bits = key.subset; bits != 0; bits &= bits - 1) {
      if (!factors.empty()) factors += "^";
      factors += "e" + std::to_string(std::countr_zero(bits));
    }
    for (std::size_t c = 0; c < key.exponents.size(); ++c) {
      if (key.exponents[c] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "y" + std::to_string(c);
      if (key.exponents[c] > 1) factors += "^" + std::to_string(key.exponents[c]);
    }
    const bool negative = value < 0;
    const Rational magnitude = negative ? Rational(-value) : value;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    if (factors.empty()) {
      s += magnitude.get_str();
    } else {
      if (magnitude != 1) s += magnitude.get_str() + "*";
      s += factors;
    }
  }
  return s;
}

CliffordElement left_generator_action(int a, const CliffordElement& x) {
  const QuadricFamily& family = *x.family();
  CliffordElement out(x.family());
  const std::uint32_t bit = 1u << a;
  for (const auto& [key, value] : x.terms()) {
    if ((key.subset & bit) == 0) {
      const int before = std::popcount(key.subset & (bit - 1));
      out.add_term(BasisKey{key.subset | bit, key.exponents}, before % 2 == 0 ? value : Rational(-value));
    }
    int position = 0;
    for (std::uint32_t bits = key.subset; bits != 0; bits &= bits - 1, ++position) {
      const int s = std::countr_zero(bits);
      const auto& form = family.pairing(a, s);
      for (const auto& [c, qc] : form.entries()) {
        BasisKey next{key.subset & ~(1u << s), key.exponents};
        ++next.exponents[c];
        out.add_term(next, position % 2 == 0 ? Rational(qc * value) : Rational(-qc * value));
      }
    }
  }
  return out;
}

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) {
  check_family(x, y);
  CliffordElement out(x.family());
  std::map<std::uint32_t, CliffordElement> cache;
  for (const auto& [key, value] : x.terms()) {
    auto it = cache.find(key.subset);
    if (it == cache.end()) it = cache.emplace(key.subset, wedge_basis_action(key.subset, y)).first;
    for (const auto& [k2, v2] : it->second.terms()) {
      BasisKey next = k2;
      for (std::size_t c = 0; c < next.exponents.size(); ++c) next.exponents[c] += key.exponents[c];
      out.add_term(next, value * v2);
    }
  }
  return out;
}

}  // namespace cliffalg::clifford
