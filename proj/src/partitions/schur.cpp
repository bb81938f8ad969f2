#include "cliffalg/partitions/schur.hpp"

#include <gmpxx.h>

#include <functional>
#include <numeric>

#include "cliffalg/error.hpp"

namespace cliffalg::partitions {

SchurMultiset::SchurMultiset(std::initializer_list<std::pair<const YoungDiagram, std::int64_t>> init) {
  for (const auto& [alpha, m] : init) add(alpha, m);
}

void SchurMultiset::add(const YoungDiagram& alpha, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t SchurMultiset::multiplicity(const YoungDiagram& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0 : it->second;
}

bool SchurMultiset::multiplicity_free() const {
  for (const auto& [alpha, m] : terms_) {
    if (m != 1) return false;
  }
  return true;
}

SchurMultiset SchurMultiset::restricted_to_rows(int n) const {
  SchurMultiset out;
  for (const auto& [alpha, m] : terms_) {
    if (alpha.fits_rows(n)) out.add(alpha, m);
  }
  return out;
}

std::int64_t SchurMultiset::dimension(int n) const {
  std::int64_t total = 0;
  for (const auto& [alpha, m] : terms_) total += m * schur_dim(alpha, n);
  return total;
}

std::string SchurMultiset::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Larger diagrams first, matching how decompositions are usually written.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, m] = *it;
    if (!s.empty()) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    const std::int64_t a = m < 0 ? -m : m;
    if (a != 1) s += std::to_string(a);
    s += "S" + alpha.to_string();
  }
  return s;
}

std::int64_t schur_dim(const YoungDiagram& alpha, int n) {
  if (!alpha.fits_rows(n)) return 0;
  // prod_{i<j} (a_i - a_j + j - i) / (j - i), kept exact by dividing out
  // the denominator's prime content as it accumulates.
  mpz_class num = 1;
  mpz_class den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= alpha.row(i) - alpha.row(j) + j - i;
      den *= j - i;
    }
  }
  mpz_class q = num / den;
  return q.get_si();
}

namespace {

// Count fillings removing horizontal strips: the largest letter occupies a
// horizontal strip of size mu.back().
std::int64_t kostka_rec(const std::vector<int>& shape, const Exponent& mu, std::size_t letters,
                        std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  const int boxes = std::accumulate(shape.begin(), shape.end(), 0);
  if (letters == 0) return boxes == 0 ? 1 : 0;
  if (shape.size() > letters) return 0;
  const auto key = std::make_pair(shape, letters);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = mu[letters - 1];
  std::int64_t total = 0;
  std::vector<int> inner(shape.size());
  // inner_i ranges over [shape_{i+1}, shape_i]
  std::function<void(std::size_t, int)> choose = [&](std::size_t i, int left) {
    if (i == shape.size()) {
      if (left == 0) {
        std::vector<int> trimmed;
        for (int r : inner) {
          if (r > 0) trimmed.push_back(r);
        }
        total += kostka_rec(trimmed, mu, letters - 1, memo);
      }
      return;
    }
    const int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
    for (int r = shape[i]; r >= lo; --r) {
      const int removed = shape[i] - r;
      if (removed > left) break;
      inner[i] = r;
      choose(i + 1, left - removed);
    }
  };
  choose(0, strip);
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t kostka_number(const YoungDiagram& alpha, const Exponent& mu) {
  if (std::accumulate(mu.begin(), mu.end(), 0) != alpha.size()) return 0;
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  return kostka_rec(alpha.rows(), mu, mu.size(), memo);
}

SymmetricPolynomial schur_polynomial(const YoungDiagram& alpha, int n, int degree_cap) {
  SymmetricPolynomial p(n, degree_cap);
  if (!alpha.fits_rows(n) || alpha.size() > degree_cap) return p;
  for (const auto& lambda : enumerate_diagrams(n, alpha.size())) {
    Exponent e(n, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda.row(i);
    p.add(e, kostka_number(alpha, e));
  }
  return p;
}

SchurMultiset decompose_character(const SymmetricPolynomial& p) {
  SchurMultiset out;
  SymmetricPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    std::vector<int> rows;
    for (int x : lead) {
      if (x < 0) throw InvalidInput("character has a negative exponent");
      if (x > 0) rows.push_back(x);
    }
    const YoungDiagram alpha(std::move(rows));
    const std::int64_t coeff = c;
    out.add(alpha, coeff);
    rest = rest - schur_polynomial(alpha, p.nvars(), p.degree_cap()).scaled(coeff);
  }
  return out;
}

SymmetricPolynomial character_of(const SchurMultiset& m, int n, int degree_cap) {
  SymmetricPolynomial p(n, degree_cap);
  for (const auto& [alpha, mult] : m.terms()) p = p + schur_polynomial(alpha, n, degree_cap).scaled(mult);
  return p;
}

SchurMultiset pieri(const YoungDiagram& alpha, int k, int n) {
  SchurMultiset out;
  if (k < 0 || k > n || !alpha.fits_rows(n)) return out;
  // Choose k of the n rows to extend by one box.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = alpha.row(i) + (pick[i] ? 1 : 0);
    if (!std::is_sorted(rows.begin(), rows.end(), std::greater<>())) continue;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    out.add(YoungDiagram(std::move(rows)), 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

SchurMultiset plethysm_sym_sym2(int s, int n) {
  SchurMultiset out;
  for (const auto& beta : enumerate_diagrams(n, s)) out.add(doubled(beta), 1);
  return out;
}

}  // namespace cliffalg::partitions
