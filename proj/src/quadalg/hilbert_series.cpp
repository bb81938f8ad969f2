#include "cliffalg/quadalg/hilbert_series.hpp"

#include <algorithm>

#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"

namespace cliffalg::quadalg {

HilbertSeries HilbertSeries::polynomial(int n, int cap) {
  std::vector<std::int64_t> c;
  for (int i = 0; i <= cap; ++i) c.push_back(n == 0 ? (i == 0) : binomial(n + i - 1, i));
  return HilbertSeries(c);
}

HilbertSeries HilbertSeries::exterior(int n, int cap) {
  std::vector<std::int64_t> c;
  for (int i = 0; i <= cap; ++i) c.push_back(binomial(n, i));
  return HilbertSeries(c);
}

HilbertSeries HilbertSeries::sign_flipped() const {
  auto c = c_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return HilbertSeries(c);
}

HilbertSeries HilbertSeries::operator*(const HilbertSeries& other) const {
  const int cap = std::min(this->cap(), other.cap());
  std::vector<std::int64_t> c(cap + 1, 0);
  for (int i = 0; i <= cap; ++i) {
    for (int j = 0; i + j <= cap; ++j) c[i + j] += c_[i] * other.c_[j];
  }
  return HilbertSeries(c);
}

bool HilbertSeries::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t x) { return x == 0; });
}

std::string HilbertSeries::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

bool koszul_series_check(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.cap() != b.cap()) throw DimensionMismatch("Hilbert series caps differ");
  return (a * b.sign_flipped()).is_one();
}

}  // namespace cliffalg::quadalg
