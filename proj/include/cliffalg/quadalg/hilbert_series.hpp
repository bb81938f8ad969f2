#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliffalg::quadalg {

// Truncated power series c_0 + c_1 z + ... + c_D z^D.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) {}

  // 1 / (1 - z)^n through z^cap.
  static HilbertSeries polynomial(int n, int cap);
  // (1 + z)^n through z^cap.
  static HilbertSeries exterior(int n, int cap);

  int cap() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int i) const { return c_[i]; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  // f(-z)
  HilbertSeries sign_flipped() const;
  // Product truncated at the smaller cap.
  HilbertSeries operator*(const HilbertSeries& other) const;
  // Equal to 1 through the cap.
  bool is_one() const;

  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  std::vector<std::int64_t> c_;
};

// True iff a(z) b(-z) = 1 through the common cap. Throws DimensionMismatch
// when the caps differ.
bool koszul_series_check(const HilbertSeries& a, const HilbertSeries& b);

}  // namespace cliffalg::quadalg
