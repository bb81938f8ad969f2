#pragma once

#include <cstdint>

namespace cliffalg {

// C(n, k); 0 outside 0 <= k <= n.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace cliffalg
