#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Test-only ground truth: counts digit vectors (eps_0, ..., eps_{L-1}) with
// 0 <= eps_i <= d and sum eps_i * 2^i == n by walking every one of the
// (d+1)^L vectors. Shares nothing with the recurrences or the polynomial
// product it is used to check. Only sane for small n.
namespace testsupport {

inline std::uint64_t enumerate_representations(int d, std::uint64_t n) {
  std::size_t positions = 1;
  while (positions < 63 && (std::uint64_t{1} << positions) <= n) ++positions;
  std::vector<int> digits(positions, 0);
  std::uint64_t found = 0;
  while (true) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < positions; ++i) {
      total += static_cast<std::uint64_t>(digits[i]) << i;
    }
    if (total == n) ++found;
    std::size_t pos = 0;  // odometer increment
    while (pos < positions && ++digits[pos] > d) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == positions) break;
  }
  return found;
}

}  // namespace testsupport
