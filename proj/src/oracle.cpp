#include "sternbp/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace sternbp {

CountTable gf_counts(DigitBound d, std::size_t max_n, std::size_t table_cap) {
  if (max_n > table_cap) {
    throw std::invalid_argument("oracle table bound " + std::to_string(max_n) +
                                " exceeds cap " + std::to_string(table_cap));
  }
  std::vector<Count> acc(max_n + 1);
  std::vector<Count> next(max_n + 1);
  acc[0] = 1;
  const std::size_t dv = static_cast<std::size_t>(d.value());
  for (std::size_t stride = 1; stride <= max_n;) {
    // Multiply by (1 + x^stride + ... + x^(d*stride)), truncated.
    for (std::size_t m = 0; m <= max_n; ++m) {
      mpz_class sum = acc[m];
      for (std::size_t e = 1; e <= dv && e * stride <= m; ++e) {
        sum += acc[m - e * stride];
      }
      next[m] = std::move(sum);
    }
    acc.swap(next);
    if (stride > max_n / 2) break;
    stride *= 2;
  }
  return {max_n, std::move(acc)};
}

}  // namespace sternbp
