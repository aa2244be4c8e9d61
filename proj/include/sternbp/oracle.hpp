#pragma once

#include <cstddef>
#include <vector>

#include "sternbp/bigint.hpp"
#include "sternbp/sequences.hpp"

namespace sternbp {

// Default bound on oracle table size; gf_counts rejects anything larger.
inline constexpr std::size_t kDefaultTableCap = std::size_t{1} << 22;

struct CountTable {
  std::size_t max_n = 0;
  std::vector<Count> counts;  // length max_n + 1
};

// counts[n] = number of ways to write n = sum eps_i * 2^i with
// eps_i in {0,...,d}, for all n <= max_n, computed as the coefficients of
//
//   prod_{i : 2^i <= max_n} (1 + x^(2^i) + x^(2*2^i) + ... + x^(d*2^i))
//
// truncated to degree max_n. Factors with 2^i > max_n only contribute their
// constant term below degree max_n + 1, so the truncation is exact. This is
// a plain polynomial product sharing no code with the recurrences, which is
// what makes it usable as ground truth against them.
//
// Throws std::invalid_argument when max_n > table_cap.
CountTable gf_counts(DigitBound d, std::size_t max_n,
                     std::size_t table_cap = kDefaultTableCap);

}  // namespace sternbp
