#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace sternbp {

// Sequence positions and values are exact, unbounded non-negative integers.
// All arithmetic goes through GMP; nothing is ever truncated or rounded.
using Index = mpz_class;
using Count = mpz_class;

// Number of binary digits; 0 for v == 0.
std::size_t bit_length(const mpz_class& v);

bool test_bit(const mpz_class& v, std::size_t bit);

mpz_class pow2(std::size_t n);

// Strict non-negative decimal parse: digits only, no sign, no whitespace.
std::optional<mpz_class> parse_index(std::string_view text);

// Checked conversion for operations that tabulate dense ranges.
// Throws std::invalid_argument when v does not fit in std::size_t.
std::size_t to_table_size(const mpz_class& v);

}  // namespace sternbp
