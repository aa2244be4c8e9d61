#include "sternbp/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace sternbp {

std::size_t bit_length(const mpz_class& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

bool test_bit(const mpz_class& v, std::size_t bit) {
  return mpz_tstbit(v.get_mpz_t(), bit) != 0;
}

mpz_class pow2(std::size_t n) {
  mpz_class r;
  mpz_setbit(r.get_mpz_t(), n);
  return r;
}

std::optional<mpz_class> parse_index(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return mpz_class(std::string(text), 10);
}

std::size_t to_table_size(const mpz_class& v) {
  if (v < 0 || !v.fits_ulong_p() ||
      v.get_ui() > std::numeric_limits<std::size_t>::max()) {
    throw std::invalid_argument("index too large for a dense table: " +
                                v.get_str());
  }
  return static_cast<std::size_t>(v.get_ui());
}

}  // namespace sternbp
