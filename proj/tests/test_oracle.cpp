#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "sternbp/oracle.hpp"
#include "support/enumerate.hpp"

using namespace sternbp;
using testsupport::enumerate_representations;

namespace {

// Independent re-derivation used by the truncation test: full product of the
// first `factors` polynomials (1 + x^(2^i) + ... + x^(d*2^i)) mod x^(max+1).
std::vector<mpz_class> product_of_factors(int d, std::size_t factors,
                                          std::size_t max_n) {
  std::vector<mpz_class> poly{1};
  for (std::size_t i = 0; i < factors; ++i) {
    const std::size_t stride = std::size_t{1} << i;
    std::vector<mpz_class> out(std::min(max_n + 1, poly.size() + static_cast<std::size_t>(d) * stride));
    for (std::size_t a = 0; a < poly.size(); ++a) {
      for (int e = 0; e <= d; ++e) {
        const std::size_t degree = a + static_cast<std::size_t>(e) * stride;
        if (degree > max_n) break;
        if (degree >= out.size()) out.resize(degree + 1);
        out[degree] += poly[a];
      }
    }
    poly.swap(out);
  }
  poly.resize(max_n + 1);
  return poly;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("degenerate table") {
  for (int d : {1, 5, 64}) {
    CountTable t = gf_counts(DigitBound(d), 0);
    CHECK(t.max_n == 0);
    REQUIRE(t.counts.size() == 1);
    CHECK(t.counts[0] == 1);
  }
}

TEST_CASE("frozen small tables") {
  CountTable t5 = gf_counts(DigitBound(5), 8);
  REQUIRE(t5.counts.size() == 9);
  CHECK(t5.counts[8] == 8);

  CountTable t3 = gf_counts(DigitBound(3), 4);
  const std::vector<mpz_class> expected{1, 1, 2, 2, 3};
  CHECK(t3.counts == expected);
}

TEST_CASE("table matches exhaustive enumeration") {
  for (int d : {1, 2, 3, 5}) {
    CountTable t = gf_counts(DigitBound(d), 40);
    for (unsigned long n = 0; n <= 40; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CHECK(t.counts[n] == enumerate_representations(d, n));
    }
  }
}

TEST_CASE("table matches the recurrences") {
  CountTable t5 = gf_counts(DigitBound(5), 2048);
  const auto bp = bprime_prefix(2049);
  for (std::size_t n = 0; n <= 2048; ++n) {
    CAPTURE(n);
    CHECK(t5.counts[n] == bp[n]);
  }
  for (int d : {1, 2, 4, 6}) {
    CountTable t = gf_counts(DigitBound(d), 1024);
    const auto rec = digit_count_prefix(DigitBound(d), 1025);
    for (std::size_t n = 0; n <= 1024; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CHECK(t.counts[n] == rec[n]);
    }
  }
}

TEST_CASE("every count is at least one") {
  CountTable t = gf_counts(DigitBound(1), 512);
  for (const Count& c : t.counts) CHECK(c == 1);  // binary digits are unique
  CountTable t2 = gf_counts(DigitBound(2), 512);
  for (const Count& c : t2.counts) CHECK(c >= 1);
}

TEST_CASE("truncation is exact: one extra factor changes nothing") {
  // max_n = 37 uses factors up to 2^5 = 32; including 2^6 = 64 as well must
  // reproduce the same truncated coefficients.
  const std::size_t max_n = 37;
  CountTable t = gf_counts(DigitBound(5), max_n);
  const auto with_needed = product_of_factors(5, 6, max_n);
  const auto with_extra = product_of_factors(5, 7, max_n);
  CHECK(with_needed == with_extra);
  for (std::size_t n = 0; n <= max_n; ++n) {
    CAPTURE(n);
    CHECK(t.counts[n] == with_extra[n]);
  }
}

TEST_CASE("table cap is enforced") {
  CHECK_THROWS_AS(gf_counts(DigitBound(5), kDefaultTableCap + 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gf_counts(DigitBound(5), 100, 50), std::invalid_argument);
  CHECK(gf_counts(DigitBound(5), 50, 50).counts.size() == 51);
}

}  // TEST_SUITE
