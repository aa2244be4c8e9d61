#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sternbp/descent.hpp"

using namespace sternbp;

TEST_SUITE("descent") {

TEST_CASE("stern pair examples") {
  SternPair p0 = stern_pair_descent(0);
  CHECK(p0.lo == 0);
  CHECK(p0.hi == 1);
  SternPair p5 = stern_pair_descent(5);
  CHECK(p5.lo == 3);
  CHECK(p5.hi == 2);
  SternPair p16 = stern_pair_descent(16);
  CHECK(p16.lo == 1);
  CHECK(p16.hi == 5);
}

TEST_CASE("stern pair agrees with the recurrence up to 2^12") {
  const auto st = stern_prefix((1 << 12) + 2);
  for (std::size_t k = 0; k <= (1 << 12); ++k) {
    SternPair p = stern_pair_descent(k);
    CAPTURE(k);
    CHECK(p.lo == st[k]);
    CHECK(p.hi == st[k + 1]);
  }
}

TEST_CASE("stern pair at powers of two") {
  for (unsigned n = 0; n <= 300; n += 37) {
    SternPair p = stern_pair_descent(pow2(n));
    CAPTURE(n);
    CHECK(p.lo == 1);       // s_{2^n} = 1
    CHECK(p.hi == n + 1);   // s_{2^n + 1} = n + 1
  }
}

TEST_CASE("sigma triple examples") {
  SigmaTriple t1 = sigma_triple_descent(1);
  CHECK(t1.prev == 0);
  CHECK(t1.cur == 1);
  CHECK(t1.next == 2);
  SigmaTriple t16 = sigma_triple_descent(16);
  CHECK(t16.prev == 40);
  CHECK(t16.cur == 41);
  CHECK(t16.next == 46);
  CHECK_THROWS_AS(sigma_triple_descent(0), std::invalid_argument);
}

TEST_CASE("sigma triple agrees with the recurrence up to 2^12") {
  const auto sg = sigma_prefix((1 << 12) + 2);
  for (std::size_t k = 1; k <= (1 << 12); ++k) {
    SigmaTriple t = sigma_triple_descent(k);
    CAPTURE(k);
    CHECK(t.prev == sg[k - 1]);
    CHECK(t.cur == sg[k]);
    CHECK(t.next == sg[k + 1]);
    CHECK(t.next - t.cur >= 1);  // equals s_{k+1} >= 1
  }
}

TEST_CASE("sigma triple at 2^20 matches the memoized engine") {
  const mpz_class k = pow2(20);
  SigmaTriple t = sigma_triple_descent(k);
  CHECK(t.prev == sigma(k - 1));
  CHECK(t.cur == sigma(k));
  CHECK(t.next == sigma(k + 1));
}

TEST_CASE("descent operation counters") {
  const mpz_class indices[] = {0, 1, 2, 3, 5, 6, 7, 100, 255, 256,
                               pow2(64) + 9999, pow2(100) - 1};
  for (const mpz_class& k : indices) {
    CAPTURE(k.get_str());
    DescentStats pair_stats;
    stern_pair_descent(k, &pair_stats);
    CHECK(pair_stats.steps == bit_length(k));
    CHECK(pair_stats.bigint_ops == bit_length(k));  // one addition per bit

    if (k >= 1) {
      DescentStats triple_stats;
      sigma_triple_descent(k, &triple_stats);
      CHECK(triple_stats.steps == bit_length(k) - 1);
      CHECK(triple_stats.bigint_ops == 5 * triple_stats.steps);
      CHECK(triple_stats.bigint_ops <= 6 * bit_length(k));
    }
  }
}

TEST_CASE("eval_any point examples") {
  CHECK(eval_any(SequenceKind::hatb(), 17) == 46);
  CHECK(eval_any(SequenceKind::bprime(), 9) == 8);
  CHECK(eval_any(SequenceKind::stern(), 0) == 0);
  CHECK(eval_any(SequenceKind::sigma(), 0) == 0);
  CHECK(eval_any(SequenceKind::hatb(), 0) == 0);
  CHECK(eval_any(SequenceKind::b(), 0) == 1);
}

TEST_CASE("eval_any routes digit counts") {
  for (std::size_t k = 0; k <= 40; ++k) {
    CAPTURE(k);
    CHECK(eval_any(SequenceKind::digit_count(DigitBound(5)), k) == bprime(k));
    CHECK(eval_any(SequenceKind::digit_count(DigitBound(3)), k) ==
          digit_count(DigitBound(3), k));
  }
}

TEST_CASE("eval_any agrees with the memoized engines on random indices") {
  std::mt19937_64 rng(7);
  const SequenceKind kinds[] = {
      SequenceKind::bprime(), SequenceKind::b(),
      SequenceKind::hatb(),   SequenceKind::stern(),
      SequenceKind::sigma(),  SequenceKind::digit_count(DigitBound(5)),
  };
  for (int trial = 0; trial < 200; ++trial) {
    mpz_class k = 1;
    const unsigned bits = 1 + static_cast<unsigned>(rng() % 96);
    for (unsigned j = 1; j < bits; ++j) {
      k <<= 1;
      if (rng() & 1) k |= 1;
    }
    CAPTURE(k.get_str());
    CHECK(eval_any(kinds[0], k) == bprime(k));
    CHECK(eval_any(kinds[1], k) == b(k));
    CHECK(eval_any(kinds[2], k) == hatb(k));
    CHECK(eval_any(kinds[3], k) == stern(k));
    CHECK(eval_any(kinds[4], k) == sigma(k));
    CHECK(eval_any(kinds[5], k) == digit_count(DigitBound(5), k));
  }
}

}  // TEST_SUITE
