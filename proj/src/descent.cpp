#include "sternbp/descent.hpp"

#include <stdexcept>

namespace sternbp {

SternPair stern_pair_descent(const Index& k, DescentStats* stats) {
  if (k < 0) throw std::invalid_argument("negative sequence index");
  mpz_class a = 0;  // s_j
  mpz_class b = 1;  // s_{j+1}
  std::uint64_t ops = 0;
  const std::size_t bits = bit_length(k);
  for (std::size_t i = bits; i-- > 0;) {
    if (test_bit(k, i)) {
      a += b;  // (s_j, s_{j+1}) -> (s_{2j+1}, s_{2j+2})
    } else {
      b += a;  // (s_j, s_{j+1}) -> (s_{2j},   s_{2j+1})
    }
    ++ops;
  }
  if (stats) {
    stats->steps = bits;
    stats->bigint_ops = ops;
  }
  return {std::move(a), std::move(b)};
}

SigmaTriple sigma_triple_descent(const Index& k, DescentStats* stats) {
  if (k < 1) {
    throw std::invalid_argument(
        "sigma_triple_descent requires k >= 1 (sigma_{-1} is undefined)");
  }
  mpz_class p = 0;  // sigma_{j-1}
  mpz_class c = 1;  // sigma_j
  mpz_class n = 2;  // sigma_{j+1}
  std::uint64_t steps = 0;
  std::uint64_t ops = 0;
  const std::size_t bits = bit_length(k);
  // T(1) handles the leading bit; consume the rest most-significant-first.
  for (std::size_t i = bits - 1; i-- > 0;) {
    mpz_class twice_c = c << 1;
    if (test_bit(k, i)) {
      // T(2j+1) = (2c+p, 2c+n, 2n+c)
      mpz_class np = twice_c + p;
      mpz_class nc = twice_c + n;
      mpz_class nn = (n << 1) + c;
      p = std::move(np);
      c = std::move(nc);
      n = std::move(nn);
    } else {
      // T(2j) = (2p+c, 2c+p, 2c+n)
      mpz_class np = (p << 1) + c;
      mpz_class nc = twice_c + p;
      mpz_class nn = twice_c + n;
      p = std::move(np);
      c = std::move(nc);
      n = std::move(nn);
    }
    ops += 5;  // two doublings, three additions
    ++steps;
  }
  if (stats) {
    stats->steps = steps;
    stats->bigint_ops = ops;
  }
  return {std::move(p), std::move(c), std::move(n)};
}

Count eval_any(const SequenceKind& seq, const Index& k) {
  if (k < 0) throw std::invalid_argument("negative sequence index");
  switch (seq.tag) {
    case SequenceKind::Tag::Stern:
      return stern_pair_descent(k).lo;
    case SequenceKind::Tag::Sigma:
    case SequenceKind::Tag::HatB:
      if (k == 0) return 0;
      return sigma_triple_descent(k).cur;
    case SequenceKind::Tag::B:
      return sigma_triple_descent(k + 1).cur;  // b_k = sigma_{k+1}
    case SequenceKind::Tag::BPrime: {
      mpz_class half = k >> 1;  // b'_k = b_{floor(k/2)} = sigma_{floor(k/2)+1}
      half += 1;
      return sigma_triple_descent(half).cur;
    }
    case SequenceKind::Tag::DigitCount: {
      if (seq.digit_bound == 5) {
        return eval_any(SequenceKind::bprime(), k);
      }
      return digit_count(DigitBound(seq.digit_bound), k);
    }
  }
  throw std::logic_error("unknown sequence kind");
}

}  // namespace sternbp
