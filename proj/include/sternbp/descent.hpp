#pragma once

#include <cstdint>

#include "sternbp/bigint.hpp"
#include "sternbp/sequences.hpp"

namespace sternbp {

struct DescentStats {
  std::uint64_t steps = 0;       // bits of the index consumed
  std::uint64_t bigint_ops = 0;  // big-integer additions and doublings
};

// (s_k, s_{k+1})
struct SternPair {
  Count lo;
  Count hi;
};

// (sigma_{k-1}, sigma_k, sigma_{k+1})
struct SigmaTriple {
  Count prev;
  Count cur;
  Count next;
};

// Walks the bits of k most-significant-first carrying (s_j, s_{j+1}).
// Exactly one big-integer addition per bit: steps == bigint_ops ==
// bit_length(k).
SternPair stern_pair_descent(const Index& k, DescentStats* stats = nullptr);

// Walks the bits of k below the leading one carrying
// (sigma_{j-1}, sigma_j, sigma_{j+1}) from T(1) = (0, 1, 2).
// steps == bit_length(k) - 1, five big-integer operations per step.
// Requires k >= 1 (sigma_{-1} is undefined); throws std::invalid_argument.
SigmaTriple sigma_triple_descent(const Index& k, DescentStats* stats = nullptr);

// Evaluates any sequence kind at k in O(bit-length) big-integer steps:
//   Stern           -> pair descent
//   Sigma, HatB     -> triple descent (hatb_k = sigma_k)
//   B               -> sigma_{k+1}
//   BPrime          -> sigma_{floor(k/2)+1}
//   DigitCount(5)   -> same as BPrime
//   DigitCount(d)   -> memoized recurrence (no descent form for general d)
Count eval_any(const SequenceKind& seq, const Index& k);

}  // namespace sternbp
