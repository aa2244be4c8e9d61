#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sternbp/bfile.hpp"
#include "sternbp/bigint.hpp"
#include "sternbp/oracle.hpp"
#include "sternbp/sequences.hpp"

namespace sternbp {

// First 18 terms shared by hatb and sigma (OEIS A174868; also A007729 with a
// zero prepended). The only hand-entered reference data in the project;
// longer reference tables are generated by the oracle at test time.
const std::array<unsigned, 18>& a174868_prefix();

struct CheckFailure {
  Index index;
  Count expected;
  Count actual;
};

struct CheckReport {
  std::string check_name;
  Index range_lo = 0;
  Index range_hi = 0;
  // When non-empty, shown inside the summary brackets instead of the range
  // (used by cross_engines, whose scope is samples/bits/seed, not a range).
  std::string scope;
  bool passed = true;
  std::optional<CheckFailure> first_failure;

  // "PASS <name> [<lo>,<hi>]" or "FAIL <name> [...]".
  std::string summary_line() const;
  // summary_line plus a second line with the first mismatch, if any.
  std::string to_string() const;
};

// hatb(k) == sigma(k) for 0 <= k <= limit. The hatb side runs the halving
// recurrence; the sigma side accumulates stern values term by term, so the
// two sides share no recurrence.
CheckReport check_main_identity(const Index& limit);

// bprime(2k+1) == bprime(2k) for 0 <= k <= limit, with values taken from the
// generating-function oracle wherever 2k+1 <= table_cap and from the
// recurrence beyond that.
CheckReport check_halving(const Index& limit,
                          std::size_t table_cap = kDefaultTableCap);

// Replays every displayed derivation step over j, k <= limit:
//   (a) l_j  = s_{2j-1} + s_{2j}  == 2 s_j + s_{j-1}
//   (b) l'_j = s_{2j} + s_{2j+1}  == 2 s_j + s_{j+1}
//   (c) sigma_{2k} == sum_{1<=j<=k} l_j, sigma_{2k+1} == sum_{0<=j<=k} l'_j
//   (d) bprime_{2k} == 2 bprime_{k-1} + bprime_k       (k even)
//       bprime_{2k} == 2 bprime_{k-1} + bprime_{k-2}   (k odd)
//   (e) hatb_{2k} == 2 hatb_k + hatb_{k-1} and
//       hatb_{2k+1} == 2 hatb_k + hatb_{k+1}, with hatb taken from its
//       definition hatb_k = b_{k-1} = bprime_{2(k-1)}, not from its own
//       recurrence.
// Requires limit >= 1.
CheckReport replay_proof(const Index& limit);

// Draws `samples` pseudo-random indices of up to max_bits bits
// (deterministically from seed) plus the structured family
// {2^n - 1, 2^n, 2^n + 1 : n <= max_bits} and compares eval_any against the
// memoized recurrences for every kind that has two independent engines:
// BPrime, B, HatB, Stern, Sigma, DigitCount(5).
CheckReport cross_engines(std::uint64_t samples, unsigned max_bits,
                          std::uint64_t seed);

// One "<n> <value>" line per index from `from` to `to` inclusive, values from
// eval_any. Requires from <= to.
void emit_bfile(const SequenceKind& seq, const Index& from, const Index& to,
                std::ostream& out);
std::string emit_bfile_text(const SequenceKind& seq, const Index& from,
                            const Index& to);
std::vector<BFileRecord> make_bfile_records(const SequenceKind& seq,
                                            const Index& from,
                                            const Index& to);

// Recomputes each record's value and reports the first mismatch
// (expected = recomputed, actual = record). An empty stream passes vacuously.
CheckReport compare_bfile(const SequenceKind& seq,
                          const std::vector<BFileRecord>& records);

}  // namespace sternbp
