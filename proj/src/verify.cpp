#include "sternbp/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sternbp/descent.hpp"

namespace sternbp {

const std::array<unsigned, 18>& a174868_prefix() {
  static const std::array<unsigned, 18> prefix = {
      0, 1, 2, 4, 5, 8, 10, 13, 14, 18, 21, 26, 28, 33, 36, 40, 41, 46};
  return prefix;
}

std::string CheckReport::summary_line() const {
  std::string s = passed ? "PASS " : "FAIL ";
  s += check_name;
  s += " [";
  if (scope.empty()) {
    s += range_lo.get_str() + "," + range_hi.get_str();
  } else {
    s += scope;
  }
  s += "]";
  return s;
}

std::string CheckReport::to_string() const {
  std::string s = summary_line();
  if (first_failure) {
    s += "\n  first mismatch at n=" + first_failure->index.get_str() +
         ": expected " + first_failure->expected.get_str() + ", got " +
         first_failure->actual.get_str();
  }
  return s;
}

namespace {

// Scans run in ascending index order, so the first mismatch seen is the
// smallest failing index.
void record_mismatch(CheckReport& report, Index index, Count expected,
                     Count actual) {
  if (report.first_failure) return;
  report.passed = false;
  report.first_failure =
      CheckFailure{std::move(index), std::move(expected), std::move(actual)};
}

}  // namespace

CheckReport check_main_identity(const Index& limit) {
  const std::size_t last = to_table_size(limit);
  CheckReport report;
  report.check_name = "hatb==sigma";
  report.range_hi = limit;
  const std::vector<Count> hb = hatb_prefix(last + 1);
  const std::vector<Count> s = stern_prefix(last + 1);
  mpz_class running = 0;  // sigma_k accumulated from the definition
  for (std::size_t k = 0; k <= last; ++k) {
    running += s[k];
    if (hb[k] != running) {
      record_mismatch(report, k, running, hb[k]);
      break;
    }
  }
  return report;
}

CheckReport check_halving(const Index& limit, std::size_t table_cap) {
  const std::size_t last = to_table_size(limit);
  CheckReport report;
  report.check_name = "bprime-halving";
  report.range_hi = limit;
  const std::size_t top = 2 * last + 1;
  const std::size_t bound = std::min(top, table_cap);
  const CountTable oracle = gf_counts(DigitBound(5), bound, table_cap);
  std::vector<Count> recur;
  if (top > bound) recur = bprime_prefix(top + 1);
  auto value_at = [&](std::size_t i) -> const Count& {
    return i <= bound ? oracle.counts[i] : recur[i];
  };
  for (std::size_t k = 0; k <= last; ++k) {
    const Count& even = value_at(2 * k);
    const Count& odd = value_at(2 * k + 1);
    if (odd != even) {
      record_mismatch(report, k, even, odd);
      break;
    }
  }
  return report;
}

CheckReport replay_proof(const Index& limit) {
  if (limit < 1) throw std::invalid_argument("replay_proof requires limit >= 1");
  const std::size_t last = to_table_size(limit);
  CheckReport report;
  report.check_name = "proof-replay";
  report.range_lo = 1;
  report.range_hi = limit;

  const std::vector<Count> s = stern_prefix(2 * last + 2);
  std::vector<Count> sig(2 * last + 2);  // definition-level partial sums
  {
    mpz_class running = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      running += s[i];
      sig[i] = running;
    }
  }
  const std::vector<Count> bp = bprime_prefix(4 * last + 1);
  // hatb from its definition hatb_m = b_{m-1} = bprime_{2(m-1)}, m >= 1.
  auto hat = [&](std::size_t m) -> Count {
    return m == 0 ? Count(0) : bp[2 * (m - 1)];
  };

  mpz_class ell_sum = 0;        // sum_{1<=j<=k} l_j
  mpz_class ell_prime_sum = 0;  // sum_{0<=j<=k} l'_j

  auto check = [&](std::size_t at, const Count& expected,
                   const Count& actual) {
    if (report.first_failure || expected == actual) return;
    record_mismatch(report, at, expected, actual);
  };

  for (std::size_t t = 0; t <= last && !report.first_failure; ++t) {
    if (t >= 1) {
      // (a) l_t from consecutive stern terms vs the doubled form.
      const Count ell = s[2 * t - 1] + s[2 * t];
      check(t, ell, 2 * s[t] + s[t - 1]);
      ell_sum += ell;
    }
    // (b) l'_t, valid from t = 0 (l'_0 = s_0 + s_1).
    const Count ell_prime = s[2 * t] + s[2 * t + 1];
    check(t, ell_prime, 2 * s[t] + s[t + 1]);
    ell_prime_sum += ell_prime;
    // (c) the two telescoping sums against definition-level sigma.
    check(t, sig[2 * t], ell_sum);
    check(t, sig[2 * t + 1], ell_prime_sum);
    // (d) the parity-split doubling of bprime; negative indices count as 0.
    {
      mpz_class rhs = 0;
      if (t >= 1) rhs = 2 * bp[t - 1];
      if (t % 2 == 0) {
        rhs += bp[t];
      } else if (t >= 2) {
        rhs += bp[t - 2];
      }
      check(t, bp[2 * t], rhs);
    }
    // (e) the hatb transitions on definition-level values, index >= 2.
    if (t >= 1) {
      check(t, hat(2 * t), 2 * hat(t) + hat(t - 1));
      check(t, hat(2 * t + 1), 2 * hat(t) + hat(t + 1));
    }
  }
  return report;
}

CheckReport cross_engines(std::uint64_t samples, unsigned max_bits,
                          std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("cross_engines: samples >= 1");
  if (max_bits < 1) throw std::invalid_argument("cross_engines: max_bits >= 1");

  CheckReport report;
  report.check_name = "cross-engines";
  report.range_lo = 0;
  report.range_hi = pow2(max_bits) + 1;
  report.scope = "samples=" + std::to_string(samples) +
                 ", max-bits=" + std::to_string(max_bits) +
                 ", seed=" + std::to_string(seed);

  std::vector<Index> indices;
  indices.reserve(3 * (max_bits + 1) + samples);
  for (unsigned n = 0; n <= max_bits; ++n) {
    const mpz_class p = pow2(n);
    indices.push_back(p - 1);
    indices.push_back(p);
    indices.push_back(p + 1);
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % max_bits);
    mpz_class v = 1;  // leading bit set so v really has `len` bits
    for (std::size_t j = 1; j < len; ++j) {
      v <<= 1;
      if (rng() & 1) v |= 1;
    }
    indices.push_back(std::move(v));
  }

  struct Engine {
    SequenceKind kind;
    Count (*memoized)(const Index&);
  };
  static const Engine engines[] = {
      {SequenceKind::bprime(), [](const Index& k) { return bprime(k); }},
      {SequenceKind::b(), [](const Index& k) { return b(k); }},
      {SequenceKind::hatb(), [](const Index& k) { return hatb(k); }},
      {SequenceKind::stern(), [](const Index& k) { return stern(k); }},
      {SequenceKind::sigma(), [](const Index& k) { return sigma(k); }},
      {SequenceKind::digit_count(DigitBound(5)),
       [](const Index& k) { return digit_count(DigitBound(5), k); }},
  };

  for (const Index& k : indices) {
    for (const Engine& engine : engines) {
      Count fast = eval_any(engine.kind, k);
      Count slow = engine.memoized(k);
      if (fast != slow) {
        record_mismatch(report, k, std::move(slow), std::move(fast));
        return report;
      }
    }
  }
  return report;
}

void emit_bfile(const SequenceKind& seq, const Index& from, const Index& to,
                std::ostream& out) {
  if (from < 0 || from > to) {
    throw std::invalid_argument("emit_bfile requires 0 <= from <= to");
  }
  for (mpz_class n = from; n <= to; ++n) {
    out << n << ' ' << eval_any(seq, n) << '\n';
  }
}

std::string emit_bfile_text(const SequenceKind& seq, const Index& from,
                            const Index& to) {
  std::ostringstream out;
  emit_bfile(seq, from, to, out);
  return out.str();
}

std::vector<BFileRecord> make_bfile_records(const SequenceKind& seq,
                                            const Index& from,
                                            const Index& to) {
  if (from < 0 || from > to) {
    throw std::invalid_argument("emit_bfile requires 0 <= from <= to");
  }
  std::vector<BFileRecord> records;
  for (mpz_class n = from; n <= to; ++n) {
    records.push_back({n, eval_any(seq, n)});
  }
  return records;
}

CheckReport compare_bfile(const SequenceKind& seq,
                          const std::vector<BFileRecord>& records) {
  CheckReport report;
  report.check_name = "bfile-compare(" + seq.name() + ")";
  if (records.empty()) {
    report.scope = "no records";
    return report;
  }
  report.range_lo = records.front().n;
  report.range_hi = records.back().n;
  for (const BFileRecord& rec : records) {
    if (rec.n < 0) {
      throw std::invalid_argument("b-file record with negative index");
    }
    Count expected = eval_any(seq, rec.n);
    if (expected != rec.value) {
      record_mismatch(report, rec.n, std::move(expected), rec.value);
      break;
    }
  }
  return report;
}

}  // namespace sternbp
