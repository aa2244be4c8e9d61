#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sternbp/bigint.hpp"

namespace sternbp {

// Maximum base-2 digit allowed in a representation n = sum eps_i * 2^i.
// d = 5 gives the sixth binary partition function, d = 2 counts
// hyperbinary representations, d = 1 is plain binary.
class DigitBound {
 public:
  static constexpr int kMaxBound = 64;

  explicit DigitBound(int d);

  int value() const { return d_; }

  friend bool operator==(const DigitBound&, const DigitBound&) = default;

 private:
  int d_;
};

struct SequenceKind {
  enum class Tag { BPrime, B, HatB, Stern, Sigma, DigitCount };

  Tag tag = Tag::Stern;
  int digit_bound = 5;  // only meaningful for Tag::DigitCount

  static SequenceKind bprime() { return {Tag::BPrime, 5}; }
  static SequenceKind b() { return {Tag::B, 5}; }
  static SequenceKind hatb() { return {Tag::HatB, 5}; }
  static SequenceKind stern() { return {Tag::Stern, 5}; }
  static SequenceKind sigma() { return {Tag::Sigma, 5}; }
  static SequenceKind digit_count(DigitBound d) {
    return {Tag::DigitCount, d.value()};
  }

  // Accepted names: bprime, b, hatb, stern, sigma, digits.
  // "digits" picks up the supplied digit bound.
  static std::optional<SequenceKind> parse(std::string_view name,
                                           int digit_bound = 5);

  std::string name() const;

  friend bool operator==(const SequenceKind&, const SequenceKind&) = default;
};

struct EvalStats {
  std::size_t memo_entries = 0;
  std::uint64_t bigint_ops = 0;
};

// Point evaluation through the halving recurrences. Each call keeps its own
// memo (O(bit-length of k) entries, window of <= 3 consecutive indices per
// level; <= d/2+1 for digit_count) and walks an explicit worklist, so indices
// with thousands of bits cannot exhaust the call stack.
Count bprime(const Index& k, EvalStats* stats = nullptr);
Count b(const Index& k, EvalStats* stats = nullptr);
Count hatb(const Index& k, EvalStats* stats = nullptr);
Count stern(const Index& k, EvalStats* stats = nullptr);
Count sigma(const Index& k, EvalStats* stats = nullptr);
Count digit_count(DigitBound d, const Index& k, EvalStats* stats = nullptr);

// Dense tables of the first `count` values (indices 0..count-1), same
// recurrences evaluated bottom-up. Used by the range checks.
std::vector<Count> bprime_prefix(std::size_t count);
std::vector<Count> b_prefix(std::size_t count);
std::vector<Count> hatb_prefix(std::size_t count);
std::vector<Count> stern_prefix(std::size_t count);
std::vector<Count> sigma_prefix(std::size_t count);
std::vector<Count> digit_count_prefix(DigitBound d, std::size_t count);

}  // namespace sternbp
