#include "sternbp/sequences.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace sternbp {

DigitBound::DigitBound(int d) : d_(d) {
  if (d < 1 || d > kMaxBound) {
    throw std::invalid_argument("digit bound must be in [1, " +
                                std::to_string(kMaxBound) + "], got " +
                                std::to_string(d));
  }
}

std::optional<SequenceKind> SequenceKind::parse(std::string_view name,
                                                int digit_bound) {
  if (name == "bprime") return bprime();
  if (name == "b") return b();
  if (name == "hatb") return hatb();
  if (name == "stern") return stern();
  if (name == "sigma") return sigma();
  if (name == "digits") return digit_count(DigitBound(digit_bound));
  return std::nullopt;
}

std::string SequenceKind::name() const {
  switch (tag) {
    case Tag::BPrime:
      return "bprime";
    case Tag::B:
      return "b";
    case Tag::HatB:
      return "hatb";
    case Tag::Stern:
      return "stern";
    case Tag::Sigma:
      return "sigma";
    case Tag::DigitCount:
      return "digits(d=" + std::to_string(digit_bound) + ")";
  }
  return "?";
}

namespace {

struct Term {
  unsigned coeff;
  mpz_class idx;
};

// Evaluates a halving recurrence at k with an explicit worklist. base(n)
// yields the value for base indices; expand(n, out) appends the recurrence
// terms otherwise, each with index in [0, n). The memo only ever holds a
// window of consecutive indices around k / 2^j per level, so it stays at
// O(bit_length(k)) entries no matter how large k is.
template <typename BaseFn, typename ExpandFn>
mpz_class eval_worklist(const mpz_class& k, BaseFn base, ExpandFn expand,
                        EvalStats* stats) {
  std::map<mpz_class, mpz_class> memo;
  std::vector<mpz_class> todo;
  std::vector<Term> terms;
  std::uint64_t ops = 0;
  todo.push_back(k);
  while (!todo.empty()) {
    mpz_class n = todo.back();
    if (memo.find(n) != memo.end()) {
      todo.pop_back();
      continue;
    }
    if (auto v = base(n)) {
      memo.emplace(std::move(n), mpz_class(*v));
      todo.pop_back();
      continue;
    }
    terms.clear();
    expand(n, terms);
    bool ready = true;
    for (const Term& t : terms) {
      if (memo.find(t.idx) == memo.end()) {
        ready = false;
        todo.push_back(t.idx);
      }
    }
    if (!ready) continue;  // n stays put below its pending children
    mpz_class acc = 0;
    for (const Term& t : terms) {
      const mpz_class& v = memo.at(t.idx);
      if (t.coeff == 1) {
        acc += v;
      } else {
        acc += t.coeff * v;
      }
      ++ops;
    }
    memo.emplace(std::move(n), std::move(acc));
    todo.pop_back();
  }
  if (stats) {
    stats->memo_entries = memo.size();
    stats->bigint_ops = ops;
  }
  return memo.at(k);
}

void require_nonnegative(const mpz_class& k) {
  if (k < 0) throw std::invalid_argument("negative sequence index");
}

std::optional<unsigned> base01(const mpz_class& n, unsigned at0, unsigned at1) {
  if (n == 0) return at0;
  if (n == 1) return at1;
  return std::nullopt;
}

// b'_{2k} = b'_k + b'_{k-1} + b'_{k-2},  b'_{2k+1} = b'_{2k},  b'_0 = 1,
// terms with negative index dropped (b'_{n<0} = 0).
void expand_bprime(const mpz_class& n, std::vector<Term>& out) {
  if (mpz_odd_p(n.get_mpz_t())) {
    out.push_back({1, n - 1});
    return;
  }
  mpz_class k = n >> 1;
  out.push_back({1, k});
  if (k >= 1) out.push_back({1, k - 1});
  if (k >= 2) out.push_back({1, k - 2});
}

// b_{2k} = 2b_{k-1} + b_k,  b_{2k+1} = 2b_k + b_{k-1},  b_0 = 1, b_1 = 2.
void expand_b(const mpz_class& n, std::vector<Term>& out) {
  mpz_class k = n >> 1;
  if (mpz_odd_p(n.get_mpz_t())) {
    out.push_back({2, k});
    out.push_back({1, k - 1});
  } else {
    out.push_back({2, k - 1});
    out.push_back({1, k});
  }
}

// hatb and sigma satisfy the same recurrence with the same bases:
// x_{2k} = 2x_k + x_{k-1},  x_{2k+1} = 2x_k + x_{k+1},  x_0 = 0, x_1 = 1.
// The odd case reaches k+1 <= n - 1 for n >= 3, so the walk still descends.
void expand_partial_sum(const mpz_class& n, std::vector<Term>& out) {
  mpz_class k = n >> 1;
  out.push_back({2, k});
  if (mpz_odd_p(n.get_mpz_t())) {
    out.push_back({1, k + 1});
  } else {
    out.push_back({1, k - 1});
  }
}

// s_{2k} = s_k,  s_{2k+1} = s_k + s_{k+1},  s_0 = 0, s_1 = 1.
void expand_stern(const mpz_class& n, std::vector<Term>& out) {
  mpz_class k = n >> 1;
  if (mpz_odd_p(n.get_mpz_t())) {
    out.push_back({1, k});
    out.push_back({1, k + 1});
  } else {
    out.push_back({1, std::move(k)});
  }
}

}  // namespace

Count bprime(const Index& k, EvalStats* stats) {
  require_nonnegative(k);
  return eval_worklist(
      k,
      [](const mpz_class& n) -> std::optional<unsigned> {
        if (n == 0) return 1u;
        return std::nullopt;
      },
      expand_bprime, stats);
}

Count b(const Index& k, EvalStats* stats) {
  require_nonnegative(k);
  return eval_worklist(
      k, [](const mpz_class& n) { return base01(n, 1, 2); }, expand_b, stats);
}

Count hatb(const Index& k, EvalStats* stats) {
  require_nonnegative(k);
  return eval_worklist(
      k, [](const mpz_class& n) { return base01(n, 0, 1); },
      expand_partial_sum, stats);
}

Count stern(const Index& k, EvalStats* stats) {
  require_nonnegative(k);
  return eval_worklist(
      k, [](const mpz_class& n) { return base01(n, 0, 1); }, expand_stern,
      stats);
}

Count sigma(const Index& k, EvalStats* stats) {
  require_nonnegative(k);
  return eval_worklist(
      k, [](const mpz_class& n) { return base01(n, 0, 1); },
      expand_partial_sum, stats);
}

Count digit_count(DigitBound d, const Index& k, EvalStats* stats) {
  require_nonnegative(k);
  // c(2k) = sum_{e even <= d} c(k - e/2), c(2k+1) = sum_{e odd <= d}
  // c(k - (e-1)/2), c(0) = 1, c(n<0) = 0.
  const int dv = d.value();
  auto expand = [dv](const mpz_class& n, std::vector<Term>& out) {
    mpz_class k2 = n >> 1;
    const int jmax = mpz_odd_p(n.get_mpz_t()) ? (dv - 1) / 2 : dv / 2;
    for (int j = 0; j <= jmax; ++j) {
      mpz_class idx = k2 - j;
      if (idx < 0) break;
      out.push_back({1, std::move(idx)});
    }
  };
  return eval_worklist(
      k,
      [](const mpz_class& n) -> std::optional<unsigned> {
        if (n == 0) return 1u;
        return std::nullopt;
      },
      expand, stats);
}

std::vector<Count> bprime_prefix(std::size_t count) {
  std::vector<Count> t(count);
  if (count > 0) t[0] = 1;
  for (std::size_t n = 1; n < count; ++n) {
    if (n % 2 == 1) {
      t[n] = t[n - 1];
      continue;
    }
    const std::size_t k = n / 2;
    t[n] = t[k];
    if (k >= 1) t[n] += t[k - 1];
    if (k >= 2) t[n] += t[k - 2];
  }
  return t;
}

std::vector<Count> b_prefix(std::size_t count) {
  std::vector<Count> t(count);
  if (count > 0) t[0] = 1;
  if (count > 1) t[1] = 2;
  for (std::size_t n = 2; n < count; ++n) {
    const std::size_t k = n / 2;
    if (n % 2 == 0) {
      t[n] = 2 * t[k - 1] + t[k];
    } else {
      t[n] = 2 * t[k] + t[k - 1];
    }
  }
  return t;
}

namespace {

std::vector<Count> partial_sum_recurrence_prefix(std::size_t count) {
  std::vector<Count> t(count);
  if (count > 0) t[0] = 0;
  if (count > 1) t[1] = 1;
  for (std::size_t n = 2; n < count; ++n) {
    const std::size_t k = n / 2;
    if (n % 2 == 0) {
      t[n] = 2 * t[k] + t[k - 1];
    } else {
      t[n] = 2 * t[k] + t[k + 1];  // k + 1 <= n - 1 for odd n >= 3
    }
  }
  return t;
}

}  // namespace

std::vector<Count> hatb_prefix(std::size_t count) {
  return partial_sum_recurrence_prefix(count);
}

std::vector<Count> sigma_prefix(std::size_t count) {
  return partial_sum_recurrence_prefix(count);
}

std::vector<Count> stern_prefix(std::size_t count) {
  std::vector<Count> t(count);
  if (count > 0) t[0] = 0;
  if (count > 1) t[1] = 1;
  for (std::size_t n = 2; n < count; ++n) {
    const std::size_t k = n / 2;
    if (n % 2 == 0) {
      t[n] = t[k];
    } else {
      t[n] = t[k] + t[k + 1];
    }
  }
  return t;
}

std::vector<Count> digit_count_prefix(DigitBound d, std::size_t count) {
  std::vector<Count> t(count);
  if (count > 0) t[0] = 1;
  const std::size_t dv = static_cast<std::size_t>(d.value());
  for (std::size_t n = 1; n < count; ++n) {
    const std::size_t k = n / 2;
    const std::size_t jmax = std::min(k, (n % 2 == 1) ? (dv - 1) / 2 : dv / 2);
    mpz_class acc = 0;
    for (std::size_t j = 0; j <= jmax; ++j) {
      acc += t[k - j];
    }
    t[n] = std::move(acc);
  }
  return t;
}

}  // namespace sternbp
