#include "sternbp/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "sternbp/bigint.hpp"
#include "sternbp/descent.hpp"
#include "sternbp/oracle.hpp"
#include "sternbp/sequences.hpp"
#include "sternbp/verify.hpp"

namespace sternbp {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

struct CliConfig {
  std::string seq;
  std::string from = "0";
  std::string to;
  std::string index;
  std::string limit = "1024";
  std::string format = "bfile";
  std::string oracle_max;
  int digit_bound = 5;
  std::uint64_t seed = 42;
  std::uint64_t samples = 100;
  unsigned max_bits = 128;
  std::size_t table_cap = kDefaultTableCap;
  unsigned bench_bits = 4096;
  std::uint64_t bench_seed = 0;
  bool identity = false;
  bool halving = false;
  bool replay = false;
  bool cross = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Index parse_index_arg(const std::string& text, const char* what) {
  auto v = parse_index(text);
  if (!v) {
    throw UsageError(std::string(what) +
                     " must be a non-negative decimal integer, got \"" + text +
                     "\"");
  }
  return *v;
}

SequenceKind parse_seq_arg(const CliConfig& cfg) {
  auto kind = SequenceKind::parse(cfg.seq, cfg.digit_bound);
  if (!kind) {
    throw UsageError("unknown sequence \"" + cfg.seq +
                     "\" (expected bprime|b|hatb|stern|sigma|digits)");
  }
  return *kind;
}

int run_gen(const CliConfig& cfg, std::ostream& out) {
  const SequenceKind kind = parse_seq_arg(cfg);
  const Index from = parse_index_arg(cfg.from, "--from");
  const Index to = parse_index_arg(cfg.to, "--to");
  if (from > to) throw UsageError("--from must not exceed --to");
  for (mpz_class n = from; n <= to; ++n) {
    const Count value = eval_any(kind, n);
    if (cfg.format == "bfile") {
      out << n << ' ' << value << '\n';
    } else if (cfg.format == "csv") {
      out << n << ',' << value << '\n';
    } else {
      out << value << '\n';
    }
  }
  return kOk;
}

int run_eval(const CliConfig& cfg, std::ostream& out) {
  const SequenceKind kind = parse_seq_arg(cfg);
  const Index k = parse_index_arg(cfg.index, "--index");
  out << eval_any(kind, k) << '\n';
  return kOk;
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
  const Index limit = parse_index_arg(cfg.limit, "--limit");
  const bool all = !cfg.identity && !cfg.halving && !cfg.replay && !cfg.cross;
  bool ok = true;
  auto emit = [&](const CheckReport& report) {
    out << report.to_string() << '\n';
    ok = ok && report.passed;
  };
  if (all || cfg.identity) emit(check_main_identity(limit));
  if (all || cfg.halving) emit(check_halving(limit, cfg.table_cap));
  if (all || cfg.replay) {
    if (limit < 1) {
      throw UsageError(
          "the replay check requires --limit >= 1 (raise --limit or select "
          "other checks explicitly)");
    }
    emit(replay_proof(limit));
  }
  if (all || cfg.cross) {
    if (cfg.samples < 1) throw UsageError("--samples must be >= 1");
    emit(cross_engines(cfg.samples, cfg.max_bits, cfg.seed));
  }
  return ok ? kOk : kCheckFailed;
}

int run_oracle(const CliConfig& cfg, std::ostream& out) {
  const Index max_index = parse_index_arg(cfg.oracle_max, "--max");
  const std::size_t max_n = to_table_size(max_index);
  const DigitBound d(cfg.digit_bound);
  const CountTable table = gf_counts(d, max_n, cfg.table_cap);
  const std::vector<Count> recur = digit_count_prefix(d, max_n + 1);
  CheckReport report;
  report.check_name = "oracle==digits(d=" + std::to_string(d.value()) + ")";
  report.range_lo = 0;
  report.range_hi = max_index;
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (table.counts[n] != recur[n]) {
      report.passed = false;
      report.first_failure = CheckFailure{n, table.counts[n], recur[n]};
      break;
    }
  }
  out << report.to_string() << '\n';
  return report.passed ? kOk : kCheckFailed;
}

int run_bench(const CliConfig& cfg, std::ostream& out) {
  if (cfg.bench_bits < 1) throw UsageError("--bits must be >= 1");
  std::mt19937_64 rng(cfg.bench_seed);
  mpz_class k = 1;
  for (unsigned j = 1; j < cfg.bench_bits; ++j) {
    k <<= 1;
    if (rng() & 1) k |= 1;
  }

  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0)
        .count();
  };
  out << "bench: bits=" << cfg.bench_bits << " seed=" << cfg.bench_seed
      << '\n';
  out << std::fixed << std::setprecision(3);

  {
    DescentStats stats;
    auto t0 = clock::now();
    SternPair pair = stern_pair_descent(k, &stats);
    double ms = ms_since(t0);
    out << "stern-pair-descent    time=" << ms << "ms steps=" << stats.steps
        << " bigint-ops=" << stats.bigint_ops
        << " value-bits=" << bit_length(pair.lo) << '\n';
  }
  {
    DescentStats stats;
    auto t0 = clock::now();
    SigmaTriple triple = sigma_triple_descent(k, &stats);
    double ms = ms_since(t0);
    out << "sigma-triple-descent  time=" << ms << "ms steps=" << stats.steps
        << " bigint-ops=" << stats.bigint_ops
        << " value-bits=" << bit_length(triple.cur) << '\n';
  }
  {
    EvalStats stats;
    auto t0 = clock::now();
    Count v = stern(k, &stats);
    double ms = ms_since(t0);
    out << "memo-stern            time=" << ms
        << "ms memo-entries=" << stats.memo_entries
        << " bigint-ops=" << stats.bigint_ops
        << " value-bits=" << bit_length(v) << '\n';
  }
  {
    EvalStats stats;
    auto t0 = clock::now();
    Count v = sigma(k, &stats);
    double ms = ms_since(t0);
    out << "memo-sigma            time=" << ms
        << "ms memo-entries=" << stats.memo_entries
        << " bigint-ops=" << stats.bigint_ops
        << " value-bits=" << bit_length(v) << '\n';
  }
  return kOk;
}

int run_selftest(std::ostream& out) {
  const auto& prefix = a174868_prefix();
  bool ok = true;
  auto emit = [&](const char* name, bool passed) {
    out << (passed ? "PASS " : "FAIL ") << name << '\n';
    ok = ok && passed;
  };

  bool hatb_ok = true, sigma_ok = true, descent_ok = true;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    hatb_ok = hatb_ok && hatb(k) == prefix[k];
    sigma_ok = sigma_ok && sigma(k) == prefix[k];
    descent_ok = descent_ok &&
                 eval_any(SequenceKind::hatb(), k) == prefix[k] &&
                 eval_any(SequenceKind::sigma(), k) == prefix[k];
  }
  emit("hatb matches embedded prefix", hatb_ok);
  emit("sigma matches embedded prefix", sigma_ok);
  emit("descent engine matches embedded prefix", descent_ok);

  bool b_ok = true, bprime_ok = true;
  for (std::size_t k = 0; k + 1 < prefix.size(); ++k) {
    b_ok = b_ok && b(k) == prefix[k + 1];
    bprime_ok = bprime_ok && bprime(2 * k) == prefix[k + 1] &&
                bprime(2 * k + 1) == prefix[k + 1];
  }
  emit("b matches shifted prefix", b_ok);
  emit("bprime matches doubled prefix", bprime_ok);

  std::string expected;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    expected += std::to_string(k) + ' ' + std::to_string(prefix[k]) + '\n';
  }
  emit("b-file emission is byte-exact",
       emit_bfile_text(SequenceKind::hatb(), 0, 17) == expected);

  const auto records = parse_bfile_text(expected);
  emit("b-file comparison round-trips",
       compare_bfile(SequenceKind::hatb(), records).passed);

  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"digit-restricted binary partition counts and the Stern "
               "diatomic sequence"};
  app.name("sternbp");
  app.set_version_flag("--version", "sternbp 0.1.0");
  app.require_subcommand(1);

  CliConfig cfg;

  const std::string seq_help =
      "sequence: bprime|b|hatb|stern|sigma|digits (digits uses --digit-bound)";

  CLI::App* gen = app.add_subcommand("gen", "emit a range of sequence values");
  gen->add_option("--seq", cfg.seq, seq_help)->required();
  gen->add_option("--from", cfg.from, "first index (decimal, default 0)");
  gen->add_option("--to", cfg.to, "last index, inclusive")->required();
  gen->add_option("--format", cfg.format, "bfile|csv|plain (default bfile)")
      ->check(CLI::IsMember({"bfile", "csv", "plain"}));
  gen->add_option("--digit-bound", cfg.digit_bound, "max digit for digits")
      ->check(CLI::Range(1, DigitBound::kMaxBound));

  CLI::App* eval = app.add_subcommand("eval", "evaluate one sequence value");
  eval->add_option("--seq", cfg.seq, seq_help)->required();
  eval->add_option("--index", cfg.index, "index (decimal, any size)")
      ->required();
  eval->add_option("--digit-bound", cfg.digit_bound, "max digit for digits")
      ->check(CLI::Range(1, DigitBound::kMaxBound));

  CLI::App* verify = app.add_subcommand(
      "verify", "machine-check the identities (all checks if no flag given)");
  verify->add_flag("--identity", cfg.identity, "hatb(k) == sigma(k)");
  verify->add_flag("--halving", cfg.halving, "bprime(2k+1) == bprime(2k)");
  verify->add_flag("--replay", cfg.replay, "replay the derivation steps");
  verify->add_flag("--cross", cfg.cross, "descent vs memoized engines");
  verify->add_option("--limit", cfg.limit, "range limit (default 1024)");
  verify->add_option("--samples", cfg.samples,
                     "random indices for --cross (default 100)");
  verify->add_option("--max-bits", cfg.max_bits,
                     "max index bits for --cross (default 128)")
      ->check(CLI::Range(1u, 1u << 20));
  verify->add_option("--seed", cfg.seed, "RNG seed for --cross (default 42)");
  verify->add_option("--table-cap", cfg.table_cap,
                     "oracle table size cap for --halving");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "generating-function table vs the digit-count recurrence");
  oracle->add_option("--max", cfg.oracle_max, "table bound")->required();
  oracle->add_option("--digit-bound", cfg.digit_bound, "max digit (default 5)")
      ->check(CLI::Range(1, DigitBound::kMaxBound));
  oracle->add_option("--table-cap", cfg.table_cap, "oracle table size cap");

  CLI::App* bench = app.add_subcommand(
      "bench", "time each engine at a given index bit-length");
  bench->add_option("--bits", cfg.bench_bits, "index bit-length (default 4096)");
  bench->add_option("--seed", cfg.bench_seed,
                    "seed for the benchmark index (default 0)");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "compare against the embedded 18-term reference prefix");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sternbp");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (gen->parsed()) return run_gen(cfg, out);
    if (eval->parsed()) return run_eval(cfg, out);
    if (verify->parsed()) return run_verify(cfg, out);
    if (oracle->parsed()) return run_oracle(cfg, out);
    if (bench->parsed()) return run_bench(cfg, out);
    if (selftest->parsed()) return run_selftest(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sternbp
