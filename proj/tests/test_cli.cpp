#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "sternbp/cli.hpp"
#include "sternbp/verify.hpp"

using namespace sternbp;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval prints a single value") {
  CliResult r = run({"eval", "--seq", "hatb", "--index", "17"});
  CHECK(r.code == 0);
  CHECK(r.out == "46\n");
  CHECK(r.err.empty());

  r = run({"eval", "--seq", "stern", "--index", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("eval handles huge indices") {
  // 2^64; s at a power of two is 1
  CliResult r = run({"eval", "--seq", "stern", "--index", "18446744073709551616"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("eval digits uses the digit bound") {
  CliResult r =
      run({"eval", "--seq", "digits", "--digit-bound", "2", "--index", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("gen formats") {
  CliResult r = run({"gen", "--seq", "b", "--from", "0", "--to", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1\n1 2\n2 4\n");

  r = run({"gen", "--seq", "b", "--to", "2", "--format", "csv"});
  CHECK(r.out == "0,1\n1,2\n2,4\n");

  r = run({"gen", "--seq", "b", "--to", "2", "--format", "plain"});
  CHECK(r.out == "1\n2\n4\n");
}

TEST_CASE("gen output re-read by compare_bfile always passes") {
  for (const char* seq : {"bprime", "b", "hatb", "stern", "sigma"}) {
    CliResult r = run({"gen", "--seq", seq, "--from", "3", "--to", "80"});
    REQUIRE(r.code == 0);
    const auto kind = SequenceKind::parse(seq);
    REQUIRE(kind.has_value());
    CAPTURE(seq);
    CHECK(compare_bfile(*kind, parse_bfile_text(r.out)).passed);
  }
}

TEST_CASE("verify identity line matches the documented format") {
  CliResult r = run({"verify", "--identity", "--limit", "256"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS hatb==sigma [0,256]\n");
}

TEST_CASE("verify runs all checks by default") {
  CliResult r = run({"verify", "--limit", "64", "--samples", "5", "--max-bits",
                     "32", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS hatb==sigma [0,64]") != std::string::npos);
  CHECK(r.out.find("PASS bprime-halving [0,64]") != std::string::npos);
  CHECK(r.out.find("PASS proof-replay [1,64]") != std::string::npos);
  CHECK(r.out.find("PASS cross-engines") != std::string::npos);
  CHECK(r.out.find("seed=1") != std::string::npos);
}

TEST_CASE("identical invocations are byte identical") {
  const std::vector<std::string> gen_args = {"gen", "--seq", "sigma", "--to",
                                             "40"};
  CHECK(run(gen_args).out == run(gen_args).out);
  const std::vector<std::string> verify_args = {
      "verify", "--limit", "32", "--samples", "3", "--max-bits", "16"};
  CHECK(run(verify_args).out == run(verify_args).out);
}

TEST_CASE("oracle subcommand") {
  CliResult r = run({"oracle", "--max", "512"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS oracle==digits(d=5) [0,512]\n");

  r = run({"oracle", "--max", "128", "--digit-bound", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS oracle==digits(d=2) [0,128]\n");
}

TEST_CASE("selftest passes") {
  CliResult r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS hatb matches embedded prefix") != std::string::npos);
  CHECK(r.out.find("PASS b-file emission is byte-exact") != std::string::npos);
}

TEST_CASE("bench reports the descent counters") {
  CliResult r = run({"bench", "--bits", "64"});
  CHECK(r.code == 0);
  CHECK(r.out.find("stern-pair-descent") != std::string::npos);
  CHECK(r.out.find("bigint-ops=64") != std::string::npos);
  CHECK(r.out.find("memo-sigma") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);

  CliResult r = run({"eval", "--seq", "hatb", "--index", "-5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("non-negative decimal") != std::string::npos);

  CHECK(run({"eval", "--seq", "hatb", "--index", "12x45"}).code == 2);
  CHECK(run({"eval", "--seq", "nope", "--index", "1"}).code == 2);
  CHECK(run({"eval", "--seq", "digits", "--digit-bound", "99", "--index", "1"})
            .code == 2);
  CHECK(run({"gen", "--seq", "b", "--from", "5", "--to", "2"}).code == 2);
  CHECK(run({"gen", "--seq", "b", "--to", "2", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--replay", "--limit", "0"}).code == 2);
  CHECK(run({"oracle", "--max", "100", "--table-cap", "50"}).code == 2);
}

TEST_CASE("help and version exit cleanly") {
  CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gen") != std::string::npos);
  CHECK(r.out.find("selftest") != std::string::npos);

  r = run({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}

}  // TEST_SUITE
