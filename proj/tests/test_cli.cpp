#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "clspec/cli.hpp"
#include "clspec/report.hpp"

using namespace clspec;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "clspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("invariants") {
  const Run r = run({"invariants", "O12+ q=5"});
  CHECK(r.code == exit_ok);
  CHECK(has(r.out, "m_z = 1563 = 3 * 521"));
  CHECK(has(r.out, "m_y = 1562 = 2 * 11 * 71"));
  CHECK(has(r.out, "gcd(m_z, m_y) = 1"));
  CHECK(has(r.out, "k_z = k_10(5) = 521"));

  // Split tokens are joined back together.
  const Run split = run({"invariants", "L8+", "q=9"});
  CHECK(split.code == exit_ok);
  CHECK(has(split.out, "z = 7, y = 8"));

  const Run unitary = run({"invariants", "U8 q=7"});
  CHECK(has(unitary.out, "group: L8-(7)"));
  CHECK(has(unitary.out, "k_z = k_"));
  CHECK(has(unitary.out, "(-7)"));
}

TEST_CASE("invariants: errors") {
  const Run even = run({"invariants", "O12+ q=4"});
  CHECK(even.code == exit_usage);
  CHECK(has(even.err, "q must be odd for Table-1 invariants"));

  const Run scope = run({"invariants", "S10 q=3"});
  CHECK(scope.code == exit_usage);
  CHECK(has(scope.err, "L8+, L8-, O10+, O10-, O12+"));

  const Run bad = run({"invariants", "L8+ q=12"});
  CHECK(bad.code == exit_usage);
  CHECK(has(bad.err, "'q=12'"));

  CHECK(run({"invariants"}).code == exit_usage);
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--check", "k5", "--check", "l8-nosol"});
  CHECK(ok.code == exit_ok);
  CHECK(has(ok.out, "ALL CHECKS PASSED (2 checks)"));
  CHECK(has(ok.out, "tables-v1:"));

  const Run igcd = run({"verify", "--check", "igcd", "--range", "500"});
  CHECK(igcd.code == exit_check_failed);
  CHECK(has(igcd.out, "a=9,gcd=20,bound=32"));

  const Run records = run({"verify", "--check", "small", "--format", "records"});
  CHECK(records.code == exit_ok);
  std::istringstream in(records.out);
  const auto parsed = read_records(in);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].check_id == "small");
  CHECK(parsed[0].status == CheckStatus::pass);
}

TEST_CASE("verify: usage errors") {
  const Run unknown = run({"verify", "--check", "nosuch"});
  CHECK(unknown.code == exit_usage);
  CHECK(has(unknown.err, "nosuch"));
  CHECK(has(unknown.err, "lte"));

  CHECK(run({"verify", "--all", "--check", "k5"}).code == exit_usage);
  CHECK(run({"verify", "--range", "0"}).code == exit_usage);
  CHECK(run({"verify", "--jobs", "0"}).code == exit_usage);
  CHECK(run({"verify", "--profile", "slow"}).code == exit_usage);
  CHECK(run({"verify", "--format", "xml"}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({}).code == exit_usage);
}

TEST_CASE("verify: --out writes the report") {
  const std::string path = "clspec_test_out.tsv";
  const Run r = run({"verify", "--check", "t5", "--format", "records", "--out", path});
  CHECK(r.code == exit_ok);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto parsed = read_records(in);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].check_id == "t5");
  std::remove(path.c_str());
}

TEST_CASE("certify") {
  const Run r = run({"certify", "--f", "-1 0 0 0 1", "--g", "-6 1 1 1 1 1 1"});
  CHECK(r.code == exit_ok);
  CHECK(has(r.out, "h = x - 1"));
  CHECK(has(r.out, "m = 75"));
  CHECK(has(r.out, "identity f*u + g*v = m*h: verified"));
  CHECK(has(r.out, "99 divisible, 1 degenerate, 0 violations"));

  const Run small = run({"certify", "--f", "-1 0 1", "--g", "-1 0 0 1"});
  CHECK(has(small.out, "m = 1"));

  const Run zero = run({"certify", "--f", "0", "--g", "1 1"});
  CHECK(zero.code == exit_usage);
  CHECK(run({"certify", "--f", "1 x", "--g", "1"}).code == exit_usage);
  CHECK(run({"certify", "--f", "1 1"}).code == exit_usage);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == exit_ok);
  CHECK(has(r.out, "verify"));
}
