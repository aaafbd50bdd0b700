#include "doctest.h"

#include <sstream>

#include "clspec/report.hpp"

using namespace clspec;

namespace {

CheckReport sample() {
  CheckReport r;
  r.check_id = "igcd";
  r.domain_description = "odd a; |a| <= 500\twith tabs";
  r.cases_checked = 1494;
  r.degenerate_cases = 2;
  r.counterexamples = {"(a=9,gcd=20)", "(a=19,gcd=40)"};
  r.notes = {"first", "second; with semicolon"};
  r.elapsed = std::chrono::milliseconds(12);
  r.finalize();
  return r;
}

}  // namespace

TEST_CASE("status derivation") {
  CheckReport r;
  r.finalize();
  CHECK(r.status == CheckStatus::pass);
  r.degenerate_cases = 1;
  r.finalize();
  CHECK(r.status == CheckStatus::degenerate);
  CHECK(r.ok());
  r.counterexamples.push_back("x");
  r.finalize();
  CHECK(r.status == CheckStatus::fail);
  CHECK_FALSE(r.ok());
}

TEST_CASE("status names") {
  for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::degenerate}) CHECK(parse_status(to_string(s)) == s);
  CHECK(to_string(CheckStatus::degenerate) == "degenerate-cases-present");
  CHECK_THROWS_AS(parse_status("ok"), std::invalid_argument);
}

TEST_CASE("record round trip") {
  const CheckReport r = sample();
  const std::string line = to_record(r);
  CHECK(line.find('\n') == std::string::npos);
  const CheckReport back = parse_record(line);
  CHECK(back.check_id == r.check_id);
  CHECK(back.status == CheckStatus::fail);
  CHECK(back.cases_checked == 1494);
  CHECK(back.counterexamples == r.counterexamples);
  CHECK(back.elapsed == r.elapsed);
  CHECK(back.degenerate_cases == 2);
  CHECK(back.domain_description == "odd a, |a| <= 500 with tabs");
  CHECK(back.notes == std::vector<std::string>{"first", "second, with semicolon"});
  CHECK(to_record(back) == line);
}

TEST_CASE("record: six-field core") {
  const CheckReport r = parse_record("lte\tpass\t10\t0\t\t5");
  CHECK(r.check_id == "lte");
  CHECK(r.cases_checked == 10);
  CHECK(r.counterexamples.empty());
  CHECK(r.elapsed.count() == 5);
}

TEST_CASE("record: malformed lines") {
  CHECK_THROWS_AS(parse_record("lte\tpass\t10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_record("lte\tmaybe\t10\t0\t\t5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_record("lte\tpass\tten\t0\t\t5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_record("lte\tfail\t10\t2\tonly-one\t5"), std::invalid_argument);
}

TEST_CASE("record streams") {
  std::stringstream ss;
  write_records(ss, {sample(), CheckReport{}});
  const auto back = read_records(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0].check_id == "igcd");
  CHECK(back[1].status == CheckStatus::pass);
}

TEST_CASE("human report") {
  std::ostringstream os;
  write_human(os, {sample()});
  const std::string text = os.str();
  CHECK(text.find("counterexample: (a=9,gcd=20)") != std::string::npos);
  CHECK(text.find("SOME CHECKS FAILED (1 checks)") != std::string::npos);
  std::ostringstream ok;
  write_human(ok, {CheckReport{}});
  CHECK(ok.str().find("ALL CHECKS PASSED") != std::string::npos);
}

TEST_CASE("sanitize_field") {
  CHECK(sanitize_field("a\tb;c\nd") == "a b,c d");
}
