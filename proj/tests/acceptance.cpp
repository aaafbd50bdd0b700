// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clspec/cli.hpp"
#include "clspec/polycert.hpp"
#include "clspec/report.hpp"
#include "clspec/verifier.hpp"

using namespace clspec;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs << "s/" << limit_s << "s";
  if (secs >= limit_s) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << number << ". " << title << " [" << t.str() << "]";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  o.ok = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

void require_pass(Outcome& o, const CheckReport& r) {
  std::ostringstream s;
  s << r.check_id << " " << to_string(r.status) << " (" << r.cases_checked << " cases, " << r.counterexamples.size()
    << " counterexamples";
  if (!r.counterexamples.empty()) s << ", first " << r.counterexamples.front();
  s << ")";
  require(o, r.ok(), s.str());
}

std::string records_without_elapsed(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  for (std::string line; std::getline(in, line);) {
    CheckReport r = parse_record(line);
    r.elapsed = std::chrono::milliseconds(0);
    out << to_record(r) << '\n';
  }
  return out.str();
}

}  // namespace

int main() {
  criterion(1, "certificate for (x^4-1, (x^7-7x+6)/(x-1)) is h = x-1, m = 75", 1.0, [] {
    Outcome o;
    const IntPolynomial f{-1, 0, 0, 0, 1};
    const IntPolynomial g = IntPolynomial{6, -7, 0, 0, 0, 0, 0, 1}.exact_divide(IntPolynomial{-1, 1});
    const GcdCertificate c = certify(f, g);
    require(o, c.h == IntPolynomial{-1, 1}, "h = " + c.h.to_string());
    require(o, c.m == 75, "m = " + c.m.get_str());
    require(o, c.identity_holds(), "identity does not hold");
    return o;
  });

  criterion(2, "gcd constants of igcd, igcd1, igcd2 hold for all qualifying |a| <= 500", 30.0, [] {
    Outcome o;
    for (const char* lemma : {"igcd", "igcd1", "igcd2"}) require_pass(o, check_gcd_lemmas(lemma, 500));
    return o;
  });

  criterion(3, "k-value constants and the k_12, k_8 closed forms for odd q <= 2000", 10.0, [] {
    Outcome o;
    const Integer at4 = k_i(5, Integer(4)) * k_i(12, Integer(4));
    require(o, at4 == 41 * 241,
            "k_5(4)k_12(4) = " + at4.get_str() + " = " + factor(at4).to_string() + ", not 41 * 241 = 9881 (k_5(-4)k_12(-4) = " +
                Integer(k_i(5, Integer(-4)) * k_i(12, Integer(-4))).get_str() + ")");
    require(o, k_i(10, Integer(17)) == 11 * 71 * 101, "k_10(17)");
    std::uint64_t n = 0;
    for (auto q : prime_powers_up_to(2000)) {
      if (q % 2 == 0) continue;
      const Integer Q(static_cast<unsigned long>(q));
      const Integer q4 = Q * Q * Q * Q;
      require(o, k_i(12, Q) == q4 - Q * Q + 1, "k_12(" + Q.get_str() + ")");
      require(o, k_i(8, Q) == (q4 + 1) / 2, "k_8(" + Q.get_str() + ")");
      ++n;
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(n) + " odd prime powers checked";
    return o;
  });

  criterion(4, "closed-form k_i and LTE agree with their definitions", 120.0, [] {
    Outcome o;
    require_pass(o, check_kiphi(60, 30));
    require_pass(o, check_lte(50, 40, 50));
    return o;
  });

  criterion(5, "R_i(a) is empty exactly on the Bang-Zsigmondy exceptions, |a| <= 100, i <= 50", 120.0, [] {
    Outcome o;
    require_pass(o, check_zsigmondy(100, 50));
    return o;
  });

  criterion(6, "Table 1 coherence and the kzky bounds for odd 5 <= q <= 2000", 60.0, [] {
    Outcome o;
    require_pass(o, check_zy(2000));
    require_pass(o, check_kzky(2000));
    return o;
  });

  criterion(7, "k_8(u) = k_7(-13) and k_5(+-u) = k_7(-25) have no solutions", 20.0, [] {
    Outcome o;
    const auto start = Clock::now();
    const KEquationResult a = solve_k_equation(8, k_i(7, Integer(-13)), false);
    const double ta = std::chrono::duration<double>(Clock::now() - start).count();
    const KEquationResult b = solve_k_equation(5, k_i(7, Integer(-25)), true);
    const double tb = std::chrono::duration<double>(Clock::now() - start).count() - ta;
    require(o, a.solutions.empty() && a.sufficient_bound > 0, "l8 equation has solutions");
    require(o, b.solutions.empty() && b.sufficient_bound > 0, "o10 equation has solutions");
    require(o, ta < 10.0 && tb < 10.0, "one search took 10 s or more");
    if (o.ok)
      o.detail = "bounds u <= " + std::to_string(a.sufficient_bound) + " and u <= " + std::to_string(b.sufficient_bound);
    return o;
  });

  criterion(8, "finite re-enumerations: small (u <= 23, q <= 31), fpoly (q <= 59), t5", 60.0, [] {
    Outcome o;
    const SmallCasesResult s = run_small_cases();
    require(o, s.q5_u_bound == 23, "u bound " + std::to_string(s.q5_u_bound));
    require(o, s.q5_distinct.size() == 1, std::to_string(s.q5_distinct.size()) + " distinct hits");
    if (s.q5_distinct.size() == 1) {
      require(o, s.q5_distinct[0].first == 17 && s.q5_distinct[0].second == 78881, "hit is not u=17, 78881");
    }
    for (const auto& h : s.q5_hits) require(o, h.witness == "101", "hit " + h.S + " not eliminated by 101");
    require(o, s.c_q_bound >= 31, "q sweep stops below 31");
    require(o, s.c_hits.empty(), std::to_string(s.c_hits.size()) + " hits in the q sweep");
    require_pass(o, check_small_cases());
    require_pass(o, check_fpoly_cases(59));
    require_pass(o, check_t5_seventh_power_case());
    if (o.ok) o.detail = "q sweep ran to " + std::to_string(s.c_q_bound);
    return o;
  });

  criterion(9, "bounds parts 1-5 and ineq for q <= 2000, i <= 30", 120.0, [] {
    Outcome o;
    for (int part = 1; part <= 5; ++part) require_pass(o, check_bounds_lemma(part, 2000));
    require_pass(o, check_ineq_lemma(2000, 30));
    return o;
  });

  criterion(10, "no k_5 collision violates the lemma for prime powers <= 200", 30.0, [] {
    Outcome o;
    require_pass(o, search_k5_collisions(200));
    return o;
  });

  criterion(11, "verify --all --profile quick is deterministic across worker counts and under 60 s", 120.0, [] {
    Outcome o;
    auto run = [&](const char* jobs, double& secs) {
      const char* argv[] = {"clspec", "verify", "--all", "--profile", "quick", "--format", "records", "--jobs", jobs};
      std::ostringstream out, err;
      const auto start = Clock::now();
      run_cli(9, argv, out, err);
      secs = std::chrono::duration<double>(Clock::now() - start).count();
      return out.str();
    };
    double t1 = 0, t4 = 0;
    const std::string a = run("1", t1), b = run("4", t4);
    require(o, !a.empty(), "no output");
    require(o, records_without_elapsed(a) == records_without_elapsed(b), "records differ between --jobs 1 and 4");
    require(o, t1 < 60.0 && t4 < 60.0, "a quick run took 60 s or more");
    std::ostringstream d;
    d.precision(1);
    d << std::fixed << "jobs=1 " << t1 << "s, jobs=4 " << t4 << "s";
    if (o.ok) o.detail = d.str();
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
