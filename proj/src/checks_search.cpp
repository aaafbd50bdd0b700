#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "check_util.hpp"
#include "clspec/parallel.hpp"
#include "clspec/polynomial.hpp"
#include "clspec/tables.hpp"
#include "clspec/verifier.hpp"

namespace clspec {

using detail::divides;
using detail::gcd_of;

namespace {

// Largest u >= 1 with below(u) true, for a predicate that is true up to a point and false after.
std::uint64_t last_true(const std::function<bool(const Integer&)>& below) {
  std::uint64_t lo = 1, hi = 2;
  while (below(Integer(static_cast<unsigned long>(hi)))) hi *= 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (below(Integer(static_cast<unsigned long>(mid))) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

CheckReport search_k5_collisions(std::uint64_t N, unsigned jobs) {
  if (N < 3) throw std::invalid_argument("k5 collision search needs N >= 3");
  CheckReport report;
  report.check_id = "k5";
  {
    ReportTimer timer(report);
    report.domain_description =
        "pairs a, b with |a| != |b| prime powers <= " + std::to_string(N) +
        " and k_5(a) = k_5(b); each must have (5,a-1) != (5,b-1) and k_5(-a) != k_5(-b)";
    const auto as = detail::signed_prime_powers(N);
    auto ks = parallel_map<Integer>(as.size(), jobs, [&](std::size_t i) { return k_i(5, as[i]); });
    std::map<Integer, std::vector<Integer>> by_value;
    for (std::size_t i = 0; i < as.size(); ++i) by_value[ks[i]].push_back(as[i]);
    const std::uint64_t n = as.size();
    report.cases_checked = n * (n - 2) / 2;  // unordered pairs with |a| != |b|
    std::vector<std::pair<Integer, Integer>> collisions;
    for (auto& [value, members] : by_value) {
      std::sort(members.begin(), members.end());
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (abs(members[i]) != abs(members[j])) collisions.emplace_back(members[i], members[j]);
    }
    std::sort(collisions.begin(), collisions.end());
    for (const auto& [a, b] : collisions) {
      const Integer k = k_i(5, a);
      const bool residues_differ = gcd_of(Integer(5), a - 1) != gcd_of(Integer(5), b - 1);
      const bool negated_differ = k_i(5, -a) != k_i(5, -b);
      const std::string t = "(a=" + a.get_str() + ",b=" + b.get_str() + ",k5=" + k.get_str() + ")";
      report.notes.push_back("collision " + t + (residues_differ && negated_differ ? " compliant" : " VIOLATES"));
      if (!residues_differ || !negated_differ) report.counterexamples.push_back(t);
    }
    if (collisions.empty()) report.notes.push_back("no collisions");
  }
  report.finalize();
  return report;
}

KEquationResult solve_k_equation(long i, const Integer& target, bool both_signs, std::uint64_t u_bound) {
  if (i < 3) throw std::invalid_argument("solve_k_equation: i must be at least 3");
  KEquationResult out;
  out.i = i;
  out.target = target;
  out.both_signs = both_signs;
  const auto phi = euler_phi(static_cast<std::uint64_t>(i));
  std::function<bool(const Integer&)> below;
  if (i == 8 || i == 12) {
    out.lower_bound = "k_" + std::to_string(i) + "(+-u) >= (u^4+1)/2";
    below = [&](const Integer& u) { return ipow(u, 4) + 1 <= 2 * target; };
  } else if (i == 5 || i == 10) {
    out.lower_bound = "k_" + std::to_string(i) + "(+-u) > u^4/6+1 except at +-4";
    below = [&](const Integer& u) { return ipow(u, 4) + 6 <= 6 * target; };
  } else if (phi > 4) {
    out.lower_bound = "k_" + std::to_string(i) + "(+-u) > u^4";
    below = [&](const Integer& u) { return ipow(u, 4) <= target; };
  } else {
    out.lower_bound = "k_" + std::to_string(i) + "(+-u) >= (u^2-u+1)/3";
    below = [&](const Integer& u) { return u * u - u + 1 <= 3 * target; };
  }
  out.sufficient_bound = std::max<std::uint64_t>(last_true(below), 4);
  const std::uint64_t limit = std::max(out.sufficient_bound, u_bound);
  for (auto u : prime_powers_up_to(limit)) {
    const Integer uu(static_cast<unsigned long>(u));
    ++out.candidates;
    if (k_i(i, uu) == target) out.solutions.push_back(uu);
    if (both_signs) {
      ++out.candidates;
      if (k_i(i, -uu) == target) out.solutions.push_back(-uu);
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

CheckReport check_k_equation(const std::string& id, long i, const Integer& target, bool both_signs) {
  CheckReport report;
  report.check_id = id;
  {
    ReportTimer timer(report);
    const KEquationResult r = solve_k_equation(i, target, both_signs);
    std::ostringstream d;
    d << "k_" << i << "(" << (both_signs ? "+-u" : "u") << ") = " << target.get_str()
      << " over prime powers u <= " << r.sufficient_bound << "; beyond that " << r.lower_bound << " exceeds the target";
    report.domain_description = d.str();
    report.cases_checked = r.candidates;
    report.notes.push_back("sufficient bound " + std::to_string(r.sufficient_bound) + " from " + r.lower_bound +
                           "; the lower bound is increasing in u");
    for (const auto& s : r.solutions) report.counterexamples.push_back("(u=" + s.get_str() + ")");
  }
  report.finalize();
  return report;
}

CheckReport check_fpoly_cases(std::uint64_t q_bound) {
  CheckReport report;
  report.check_id = "fpoly";
  {
    ReportTimer timer(report);
    const IntPolynomial f{4, 3, 2, 1};
    const Integer a = 10 * 7 * 31 * 97;
    report.domain_description =
        "f(x)=x^3+2x^2+3x+4; for odd prime powers q <= " + std::to_string(q_bound) +
        " and e=+-1 with 5 | q-e: (f(eq))_5 = 5, f(eq) = 2 mod 4 and f(eq) does not divide " + a.get_str() +
        "; also every odd prime power q with |f(eq)| <= " + a.get_str() + " is at most 59";
    for (auto qv : detail::odd_prime_powers(3, q_bound)) {
      const Integer q(static_cast<unsigned long>(qv));
      for (int e : {1, -1}) {
        if (!divides(5, q - e)) continue;
        ++report.cases_checked;
        const Integer eq = e * q;
        const Integer fe = f(eq);
        Integer mod4;
        mpz_fdiv_r_ui(mod4.get_mpz_t(), fe.get_mpz_t(), 4);
        std::string bad;
        if (r_part(fe, 5) != 5) bad += ",5-part=" + r_part(fe, 5).get_str();
        if (mod4 != 2) bad += ",mod4=" + mod4.get_str();
        if (divides(fe, a)) bad += ",divides a";
        if (!bad.empty()) report.counterexamples.push_back("(eq=" + eq.get_str() + ",f=" + fe.get_str() + bad + ")");
      }
    }
    // |f(x)| and |f(-x)| increase for x >= 2, so scanning to the first q past a suffices.
    std::uint64_t largest = 0;
    for (auto qv : detail::odd_prime_powers(3, 100000)) {
      const Integer q(static_cast<unsigned long>(qv));
      const Integer small = std::min<Integer>(abs(f(q)), abs(f(-q)));
      if (small > a) break;
      largest = qv;
    }
    report.notes.push_back("largest odd prime power q with min |f(+-q)| <= a: " + std::to_string(largest));
    if (largest > 59) report.counterexamples.push_back("(q=" + std::to_string(largest) + ",|f| <= a beyond 59)");
  }
  report.finalize();
  return report;
}

CheckReport check_t5_seventh_power_case() {
  CheckReport report;
  report.check_id = "t5";
  {
    ReportTimer timer(report);
    report.domain_description =
        "u bound from (2u^2-2u-19)^4 < 21^4*6(u^6+u^3); prime powers u up to it with 7 | exponent; k_3(128); "
        "q range from q^4/6+1 <= u^6+u^3+1 at u=128; Table 3 rows with K(S) <= u^6+u^3+1";
    auto holds = [](const Integer& u) {
      const Integer lhs = ipow(2 * u * u - 2 * u - 19, 4);
      return lhs < ipow(Integer(21), 4) * 6 * (ipow(u, 6) + ipow(u, 3));
    };
    // Degree 8 against degree 6: no solutions once u^2 > 2*6*21^4, so scan to 2000.
    std::uint64_t u_max = 0;
    for (std::uint64_t u = 1; u <= 2000; ++u)
      if (holds(Integer(static_cast<unsigned long>(u)))) u_max = u;
    report.notes.push_back("largest u with the inequality: " + std::to_string(u_max));
    if (u_max > 272) report.counterexamples.push_back("(u_bound=" + std::to_string(u_max) + ",exceeds 272)");
    ++report.cases_checked;

    std::vector<std::uint64_t> sevenths;
    for (auto u : prime_powers_up_to(u_max)) {
      ++report.cases_checked;
      const auto spp = SignedPrimePower::from_integer(Integer(static_cast<unsigned long>(u)));
      if (spp->exponent % 7 == 0) sevenths.push_back(u);
    }
    std::string list;
    for (auto u : sevenths) list += (list.empty() ? "" : ",") + std::to_string(u);
    report.notes.push_back("prime powers with exponent divisible by 7: {" + list + "}");
    if (sevenths != std::vector<std::uint64_t>{128}) report.counterexamples.push_back("(set={" + list + "})");

    const Integer u(128);
    const Integer k3 = k_i(3, u), k6 = k_i(6, u);
    const Integer seven = r_part(k3, 7), rest = r_prime_part(k3, 7);
    report.notes.push_back("k_3(128)=" + k3.get_str() + "=" + seven.get_str() + "*" + rest.get_str() +
                           "; k_6(128)=" + k6.get_str() + " has 7-part " + r_part(k6, 7).get_str());
    report.cases_checked += 3;
    if (k3 != 16513 || seven != 49 || rest != 337)
      report.counterexamples.push_back("(k3=" + k3.get_str() + ",7-part=" + seven.get_str() + ")");

    const Integer cap = ipow(u, 6) + ipow(u, 3) + 1;
    Integer q_limit;
    mpz_root(q_limit.get_mpz_t(), Integer(6 * (cap - 1)).get_mpz_t(), 4);
    const Integer q_needed = 14 * rest - 1;
    report.notes.push_back("q^4/6+1 <= u^6+u^3+1 at u=128 gives q <= " + q_limit.get_str() + "; 14*337-1=" +
                           q_needed.get_str());
    ++report.cases_checked;
    if (q_needed <= q_limit) report.counterexamples.push_back("(q_limit=" + q_limit.get_str() + ",not exceeded)");

    // Per-row maxima of K(S) in Table 3, literal rows excluded as in the argument.
    for (const auto& series : table_series(3)) {
      for (auto uv : prime_powers_up_to(u_max)) {
        const Integer uu(static_cast<unsigned long>(uv));
        CandidateSData row;
        try {
          row = candidate_table(series, uu);
        } catch (const std::domain_error&) {
          continue;
        }
        if (row.table != 3 || row.K.empty() || !row.K.front().symbolic()) continue;
        ++report.cases_checked;
        const Integer bound = ipow(uu, 6) + ipow(uu, 3) + 1;
        for (const auto& v : row.K_values)
          if (v > bound)
            report.counterexamples.push_back("(S=" + series + ",u=" + uu.get_str() + ",K=" + v.get_str() + ")");
      }
    }
  }
  report.finalize();
  return report;
}

}  // namespace clspec
