#include <algorithm>
#include <set>
#include <sstream>

#include "check_util.hpp"
#include "clspec/groups.hpp"
#include "clspec/tables.hpp"
#include "clspec/verifier.hpp"

namespace clspec {

using detail::divides;

namespace {

struct Candidate {
  std::string L;
  Integer k;
  bool is_z = true;
  FactoredInteger order;
};

std::vector<Candidate> candidates_at(std::uint64_t q, bool with_y) {
  std::vector<Candidate> out;
  for (const auto& g : detail::table1_groups(q)) {
    const FactoredInteger order = group_order(g);
    out.push_back({g.name(), k_x_of_L(g, ZY::z), true, order});
    if (with_y) out.push_back({g.name(), k_x_of_L(g, ZY::y), false, order});
  }
  return out;
}

std::string witness_prime(const Integer& k_s, const FactoredInteger& order) {
  for (const auto& f : factor(k_s).factors())
    if (!order.divisible_by_prime(f.prime)) return f.prime.get_str();
  return "";
}

std::string hit_text(const SmallHit& h) {
  return "(L=" + h.L + ",S=" + h.S + ",k_L=" + h.k_L.get_str() + ",k_S=" + h.k_S.get_str() +
         (h.witness.empty() ? std::string(",not eliminated") : ",missing prime " + h.witness) + ")";
}

}  // namespace

SmallCasesResult run_small_cases() {
  SmallCasesResult res;

  // (a) Table 4 rows that exist at u = 2.
  const Integer two(2);
  for (const auto& series : table_series(4)) {
    CandidateSData row;
    try {
      row = candidate_table(series, two);
    } catch (const std::domain_error&) {
      continue;
    }
    if (row.table != 4) continue;
    for (std::size_t j = 0; j < row.K_values.size(); ++j) {
      ++res.cases;
      if (row.K_values[j] > res.u2_max_K) {
        res.u2_max_K = row.K_values[j];
        res.u2_argmax = series + "(2): " + row.K[j].to_string();
      }
    }
  }
  res.q5_min_kz = 0;
  for (const auto& c : candidates_at(5, false))
    if (res.q5_min_kz == 0 || c.k < res.q5_min_kz) res.q5_min_kz = c.k;

  // (b) q = 5: (u^4+1)/2 <= 2*5^7.
  const Integer meo_cap = 2 * ipow(Integer(5), 7);
  res.q5_u_bound = 2;
  while (ipow(Integer(static_cast<unsigned long>(res.q5_u_bound + 1)), 4) + 1 <= 2 * meo_cap) ++res.q5_u_bound;
  const auto q5 = candidates_at(5, true);
  std::set<std::pair<Integer, Integer>> distinct;
  for (auto u : prime_powers_up_to(res.q5_u_bound)) {
    if (u < 3 || u % 5 == 0) continue;
    const Integer uu(static_cast<unsigned long>(u));
    for (const auto& series : table_series(4)) {
      CandidateSData row;
      try {
        row = candidate_table(series, uu);
      } catch (const std::domain_error&) {
        continue;
      }
      if (row.table != 4) continue;
      for (const auto& ks : row.K_values) {
        for (const auto& c : q5) {
          ++res.cases;
          if (!divides(c.k, ks)) continue;
          if (c.is_z) ++res.q5_kz_only_hits;
          res.q5_hits.push_back({c.L + (c.is_z ? " k_z" : " k_y"), series + "(" + uu.get_str() + ")", c.k, ks,
                                 witness_prime(ks, c.order)});
          distinct.emplace(uu, ks);
        }
      }
    }
  }
  res.q5_distinct.assign(distinct.begin(), distinct.end());

  // (c) the listed S over u >= 3 with K(S) from Table 4.
  const std::vector<std::pair<std::string, std::uint64_t>> listed = {
      {"L8", 3}, {"U8", 3}, {"O10+", 3}, {"O10-", 3}, {"O12+", 3},
      {"O10+", 5}, {"L8", 5}, {"L8", 9}, {"U8", 7}};
  struct Listed {
    std::string name;
    std::uint64_t p;
    std::vector<Integer> K;
  };
  std::vector<Listed> ss;
  for (const auto& [series, u] : listed) {
    const auto row = candidate_table(series, Integer(static_cast<unsigned long>(u)));
    Listed l{series + "(" + std::to_string(u) + ")", SignedPrimePower::from_integer(row.u)->base, row.K_values};
    for (const auto& v : l.K)
      if (v > res.c_max_K) {
        res.c_max_K = v;
        res.c_argmax = l.name;
      }
    ss.push_back(std::move(l));
  }
  res.c_q_bound = 1;
  while (ipow(Integer(static_cast<unsigned long>(res.c_q_bound + 1)), 4) + 6 <= 6 * res.c_max_K) ++res.c_q_bound;
  for (auto q : detail::odd_prime_powers(7, res.c_q_bound)) {
    const auto p = SignedPrimePower::from_integer(Integer(static_cast<unsigned long>(q)))->base;
    for (const auto& c : candidates_at(q, false)) {
      for (const auto& s : ss) {
        for (const auto& v : s.K) {
          ++res.cases;
          if (!divides(c.k, v)) continue;
          SmallHit h{c.L + " k_z", s.name, c.k, v, witness_prime(v, c.order)};
          (s.p == p ? res.c_same_characteristic : res.c_hits).push_back(h);
        }
      }
    }
  }
  return res;
}

CheckReport check_small_cases() {
  CheckReport report;
  report.check_id = "small";
  {
    ReportTimer timer(report);
    const SmallCasesResult r = run_small_cases();
    report.domain_description =
        "(a) max K(S) over Table 4 rows at u=2 against k_z at q=5; (b) q=5, prime powers 3<=u<=" +
        std::to_string(r.q5_u_bound) + " prime to 5, every Table 4 row, candidates k_z and k_y of L8+-, O10+-, O12+; " +
        "(c) k_z(L) against K(S) for the nine listed S, odd q from 7 to " + std::to_string(r.c_q_bound) +
        " in a different characteristic";
    report.cases_checked = r.cases;

    report.notes.push_back("(a) max K(S) at u=2 is " + r.u2_max_K.get_str() + " from " + r.u2_argmax +
                           "; smallest k_z at q=5 is " + r.q5_min_kz.get_str());
    if (r.u2_max_K != 73) report.counterexamples.push_back("(a: max K at u=2 is " + r.u2_max_K.get_str() + ")");
    // q^4/6+1 grows with q, so q = 5 settles every q >= 5.
    if (!(ipow(Integer(5), 4) + 6 > 6 * r.u2_max_K)) report.counterexamples.push_back("(a: q=5 not excluded)");

    report.notes.push_back("(b) u bound " + std::to_string(r.q5_u_bound) + "; hits using k_z alone: " +
                           std::to_string(r.q5_kz_only_hits) + "; 781=k_5(5) is k_y for O10+(5) and O12+(5) in Table 1");
    for (const auto& h : r.q5_hits) report.notes.push_back("(b) hit " + hit_text(h));
    if (r.q5_u_bound != 23) report.counterexamples.push_back("(b: u bound " + std::to_string(r.q5_u_bound) + ")");
    if (r.q5_distinct.size() != 1)
      report.counterexamples.push_back("(b: " + std::to_string(r.q5_distinct.size()) + " distinct hits)");
    for (const auto& h : r.q5_hits)
      if (h.witness.empty()) report.counterexamples.push_back("(b: " + hit_text(h) + ")");

    report.notes.push_back("(c) max K(S) is " + r.c_max_K.get_str() + " from " + r.c_argmax +
                           "; q^4/6+1 <= max K gives q <= " + std::to_string(r.c_q_bound) + " (31 claimed)");
    for (const auto& h : r.c_same_characteristic) report.notes.push_back("(c) same characteristic, excluded " + hit_text(h));
    for (const auto& h : r.c_hits) report.counterexamples.push_back("(c: " + hit_text(h) + ")");
  }
  report.finalize();
  return report;
}

}  // namespace clspec
