#include <set>
#include <sstream>

#include "check_util.hpp"
#include "clspec/groups.hpp"
#include "clspec/parallel.hpp"
#include "clspec/verifier.hpp"

namespace clspec {

using detail::divides;
using detail::gcd_of;
using detail::merge_slots;
using detail::Slot;

namespace {

std::string range_text(std::uint64_t q_max) {
  return "L8+, L8-, O10+, O10-, O12+ over odd prime powers 5 <= q <= " + std::to_string(q_max);
}

}  // namespace

CheckReport check_zy(std::uint64_t q_max, unsigned jobs) {
  CheckReport report;
  report.check_id = "zy";
  {
    ReportTimer timer(report);
    report.domain_description = "Table 1: gcd(m_z,m_y)=1, m_z and m_y divide |L|, k_z | m_z, k_y | m_y; " +
                                range_text(q_max);
    const auto qs = detail::odd_prime_powers(5, q_max);
    auto slots = parallel_map<Slot>(qs.size(), jobs, [&](std::size_t idx) {
      Slot s;
      for (const auto& g : detail::table1_groups(qs[idx])) {
        ++s.cases;
        const ZYInvariants zy = zy_invariants(g);
        const Integer order = group_order_value(g);
        const Integer kz = k_x_of_L(g, ZY::z), ky = k_x_of_L(g, ZY::y);
        std::string bad;
        if (gcd_of(zy.m_z, zy.m_y) != 1) bad += ",gcd(m_z,m_y)!=1";
        if (!divides(zy.m_z, order)) bad += ",m_z does not divide |L|";
        if (!divides(zy.m_y, order)) bad += ",m_y does not divide |L|";
        if (!divides(kz, zy.m_z)) bad += ",k_z does not divide m_z";
        if (!divides(ky, zy.m_y)) bad += ",k_y does not divide m_y";
        if (!bad.empty()) s.cex.push_back("(L=" + g.name() + bad + ")");
      }
      return s;
    });
    merge_slots(report, slots);
  }
  report.finalize();
  return report;
}

CheckReport check_kzky(std::uint64_t q_max, unsigned jobs) {
  CheckReport report;
  report.check_id = "kzky";
  {
    ReportTimer timer(report);
    report.domain_description = "max{k_z,k_y} >= (q^4+1)/2 and min{k_z,k_y} >= q^4/6+1, exact; " + range_text(q_max);
    const auto qs = detail::odd_prime_powers(5, q_max);
    auto slots = parallel_map<Slot>(qs.size(), jobs, [&](std::size_t idx) {
      Slot s;
      for (const auto& g : detail::table1_groups(qs[idx])) {
        ++s.cases;
        const Integer kz = k_x_of_L(g, ZY::z), ky = k_x_of_L(g, ZY::y);
        const Integer hi = kz > ky ? kz : ky, lo = kz > ky ? ky : kz;
        const Integer q4 = ipow(g.q(), 4);
        std::string bad;
        if (2 * hi < q4 + 1) bad += ",max below (q^4+1)/2";
        if (6 * lo < q4 + 6) bad += ",min below q^4/6+1";
        if (!bad.empty()) s.cex.push_back("(L=" + g.name() + ",k_z=" + kz.get_str() + ",k_y=" + ky.get_str() + bad + ")");
      }
      return s;
    });
    merge_slots(report, slots);
  }
  report.finalize();
  return report;
}

CheckReport check_exp(std::uint64_t q_max, unsigned jobs) {
  CheckReport report;
  report.check_id = "exp";
  {
    ReportTimer timer(report);
    report.domain_description =
        "exp_r(L) for every prime r >= 7 dividing |L| is a power of r dividing |L|; " + range_text(q_max);
    const auto qs = detail::odd_prime_powers(5, q_max);
    auto slots = parallel_map<Slot>(qs.size(), jobs, [&](std::size_t idx) {
      Slot s;
      const std::uint64_t qv = qs[idx];
      const Integer q(static_cast<unsigned long>(qv));
      // Every prime of these orders is p or divides one of these Φ_d(q).
      std::set<Integer> primes;
      for (unsigned long d : {1, 2, 3, 4, 5, 6, 7, 8, 10, 14})
        for (const auto& f : factor(abs(cyclotomic_eval(d, q))).factors()) primes.insert(f.prime);
      for (const auto& g : detail::table1_groups(qv)) {
        primes.insert(Integer(static_cast<unsigned long>(g.p())));
        const Integer order = group_order_value(g);
        for (const auto& r : primes) {
          if (r < 7 || !divides(r, order)) continue;
          ++s.cases;
          const Integer e = exp_r(g, r);
          if (e < r || r_part(e, r) != e || !divides(e, order))
            s.cex.push_back("(L=" + g.name() + ",r=" + r.get_str() + ",exp=" + e.get_str() + ")");
        }
      }
      return s;
    });
    merge_slots(report, slots);
  }
  report.finalize();
  return report;
}

}  // namespace clspec
