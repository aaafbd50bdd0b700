#ifndef CLSPEC_CHECK_UTIL_HPP
#define CLSPEC_CHECK_UTIL_HPP

#include <string>
#include <vector>

#include "clspec/arith.hpp"
#include "clspec/groups.hpp"
#include "clspec/report.hpp"

namespace clspec::detail {

inline bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (auto q : prime_powers_up_to(hi))
    if (q >= lo && q % 2 == 1) out.push_back(q);
  return out;
}

/// εq for every prime power q <= hi and ε = ±1, ordered by q then sign.
inline std::vector<Integer> signed_prime_powers(std::uint64_t hi) {
  std::vector<Integer> out;
  for (auto q : prime_powers_up_to(hi)) {
    out.emplace_back(static_cast<unsigned long>(q));
    out.push_back(-out.back());
  }
  return out;
}

/// L8+, L8-, O10+, O10-, O12+ over q.
inline std::vector<GroupDescriptor> table1_groups(std::uint64_t q) {
  return {make_group(Family::linear, 8, q), make_group(Family::unitary, 8, q),
          make_group(Family::plus_orthogonal, 5, q), make_group(Family::minus_orthogonal, 5, q),
          make_group(Family::plus_orthogonal, 6, q)};
}

/// Per-shard outcome, merged in shard order so reports do not depend on the worker count.
struct Slot {
  std::vector<std::string> cex;
  std::vector<std::string> notes;
  std::uint64_t cases = 0;
  std::uint64_t skipped = 0;
  std::uint64_t degenerate = 0;
};

inline void merge_slots(CheckReport& report, const std::vector<Slot>& slots, std::uint64_t* skipped = nullptr) {
  for (const auto& s : slots) {
    report.cases_checked += s.cases;
    report.degenerate_cases += s.degenerate;
    report.counterexamples.insert(report.counterexamples.end(), s.cex.begin(), s.cex.end());
    report.notes.insert(report.notes.end(), s.notes.begin(), s.notes.end());
    if (skipped) *skipped += s.skipped;
  }
}

}  // namespace clspec::detail

#endif  // CLSPEC_CHECK_UTIL_HPP
