#ifndef CLSPEC_VERIFIER_HPP
#define CLSPEC_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clspec/arith.hpp"
#include "clspec/report.hpp"

namespace clspec {

enum class Profile { quick, full };

std::string_view to_string(Profile profile);
Profile parse_profile(std::string_view text);

struct CheckOptions {
  Profile profile = Profile::quick;
  /// Replaces the main range parameter of every selected check.
  std::optional<std::uint64_t> range;
  unsigned jobs = 1;
};

// Arithmetic oracles.
CheckReport check_lte(long a_max, unsigned long m_max, unsigned long r_max, unsigned jobs = 1);
CheckReport check_zsigmondy(long a_max, unsigned long i_max, unsigned jobs = 1);
CheckReport check_kiphi(long a_max, unsigned long i_max, unsigned jobs = 1);

// Inequalities. Every comparison is done on integers after clearing denominators.
CheckReport check_bounds_lemma(int part, std::uint64_t q_max, unsigned jobs = 1);
/// Product of k_i(eq) over I against C*q^(4|I|) + 1/2. Throws
/// std::invalid_argument unless |I| >= 2, the indices are distinct and φ(i) > 2.
bool ineq_holds(const Integer& eq, const std::vector<unsigned>& I);
CheckReport check_ineq_lemma(std::uint64_t q_max, unsigned i_cap = 30, unsigned jobs = 1);

/// lemma is "igcd", "igcd1" or "igcd2"; a ranges over |a| <= a_max.
CheckReport check_gcd_lemmas(std::string_view lemma, long a_max, unsigned jobs = 1);

// Table-1 coherence, the kzky bounds and exponent parts over odd 5 <= q <= q_max.
CheckReport check_zy(std::uint64_t q_max, unsigned jobs = 1);
CheckReport check_kzky(std::uint64_t q_max, unsigned jobs = 1);
CheckReport check_exp(std::uint64_t q_max, unsigned jobs = 1);

CheckReport search_k5_collisions(std::uint64_t N, unsigned jobs = 1);

struct KEquationResult {
  long i = 0;
  Integer target;
  bool both_signs = false;
  /// Every |u| above this bound has |k_i(±u)| > target.
  std::uint64_t sufficient_bound = 0;
  std::string lower_bound;  // the bound used, e.g. "k_8(u) >= (u^4+1)/2"
  std::uint64_t candidates = 0;
  std::vector<Integer> solutions;  // signed, ascending
};

/// All prime powers u (and -u when both_signs) with k_i(u) = target.
/// u_bound = 0 searches exactly up to the computed sufficient bound.
KEquationResult solve_k_equation(long i, const Integer& target, bool both_signs, std::uint64_t u_bound = 0);
CheckReport check_k_equation(const std::string& id, long i, const Integer& target, bool both_signs);

struct SmallHit {
  std::string L;
  std::string S;
  Integer k_L;
  Integer k_S;
  std::string witness;  // a prime of k_S missing from |L|, empty if none
};

struct SmallCasesResult {
  Integer u2_max_K;
  std::string u2_argmax;
  Integer q5_min_kz;
  std::uint64_t q5_u_bound = 0;
  std::vector<SmallHit> q5_hits;  // candidate values k_z and k_y
  std::vector<std::pair<Integer, Integer>> q5_distinct;  // (u, k(S))
  std::uint64_t q5_kz_only_hits = 0;
  Integer c_max_K;
  std::string c_argmax;
  std::uint64_t c_q_bound = 0;
  std::vector<SmallHit> c_hits;
  std::vector<SmallHit> c_same_characteristic;
  std::uint64_t cases = 0;
};

SmallCasesResult run_small_cases();
CheckReport check_small_cases();

CheckReport check_fpoly_cases(std::uint64_t q_bound = 59);
CheckReport check_t5_seventh_power_case();

struct CheckEntry {
  std::string id;
  std::string summary;
  std::function<CheckReport(const CheckOptions&)> run;
};

class CheckRegistry {
public:
  void add(CheckEntry entry);
  const CheckEntry* find(std::string_view id) const;
  std::vector<std::string> ids() const;
  bool empty() const { return entries_.empty(); }
  const std::vector<CheckEntry>& entries() const { return entries_; }

private:
  std::vector<CheckEntry> entries_;
};

const CheckRegistry& default_registry();

/// Runs the named checks in the given order. Throws std::invalid_argument
/// for an unknown id, listing the available ones.
std::vector<CheckReport> run_checks(const CheckRegistry& registry, const std::vector<std::string>& ids,
                                    const CheckOptions& options);
/// Throws std::runtime_error("no checks registered") on an empty registry.
std::vector<CheckReport> run_all(const CheckRegistry& registry, const CheckOptions& options);

}  // namespace clspec

#endif  // CLSPEC_VERIFIER_HPP
