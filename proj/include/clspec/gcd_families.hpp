#ifndef CLSPEC_GCD_FAMILIES_HPP
#define CLSPEC_GCD_FAMILIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clspec/polycert.hpp"

namespace clspec {

/// One (lemma item, congruence class) of the gcd lemmas.
///
/// `values(a)` gives the two numbers whose gcd the lemma bounds, computed from
/// k_i and Φ_i directly. The polynomial pair (f, g) is chosen so that the
/// first value divides f(a) and the second divides g(a) on the class, which
/// makes any certificate for (f, g) a bound for the lemma.
struct GcdCase {
  std::string lemma;       // "igcd", "igcd1" or "igcd2"
  std::string label;       // item and branch, e.g. "igcd(1) (7,a-1)=7"
  std::string hypothesis;  // human-readable congruence condition
  IntegerFilter applies;   // the congruence condition; |a| > 1 is checked separately
  std::function<std::pair<Integer, Integer>(const Integer&)> values;
  IntPolynomial f;
  IntPolynomial g;
  IntPolynomial stated_bound;
  /// Set when the bound as stated does not hold on this class.
  std::optional<IntPolynomial> corrected_bound;

  const IntPolynomial& effective_bound() const { return corrected_bound ? *corrected_bound : stated_bound; }
};

/// Every case of Lemmas igcd (1)-(3), igcd1 (1)-(4) and igcd2.
const std::vector<GcdCase>& gcd_lemma_cases();

}  // namespace clspec

#endif  // CLSPEC_GCD_FAMILIES_HPP
