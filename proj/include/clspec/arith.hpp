#ifndef CLSPEC_ARITH_HPP
#define CLSPEC_ARITH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace clspec {

using Integer = mpz_class;

/// Raised when an input exceeds the configured factorization magnitude.
/// Callers that really need larger inputs should raise FactorOptions::magnitude_cap_bits.
class MagnitudeCapExceeded : public std::runtime_error {
public:
  explicit MagnitudeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct FactorOptions {
  unsigned magnitude_cap_bits = 512;
};

struct PrimeFactor {
  Integer prime;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// An integer together with its prime factorization. Primes are strictly
/// ascending and the product of prime^multiplicity equals |value|.
class FactoredInteger {
public:
  FactoredInteger() = default;
  FactoredInteger(Integer value, std::vector<PrimeFactor> factors);

  const Integer& value() const { return value_; }
  const std::vector<PrimeFactor>& factors() const& { return factors_; }
  std::vector<PrimeFactor> factors() && { return std::move(factors_); }

  /// Multiplicity of `prime`, zero when it does not divide the value.
  unsigned multiplicity(const Integer& prime) const;
  bool divisible_by_prime(const Integer& prime) const { return multiplicity(prime) > 0; }
  std::vector<Integer> primes() const;
  // Product of the prime powers, so |n|.
  Integer recompose() const;

  /// `p1^e1 * p2^e2` with ascending primes; exponents of one are omitted.
  std::string to_string() const;

private:
  Integer value_ = 1;
  std::vector<PrimeFactor> factors_;
};

/// sign * base^exponent with base prime; the εq and τu arguments.
struct SignedPrimePower {
  int sign = 1;
  std::uint64_t base = 2;
  unsigned exponent = 1;

  Integer value() const;
  Integer magnitude() const;
  SignedPrimePower negated() const { return {-sign, base, exponent}; }

  /// Recognizes ±p^k; nullopt when |n| is not a prime power.
  static std::optional<SignedPrimePower> from_integer(const Integer& n);

  friend bool operator==(const SignedPrimePower&, const SignedPrimePower&) = default;
};

// Primality and factorization.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);
FactoredInteger factor(const Integer& n, const FactorOptions& options = {});
/// Factors a product of known pieces without multiplying them out first.
FactoredInteger factor_product(const std::vector<Integer>& pieces, const FactorOptions& options = {});
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// All prime powers p^k (k >= 1) in [2, limit], ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Multiplicative number theory.
Integer ipow(const Integer& base, unsigned long exponent);
Integer r_part(const Integer& n, const Integer& r);
inline Integer r_part(const Integer& n, unsigned long r) { return r_part(n, Integer(r)); }
/// n with every factor r removed, i.e. |n| / (n)_r.
Integer r_prime_part(const Integer& n, const Integer& r);

/// e(r, a). For r = 2 this is the 1-or-2 convention based on a mod 4.
Integer mult_order(const Integer& r, const Integer& a);

struct LteResult {
  Integer value;
  int lemma_case = 0;  // 1, 2 or 3
};

/// (a^m - 1)_r through the lifting-the-exponent closed forms. Throws
/// std::domain_error when none of the three case hypotheses holds.
LteResult lte_r_part(const Integer& a, unsigned long m, unsigned long r);

Integer cyclotomic_eval(unsigned long i, const Integer& a);

/// k_i(a) = Φ_i(a) / (r, Φ_l(a)) with r the largest prime of i and l its r'-part.
Integer k_i(long i, const Integer& a);

/// Product of (a^i - 1)_r over primitive prime divisors r, computed from the
/// definition by stripping every prime shared with a^d - 1 for d | i, d < i.
Integer k_i_by_definition(long i, const Integer& a);

/// R_i(a) (ascending). Fully factors k_i(a), so large indices can be slow.
std::vector<Integer> primitive_prime_divisors(const Integer& a, unsigned long i,
                                              const FactorOptions& options = {});
/// Whether R_i(a) is nonempty, decided without factoring.
bool has_primitive_prime_divisor(const Integer& a, unsigned long i);
/// The four exception families of the Bang-Zsigmondy theorem.
bool is_zsigmondy_exception(const Integer& a, unsigned long i);

std::uint64_t euler_phi(std::uint64_t i);

/// Largest prime divisor of i >= 2.
std::uint64_t largest_prime_divisor(std::uint64_t i);

}  // namespace clspec

#endif  // CLSPEC_ARITH_HPP
