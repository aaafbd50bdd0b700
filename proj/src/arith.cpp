#include "clspec/arith.hpp"

#include <algorithm>

namespace clspec {
namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Φ_n at a in {-1, 0, 1}, where the product formula degenerates.
Integer cyclotomic_at_unit(unsigned long n, long a) {
  auto prime_power_base = [](std::uint64_t m) -> std::uint64_t {
    auto ps = prime_divisors(m);
    return ps.size() == 1 ? ps.front() : 0;
  };
  if (a == 0) return n == 1 ? -1 : 1;
  if (a == 1) {
    if (n == 1) return 0;
    const auto p = prime_power_base(n);
    return p ? Integer(static_cast<unsigned long>(p)) : Integer(1);
  }
  // a == -1
  if (n == 1) return -2;
  if (n == 2) return 0;
  if (n % 2 == 1) return 1;
  if (n % 4 == 0) return cyclotomic_at_unit(n, 1);
  const auto p = prime_power_base(n / 2);
  return p ? Integer(static_cast<unsigned long>(p)) : Integer(1);
}

// Removes from n every prime that divides m.
Integer strip_common_primes(Integer n, const Integer& m) {
  Integer g = gcd(n, m);
  while (g != 1 && n != 0) {
    n /= g;
    g = gcd(n, g);
  }
  return n;
}

}  // namespace

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer r_part(const Integer& n, const Integer& r) {
  if (n == 0) throw std::invalid_argument("r_part: n must be nonzero");
  if (!is_prime(r)) throw std::invalid_argument("r_part: " + r.get_str() + " is not prime");
  Integer m = abs(n), out = 1;
  while (mpz_divisible_p(m.get_mpz_t(), r.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), r.get_mpz_t());
    out *= r;
  }
  return out;
}

Integer r_prime_part(const Integer& n, const Integer& r) { return abs(n) / r_part(n, r); }

Integer mult_order(const Integer& r, const Integer& a) {
  if (!is_prime(r)) throw std::invalid_argument("mult_order: " + r.get_str() + " is not prime");
  if (r == 2) {
    if (mpz_even_p(a.get_mpz_t())) throw std::invalid_argument("mult_order: e(2, a) needs odd a");
    return mod_nonneg(a, 4) == 1 ? 1 : 2;
  }
  const Integer residue = mod_nonneg(a, r);
  if (residue == 0) {
    throw std::invalid_argument("mult_order: " + a.get_str() + " is not coprime to " + r.get_str());
  }
  Integer order = r - 1;
  for (const auto& f : factor(order).factors()) {
    for (unsigned k = 0; k < f.multiplicity; ++k) {
      Integer candidate = order / f.prime, x;
      mpz_powm(x.get_mpz_t(), residue.get_mpz_t(), candidate.get_mpz_t(), r.get_mpz_t());
      if (x != 1) break;
      order = candidate;
    }
  }
  return order;
}

LteResult lte_r_part(const Integer& a, unsigned long m, unsigned long r) {
  if (abs(a) <= 1) throw std::invalid_argument("lte_r_part: needs |a| > 1");
  if (m == 0) throw std::invalid_argument("lte_r_part: m must be positive");
  const Integer rr(r);
  if (!is_prime(rr)) throw std::invalid_argument("lte_r_part: r must be prime");
  const Integer m_int(m);
  if (r != 2) {
    if (mod_nonneg(a, rr) == 1) return {r_part(m_int, rr) * r_part(a - 1, rr), 1};
  } else {
    const Integer a_mod_4 = mod_nonneg(a, 4);
    if (a_mod_4 == 1 || m % 2 == 1) return {r_part(m_int, rr) * r_part(a - 1, rr), 2};
    if (a_mod_4 == 3) return {r_part(m_int, rr) * r_part(a + 1, rr), 3};
  }
  throw std::domain_error("lte_r_part: no closed-form case applies to a=" + a.get_str() +
                          ", m=" + std::to_string(m) + ", r=" + std::to_string(r));
}

Integer cyclotomic_eval(unsigned long i, const Integer& a) {
  if (i == 0) throw std::invalid_argument("cyclotomic_eval: index must be positive");
  if (abs(a) <= 1) return cyclotomic_at_unit(i, a.get_si());
  Integer num = 1, den = 1;
  for (std::uint64_t d : divisors(i)) {
    const int mu = mobius(i / d);
    if (mu == 0) continue;
    Integer term = ipow(a, d) - 1;
    (mu > 0 ? num : den) *= term;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Integer k_i(long i, const Integer& a) {
  if (i < 3) throw std::invalid_argument("k_i: defined only for i >= 3, got " + std::to_string(i));
  if (abs(a) <= 1) throw std::invalid_argument("k_i: needs |a| > 1");
  const auto idx = static_cast<std::uint64_t>(i);
  const std::uint64_t r = largest_prime_divisor(idx);
  std::uint64_t l = idx;
  while (l % r == 0) l /= r;
  const Integer phi_i = cyclotomic_eval(idx, a);
  const Integer g = gcd(Integer(static_cast<unsigned long>(r)), cyclotomic_eval(l, a));
  return phi_i / g;
}

Integer k_i_by_definition(long i, const Integer& a) {
  if (i < 3) throw std::invalid_argument("k_i_by_definition: defined only for i >= 3");
  if (abs(a) <= 1) throw std::invalid_argument("k_i_by_definition: needs |a| > 1");
  const auto idx = static_cast<std::uint64_t>(i);
  Integer n = abs(ipow(a, idx) - 1);
  // A prime with e(r, a) = d < i, d | i, divides a^(i/s) - 1 for some prime s | i.
  for (std::uint64_t s : prime_divisors(idx)) n = strip_common_primes(n, ipow(a, idx / s) - 1);
  // e(2, a) is 1 or 2, never i >= 3.
  while (mpz_even_p(n.get_mpz_t())) n /= 2;
  return n;
}

bool is_zsigmondy_exception(const Integer& a, unsigned long i) {
  return (a == 2 && (i == 1 || i == 6)) || (a == -2 && (i == 2 || i == 3)) || (a == 3 && i == 1) ||
         (a == -3 && i == 2);
}

namespace {

// Product of the odd primitive prime powers together with whether 2 is primitive.
std::pair<Integer, bool> primitive_part(const Integer& a, unsigned long i) {
  if (abs(a) <= 1) throw std::invalid_argument("primitive prime divisors need |a| > 1");
  if (i == 0) throw std::invalid_argument("primitive prime divisors need i >= 1");
  if (i >= 3) return {k_i_by_definition(static_cast<long>(i), a), false};
  Integer n = abs(ipow(a, i) - 1);
  if (i == 2) n = strip_common_primes(n, a - 1);
  while (mpz_even_p(n.get_mpz_t())) n /= 2;
  bool two = false;
  if (mpz_odd_p(a.get_mpz_t())) two = (mult_order(2, a) == i);
  return {n, two};
}

}  // namespace

bool has_primitive_prime_divisor(const Integer& a, unsigned long i) {
  const auto [odd, two] = primitive_part(a, i);
  return two || odd != 1;
}

std::vector<Integer> primitive_prime_divisors(const Integer& a, unsigned long i,
                                              const FactorOptions& options) {
  const auto [odd, two] = primitive_part(a, i);
  std::vector<Integer> out;
  if (two) out.push_back(2);
  for (const auto& f : factor(odd, options).factors()) out.push_back(f.prime);
  return out;
}

}  // namespace clspec
