#ifndef CLSPEC_TESTS_ORACLES_HPP
#define CLSPEC_TESTS_ORACLES_HPP

// Slow, direct implementations used as references by the tests. None of these
// call into the library beyond the Integer type.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Integer = mpz_class;

inline std::map<Integer, unsigned> trial_factor(Integer n) {
  std::map<Integer, unsigned> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Integer power(const Integer& a, unsigned long e) {
  Integer out = 1;
  for (unsigned long i = 0; i < e; ++i) out *= a;
  return out;
}

inline Integer r_part(Integer n, const Integer& r) {
  if (n < 0) n = -n;
  Integer out = 1;
  while (n != 0 && n % r == 0) {
    n /= r;
    out *= r;
  }
  return out;
}

inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// e(r, a): the multiplicative order for odd r, the 1-or-2 convention for r = 2.
inline unsigned long order(const Integer& r, const Integer& a) {
  if (r == 2) return mod(a, 4) == 1 ? 1 : 2;
  Integer x = mod(a, r);
  if (x == 0) return 0;
  Integer y = x;
  for (unsigned long i = 1;; ++i) {
    if (y == 1) return i;
    y = mod(y * x, r);
  }
}

// Φ_n as coefficients (constant first) by dividing x^n - 1 by Φ_d for d | n, d < n.
inline std::vector<Integer> cyclotomic(unsigned long n) {
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto den = cyclotomic(d);
    std::vector<Integer> q(num.size() - den.size() + 1, 0);
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
      q[k] = num[k + den.size() - 1];
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
    }
    num = q;
  }
  return num;
}

inline Integer horner(const std::vector<Integer>& p, const Integer& a) {
  Integer v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * a + *it;
  return v;
}

inline Integer cyclotomic_at(unsigned long n, const Integer& a) { return horner(cyclotomic(n), a); }

// R_i(a) by factoring a^i - 1 and keeping primes r with e(r, a) = i.
inline std::vector<Integer> primitive_primes(const Integer& a, unsigned long i) {
  std::vector<Integer> out;
  for (const auto& [r, e] : trial_factor(power(a, i) - 1))
    if (order(r, a) == i) out.push_back(r);
  return out;
}

// k_i(a) as the product of (a^i - 1)_r over r in R_i(a), odd r only.
inline Integer k_value(const Integer& a, unsigned long i) {
  Integer out = 1;
  const Integer n = power(a, i) - 1;
  for (const auto& r : primitive_primes(a, i))
    if (r != 2) out *= r_part(n, r);
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer gcd(long a, long b) { return gcd(Integer(a), Integer(b)); }

// Textbook order formulas for the simple classical groups.
inline Integer order_L(unsigned n, const Integer& q) {
  Integer v = power(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) v *= power(q, i) - 1;
  return v / gcd(Integer(n), q - 1);
}

inline Integer order_U(unsigned n, const Integer& q) {
  Integer v = power(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) v *= power(q, i) - (i % 2 ? -1 : 1);
  return v / gcd(Integer(n), q + 1);
}

inline Integer order_S(unsigned n, const Integer& q) {
  Integer v = power(q, n * n);
  for (unsigned i = 1; i <= n; ++i) v *= power(q, 2 * i) - 1;
  return v / gcd(Integer(2), q - 1);
}

inline Integer order_O_even(unsigned n, int eps, const Integer& q) {
  Integer v = power(q, n * (n - 1)) * (power(q, n) - eps);
  for (unsigned i = 1; i < n; ++i) v *= power(q, 2 * i) - 1;
  return v / gcd(Integer(4), power(q, n) - eps);
}

// Seeded generator for the property tests.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  long nonunit(long bound) {
    long a = 0;
    while (a >= -1 && a <= 1) a = range(-bound, bound);
    return a;
  }
  std::vector<long> coefficients(std::size_t max_degree, long bound) {
    std::vector<long> c(static_cast<std::size_t>(range(1, static_cast<long>(max_degree) + 1)));
    for (auto& x : c) x = range(-bound, bound);
    if (c.back() == 0) c.back() = 1;
    return c;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // CLSPEC_TESTS_ORACLES_HPP
