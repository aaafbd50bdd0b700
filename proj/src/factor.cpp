#include "clspec/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace clspec {
namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, unsigned long base) {
  Integer a = base;
  if (a % n == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Deterministic Miller-Rabin with the first 13 prime bases is exact below this.
const Integer& deterministic_mr_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

Integer rho_split(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  // Brent's variant with batched gcds.
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, g = 1, q = 1;
    unsigned long r = 1;
    constexpr unsigned long batch = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_cofactor(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = rho_split(n);
  factor_cofactor(d, out);
  factor_cofactor(n / d, out);
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  n = abs(n);
  for (std::uint32_t p : small_primes()) {
    if (n == 1) return;
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
      out[Integer(p)] += e;
    }
  }
  if (n == 1) return;
  // Below kTrialLimit^2 a surviving cofactor with no small factor is prime.
  if (n < Integer(kTrialLimit) * kTrialLimit) {
    ++out[n];
    return;
  }
  factor_cofactor(n, out);
}

void check_cap(const Integer& n, const FactorOptions& options) {
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > options.magnitude_cap_bits) {
    std::ostringstream os;
    os << "factor: |n| has " << mpz_sizeinbase(n.get_mpz_t(), 2) << " bits, above the cap of "
       << options.magnitude_cap_bits << " bits";
    throw MagnitudeCapExceeded(os.str());
  }
}

FactoredInteger from_map(const Integer& value, const std::map<Integer, unsigned>& m) {
  std::vector<PrimeFactor> factors;
  factors.reserve(m.size());
  for (const auto& [p, e] : m) factors.push_back({p, e});
  return FactoredInteger(value, std::move(factors));
}

}  // namespace

FactoredInteger::FactoredInteger(Integer value, std::vector<PrimeFactor> factors)
    : value_(std::move(value)), factors_(std::move(factors)) {}

unsigned FactoredInteger::multiplicity(const Integer& prime) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                             [](const PrimeFactor& f, const Integer& p) { return f.prime < p; });
  return (it != factors_.end() && it->prime == prime) ? it->multiplicity : 0;
}

std::vector<Integer> FactoredInteger::primes() const {
  std::vector<Integer> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

Integer FactoredInteger::recompose() const {
  Integer out = 1;
  for (const auto& f : factors_) out *= ipow(f.prime, f.multiplicity);
  return out;
}

std::string FactoredInteger::to_string() const {
  std::ostringstream os;
  if (value_ < 0) os << "-1";
  bool first = value_ >= 0;
  if (factors_.empty() && first) return value_ == 0 ? "0" : "1";
  for (const auto& f : factors_) {
    if (!first) os << " * ";
    first = false;
    os << f.prime.get_str();
    if (f.multiplicity > 1) os << '^' << f.multiplicity;
  }
  return os.str();
}

Integer SignedPrimePower::magnitude() const { return ipow(Integer(static_cast<unsigned long>(base)), exponent); }

Integer SignedPrimePower::value() const { return sign < 0 ? Integer(-magnitude()) : magnitude(); }

std::optional<SignedPrimePower> SignedPrimePower::from_integer(const Integer& n) {
  Integer m = abs(n);
  if (m < 2) return std::nullopt;
  const auto bits = static_cast<unsigned>(mpz_sizeinbase(m.get_mpz_t(), 2));
  for (unsigned e = bits; e >= 1; --e) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), e) == 0) continue;
    if (root < 2 || !is_prime(root) || !root.fits_ulong_p()) continue;
    return SignedPrimePower{n < 0 ? -1 : 1, root.get_ui(), e};
  }
  return std::nullopt;
}

bool is_prime(std::uint64_t n) { return is_prime(Integer(static_cast<unsigned long>(n))); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < kTrialLimit) {
    const auto& ps = small_primes();
    return std::binary_search(ps.begin(), ps.end(), static_cast<std::uint32_t>(n.get_ui()));
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < deterministic_mr_limit()) {
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
      d /= 2;
      ++s;
    }
    for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
      if (!miller_rabin_round(n, d, s, b)) return false;
    }
    return true;
  }
  // BPSW plus extra Miller-Rabin rounds; no BPSW pseudoprime is known.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

FactoredInteger factor(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  check_cap(n, options);
  std::map<Integer, unsigned> m;
  factor_into(n, m);
  return from_map(n, m);
}

FactoredInteger factor_product(const std::vector<Integer>& pieces, const FactorOptions& options) {
  Integer value = 1;
  std::map<Integer, unsigned> m;
  for (const auto& piece : pieces) {
    if (piece == 0) throw std::invalid_argument("factor_product: zero piece");
    check_cap(piece, options);
    factor_into(piece, m);
    value *= piece;
  }
  return from_map(value, m);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < kTrialLimit) {
    for (std::uint32_t p : small_primes()) {
      if (p > limit) break;
      out.push_back(p);
    }
    return out;
  }
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(limit)) {
    for (std::uint64_t q = p; q <= limit; q *= p) {
      out.push_back(q);
      if (q > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("euler_phi: argument must be positive");
  std::uint64_t phi = i;
  for (std::uint64_t p : prime_divisors(i)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t largest_prime_divisor(std::uint64_t i) {
  if (i < 2) throw std::invalid_argument("largest_prime_divisor: argument must be at least 2");
  return prime_divisors(i).back();
}

}  // namespace clspec
