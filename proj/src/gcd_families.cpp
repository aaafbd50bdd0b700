#include "clspec/gcd_families.hpp"

namespace clspec {
namespace {

bool is_odd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

long residue(const Integer& a, unsigned long m) {
  return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), m));
}

IntPolynomial phi(unsigned long n) { return cyclotomic_polynomial(n); }

IntPolynomial c(long v) { return IntPolynomial::constant(v); }

std::vector<GcdCase> build_cases() {
  std::vector<GcdCase> out;
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial x4_minus_1 = IntPolynomial::monomial(1, 4) - c(1);

  auto k = [](long i, const Integer& a) { return k_i(i, a); };

  // Lemma igcd, a odd.
  auto k8k7 = [k](const Integer& a) { return std::pair<Integer, Integer>{k(8, a) - 1, k(7, a) - 1}; };
  out.push_back({"igcd", "igcd(1) (7,a-1)=1", "a odd, a != 1 mod 7",
                 [](const Integer& a) { return is_odd(a) && residue(a, 7) != 1; }, k8k7, x4_minus_1,
                 phi(7) - c(1), c(3) * (x + c(1)), std::nullopt});
  out.push_back({"igcd", "igcd(1) (7,a-1)=7", "a odd, a = 1 mod 7",
                 [](const Integer& a) { return is_odd(a) && residue(a, 7) == 1; }, k8k7, x4_minus_1,
                 phi(7) - c(7), c(75) * (x - c(1)), std::nullopt});

  auto k8k5 = [k](const Integer& a) { return std::pair<Integer, Integer>{k(8, a) - 1, k(5, a) - 1}; };
  out.push_back({"igcd", "igcd(2) (5,a-1)=1", "a odd, a != 1 mod 5",
                 [](const Integer& a) { return is_odd(a) && residue(a, 5) != 1; }, k8k5, x4_minus_1,
                 phi(5) - c(1), (x * x + c(1)) * (x + c(1)), std::nullopt});
  out.push_back({"igcd", "igcd(2) (5,a-1)=5", "a odd, a = 1 mod 5",
                 [](const Integer& a) { return is_odd(a) && residue(a, 5) == 1; }, k8k5, x4_minus_1,
                 phi(5) - c(5), c(4) * (x - c(1)), std::nullopt});

  auto k5k10 = [k](const Integer& a) { return std::pair<Integer, Integer>{k(5, a) - 1, k(10, a) - 1}; };
  out.push_back({"igcd", "igcd(3) (5,a^2-1)=1", "a odd, a != +-1 mod 5",
                 [](const Integer& a) {
                   const long r = residue(a, 5);
                   return is_odd(a) && r != 1 && r != 4;
                 },
                 k5k10, phi(5) - c(1), phi(10) - c(1), c(2) * x * (x * x + c(1)), std::nullopt});
  out.push_back({"igcd", "igcd(3) (5,a^2-1)=5, a=1 mod 5", "a odd, a = 1 mod 5",
                 [](const Integer& a) { return is_odd(a) && residue(a, 5) == 1; }, k5k10, phi(5) - c(5),
                 phi(10) - c(1), c(4) * (x - c(1)), std::nullopt});
  // The stated bound 4(a-1) fails here (a = 9 gives gcd 20); the certificate gives 4(a+1).
  out.push_back({"igcd", "igcd(3) (5,a^2-1)=5, a=-1 mod 5", "a odd, a = -1 mod 5",
                 [](const Integer& a) { return is_odd(a) && residue(a, 5) == 4; }, k5k10, phi(5) - c(1),
                 phi(10) - c(5), c(4) * (x - c(1)), c(4) * (x + c(1))});

  // Lemma igcd1.
  const std::pair<unsigned long, long> even_bounds[] = {{5, 31 * 61}, {3, 43}, {4, 13}};
  for (auto [i, bound] : even_bounds) {
    out.push_back({"igcd1", "igcd1(1) i=" + std::to_string(i), "a even",
                   [](const Integer& a) { return !is_odd(a); },
                   [k, i](const Integer& a) { return std::pair<Integer, Integer>{7 * k(8, a) - 1, cyclotomic_eval(i, a)}; },
                   c(7) * IntPolynomial::monomial(1, 4) + c(6), phi(i), c(bound), std::nullopt});
  }
  const std::pair<unsigned long, long> odd_bounds[] = {{5, 11 * 151}, {3, 39}, {4, 12}};
  for (auto [i, bound] : odd_bounds) {
    out.push_back({"igcd1", "igcd1(2) i=" + std::to_string(i), "a odd", [](const Integer& a) { return is_odd(a); },
                   [k, i](const Integer& a) { return std::pair<Integer, Integer>{7 * k(8, a) - 1, cyclotomic_eval(i, a)}; },
                   c(7) * IntPolynomial::monomial(1, 4) + c(5), phi(i), c(bound), std::nullopt});
  }
  auto at_square = [](unsigned long i) {
    return [i](const Integer& a) -> Integer { return cyclotomic_eval(i, a * a); };
  };
  const std::pair<unsigned long, long> b7[] = {{4, 2 * 1297}, {3, 3 * 13 * 109}};
  for (auto [i, bound] : b7) {
    auto sq = at_square(i);
    out.push_back({"igcd1", "igcd1(3) 7k_5(a)-1, i=" + std::to_string(i), "(5,a-1)=5",
                   [](const Integer& a) { return residue(a, 5) == 1; },
                   [k, sq](const Integer& a) { return std::pair<Integer, Integer>{7 * k(5, a) - 1, sq(a)}; },
                   c(7) * phi(5) - c(5), phi(i).substitute_power(2), c(bound), std::nullopt});
  }
  const std::pair<unsigned long, long> b1[] = {{4, 2 * 97}, {3, 3 * 7 * 31}};
  for (auto [i, bound] : b1) {
    auto sq = at_square(i);
    out.push_back({"igcd1", "igcd1(3) k_5(a)-1, i=" + std::to_string(i), "(5,a-1)=5",
                   [](const Integer& a) { return residue(a, 5) == 1; },
                   [k, sq](const Integer& a) { return std::pair<Integer, Integer>{k(5, a) - 1, sq(a)}; }, phi(5) - c(5),
                   phi(i).substitute_power(2), c(bound), std::nullopt});
  }
  const std::pair<unsigned long, long> b4[] = {{4, 2 * 337}, {3, 3 * 19 * 43}};
  for (auto [i, bound] : b4) {
    auto sq = at_square(i);
    out.push_back({"igcd1", "igcd1(4) i=" + std::to_string(i), "(5,a-1)=1",
                   [](const Integer& a) { return residue(a, 5) != 1; },
                   [k, sq](const Integer& a) { return std::pair<Integer, Integer>{7 * k(5, a) - 1, sq(a)}; },
                   c(7) * phi(5) - c(1), phi(i).substitute_power(2), c(bound), std::nullopt});
  }

  // Lemma igcd2 with f(x) = x^3 + 2x^2 + 3x + 4.
  const IntPolynomial f_poly{4, 3, 2, 1};
  const std::pair<unsigned long, long> b2[] = {{1, 10}, {2, 4}, {3, 7 * 31}, {4, 2 * 97}};
  for (auto [i, bound] : b2) {
    auto sq = at_square(i);
    out.push_back({"igcd2", "igcd2 i=" + std::to_string(i), "any a",
                   [](const Integer&) { return true; },
                   [f_poly, sq](const Integer& a) { return std::pair<Integer, Integer>{f_poly(a), sq(a)}; }, f_poly,
                   phi(i).substitute_power(2), c(bound), std::nullopt});
  }
  return out;
}

}  // namespace

const std::vector<GcdCase>& gcd_lemma_cases() {
  static const std::vector<GcdCase> cases = build_cases();
  return cases;
}

}  // namespace clspec
