#include "doctest.h"

#include "clspec/arith.hpp"
#include "oracles.hpp"

using namespace clspec;

namespace {

std::vector<std::pair<Integer, unsigned>> pairs(const FactoredInteger& f) {
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& pf : f.factors()) out.emplace_back(pf.prime, pf.multiplicity);
  return out;
}

}  // namespace

TEST_CASE("factor: examples") {
  CHECK(factor(Integer(1)).factors().empty());
  using P = std::vector<std::pair<Integer, unsigned>>;
  CHECK(pairs(factor(Integer(2400))) == P{{2, 5}, {3, 1}, {5, 2}});
  CHECK(pairs(factor(Integer(78881))) == P{{11, 1}, {71, 1}, {101, 1}});
  CHECK(factor(Integer(12)).to_string() == "2^2 * 3");
  CHECK(factor(Integer(-12)).to_string() == "-1 * 2^2 * 3");
  CHECK(factor(Integer(-12)).recompose() == 12);
  CHECK(factor(Integer(16513)).to_string() == "7^2 * 337");
}

TEST_CASE("factor: agrees with trial division on random inputs") {
  oracle::Gen gen(11);
  for (int t = 0; t < 300; ++t) {
    const Integer n(gen.range(2, 10'000'000'000L));
    const auto expect = oracle::trial_factor(n);
    const FactoredInteger got = factor(n);
    REQUIRE(got.factors().size() == expect.size());
    std::size_t k = 0;
    for (const auto& [p, e] : expect) {
      CHECK(got.factors()[k].prime == p);
      CHECK(got.factors()[k].multiplicity == e);
      ++k;
    }
    CHECK(got.recompose() == n);
  }
}

TEST_CASE("factor: large cofactors") {
  // Mersenne numbers with known factorizations.
  const Integer m67 = oracle::power(2, 67) - 1;
  CHECK(factor(m67).to_string() == "193707721 * 761838257287");
  const Integer m89 = oracle::power(2, 89) - 1;
  CHECK(is_prime(m89));
  CHECK(factor(m89).factors().size() == 1);
  const Integer semi = Integer("1000000007") * Integer("998244353") * Integer("2305843009213693951");
  const FactoredInteger f = factor(semi);
  CHECK(f.recompose() == semi);
  CHECK(f.to_string() == "998244353 * 1000000007 * 2305843009213693951");
  for (const auto& p : f.primes()) CHECK(is_prime(p));
}

TEST_CASE("factor: magnitude cap") {
  FactorOptions tight;
  tight.magnitude_cap_bits = 64;
  CHECK_THROWS_AS(factor(oracle::power(3, 60), tight), MagnitudeCapExceeded);
  CHECK_NOTHROW(factor(Integer(1) << 63, tight));
}

TEST_CASE("factor_product matches factor of the product") {
  const std::vector<Integer> pieces{Integer(24), Integer(-35), oracle::power(7, 5), Integer(1)};
  Integer prod = 1;
  for (const auto& p : pieces) prod *= p;
  CHECK(factor_product(pieces).to_string() == factor(prod).to_string());
  CHECK_THROWS_AS(factor_product({Integer(3), Integer(0)}), std::invalid_argument);
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751}));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(Integer("3317044064679887385961981")));  // psp to the first 12 prime bases
}

TEST_CASE("prime lists") {
  CHECK(prime_powers_up_to(20) == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19});
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(largest_prime_divisor(360) == 5);
}

TEST_CASE("SignedPrimePower::from_integer") {
  auto s = SignedPrimePower::from_integer(Integer(-25));
  REQUIRE(s);
  CHECK(s->sign == -1);
  CHECK(s->base == 5);
  CHECK(s->exponent == 2);
  CHECK(s->value() == -25);
  CHECK(s->magnitude() == 25);
  CHECK(s->negated().value() == 25);
  CHECK_FALSE(SignedPrimePower::from_integer(Integer(12)));
  CHECK_FALSE(SignedPrimePower::from_integer(Integer(1)));
  CHECK(SignedPrimePower::from_integer(Integer(128))->exponent == 7);
}

TEST_CASE("r_part and mult_order") {
  CHECK(r_part(Integer(2400), 2) == 32);
  CHECK(r_part(Integer(7), 5) == 1);
  CHECK(r_part(Integer(2400), 5) == 25);
  CHECK(r_prime_part(Integer(2400), Integer(2)) == 75);
  CHECK(mult_order(Integer(11), Integer(3)) == 5);
  CHECK(mult_order(Integer(2), Integer(9)) == 1);
  CHECK(mult_order(Integer(2), Integer(7)) == 2);
  oracle::Gen gen(3);
  for (int t = 0; t < 500; ++t) {
    const long a = gen.nonunit(1000);
    const auto primes = primes_up_to(200);
    const std::uint64_t r = primes[static_cast<std::size_t>(gen.range(0, static_cast<long>(primes.size()) - 1))];
    if (a % static_cast<long>(r) == 0) continue;
    CHECK(mult_order(Integer(r), Integer(a)) == oracle::order(Integer(r), Integer(a)));
  }
}

TEST_CASE("lte_r_part: examples") {
  CHECK(lte_r_part(Integer(7), 4, 2).value == 32);
  CHECK(lte_r_part(Integer(7), 4, 2).lemma_case == 3);
  // 4^3 - 1 = 63 = 9 * 7.
  CHECK(lte_r_part(Integer(4), 3, 3).value == 9);
  CHECK(lte_r_part(Integer(4), 3, 3).lemma_case == 1);
  CHECK(lte_r_part(Integer(5), 1, 2).value == 4);
  CHECK_THROWS_AS(lte_r_part(Integer(4), 3, 5), std::domain_error);
  CHECK_THROWS_AS(lte_r_part(Integer(4), 3, 4), std::invalid_argument);
}

TEST_CASE("lte_r_part: matches the direct r-part wherever a case applies") {
  oracle::Gen gen(5);
  int judged = 0;
  for (int t = 0; t < 3000; ++t) {
    const long a = gen.nonunit(50);
    const unsigned long m = static_cast<unsigned long>(gen.range(1, 40));
    const std::uint64_t r = primes_up_to(50)[static_cast<std::size_t>(gen.range(0, 14))];
    try {
      const auto got = lte_r_part(Integer(a), m, r);
      ++judged;
      REQUIRE(got.value == oracle::r_part(oracle::power(Integer(a), m) - 1, Integer(r)));
    } catch (const std::domain_error&) {
    }
  }
  CHECK(judged > 300);
}

TEST_CASE("cyclotomic_eval") {
  CHECK(cyclotomic_eval(12, Integer(3)) == 73);
  CHECK(cyclotomic_eval(14, Integer(13)) == 4482037);
  CHECK(cyclotomic_eval(7, Integer(-13)) == 4482037);
  CHECK(cyclotomic_eval(1, Integer(10)) == 9);
  CHECK(cyclotomic_eval(2, Integer(1)) == 2);
  CHECK(cyclotomic_eval(3, Integer(-1)) == 1);
  for (unsigned long n = 1; n <= 40; ++n)
    for (long a = -12; a <= 12; ++a) REQUIRE(cyclotomic_eval(n, Integer(a)) == oracle::cyclotomic_at(n, Integer(a)));
}

TEST_CASE("cyclotomic_eval: odd-index reflection") {
  for (unsigned long i = 3; i <= 45; i += 2)
    for (long x = 2; x <= 30; ++x) REQUIRE(cyclotomic_eval(i, Integer(-x)) == cyclotomic_eval(2 * i, Integer(x)));
}

TEST_CASE("primitive prime divisors") {
  CHECK(primitive_prime_divisors(Integer(2), 6).empty());
  CHECK(primitive_prime_divisors(Integer(2), 4) == std::vector<Integer>{5});
  CHECK(primitive_prime_divisors(Integer(3), 5) == std::vector<Integer>{11});
  for (long a = -12; a <= 12; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (unsigned long i = 1; i <= 10; ++i) {
      const auto expect = oracle::primitive_primes(Integer(a), i);
      REQUIRE(primitive_prime_divisors(Integer(a), i) == expect);
      REQUIRE(has_primitive_prime_divisor(Integer(a), i) == !expect.empty());
    }
  }
}

TEST_CASE("Bang-Zsigmondy exceptions are exactly the empty cases") {
  for (long a = -40; a <= 40; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (unsigned long i = 1; i <= 24; ++i)
      REQUIRE(has_primitive_prime_divisor(Integer(a), i) == !is_zsigmondy_exception(Integer(a), i));
  }
  CHECK(is_zsigmondy_exception(Integer(2), 6));
  CHECK_FALSE(is_zsigmondy_exception(Integer(2), 4));
}

TEST_CASE("k_i: constants") {
  CHECK(k_i(10, Integer(17)) == 78881);
  CHECK(k_i(7, Integer(-13)) == 640291);
  // 41 * 241 is the product at eq = -4; at eq = 4 the k_5 factor is 341 = 11 * 31.
  CHECK(k_i(5, Integer(-4)) * k_i(12, Integer(-4)) == 41 * 241);
  CHECK(k_i(5, Integer(4)) == 11 * 31);
  CHECK(k_i(12, Integer(4)) == 241);
  CHECK(k_i(8, Integer(3)) == 41);
  CHECK(k_i(12, Integer(3)) == 73);
  CHECK(k_i(3, Integer(128)) == 16513);
  CHECK(k_i(5, Integer(5)) == 781);
  CHECK(k_i(8, Integer(5)) == 313);
  CHECK(k_i(10, Integer(5)) == 521);
  CHECK(k_i(10, Integer(9)) == 1181);
}

TEST_CASE("k_i: closed form, definitional product and oracle agree") {
  for (long a = -10; a <= 10; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (long i = 3; i <= 11; ++i) {
      const Integer expect = oracle::k_value(Integer(a), static_cast<unsigned long>(i));
      REQUIRE(k_i(i, Integer(a)) == expect);
      REQUIRE(k_i_by_definition(i, Integer(a)) == expect);
    }
  }
  for (long a = -60; a <= 60; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (long i = 3; i <= 30; ++i) REQUIRE(k_i(i, Integer(a)) == k_i_by_definition(i, Integer(a)));
  }
}

TEST_CASE("k_i: k_12 and k_8 closed forms for odd prime powers") {
  for (auto q : prime_powers_up_to(400)) {
    if (q % 2 == 0) continue;
    const Integer Q(static_cast<unsigned long>(q));
    const Integer q4 = Q * Q * Q * Q;
    REQUIRE(k_i(12, Q) == q4 - Q * Q + 1);
    REQUIRE(k_i(8, Q) == (q4 + 1) / 2);
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(7) == 6);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
      if (oracle::gcd(static_cast<long>(k), static_cast<long>(n)) == 1) ++count;
    REQUIRE(euler_phi(n) == count);
  }
}
