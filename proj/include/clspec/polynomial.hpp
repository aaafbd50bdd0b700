#ifndef CLSPEC_POLYNOMIAL_HPP
#define CLSPEC_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "clspec/arith.hpp"

namespace clspec {

using Rational = mpq_class;

/// Univariate polynomial with integer coefficients, constant term first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  static IntPolynomial x() { return monomial(1, 1); }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const;

  Integer operator()(const Integer& at) const;

  /// gcd of the coefficients, nonnegative.
  Integer content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  /// p(x^k).
  IntPolynomial substitute_power(unsigned k) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact quotient by a divisor whose leading coefficient divides every step;
  /// throws std::domain_error when the division is not exact over the integers.
  IntPolynomial exact_divide(const IntPolynomial& divisor) const;

  /// Space-separated decimal coefficients, constant term first ("0" for zero).
  std::string to_coefficient_line() const;
  static IntPolynomial from_coefficient_line(std::string_view line);
  /// Human rendering such as "x^4 - 1".
  std::string to_string() const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Polynomial over the rationals, used for Euclid and Bezout cofactors.
class RatPolynomial {
public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coefficients);
  explicit RatPolynomial(const IntPolynomial& p);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& c, const RatPolynomial& p);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  struct DivMod;
  DivMod divmod(const RatPolynomial& divisor) const;

  /// lcm of the reduced denominators (1 for the zero polynomial).
  Integer denominator_lcm() const;
  /// Only valid when every coefficient is an integer.
  IntPolynomial to_integer() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct RatPolynomial::DivMod {
  RatPolynomial quotient;
  RatPolynomial remainder;
};

/// Φ_n(x) as an exact integer polynomial.
IntPolynomial cyclotomic_polynomial(unsigned long n);

}  // namespace clspec

#endif  // CLSPEC_POLYNOMIAL_HPP
