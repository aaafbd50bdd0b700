#include "clspec/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace clspec {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::operator()(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a / c);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::substitute_power(unsigned k) const {
  if (k == 0) return constant((*this)(1));
  std::vector<Integer> out(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * k + 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out(coeffs_);
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) { return IntPolynomial::constant(c) * p; }

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Integer> rem(coeffs_);
  const long dd = divisor.degree();
  if (degree() < dd) {
    if (is_zero()) return {};
    throw std::domain_error("polynomial division is not exact");
  }
  std::vector<Integer> quot(static_cast<std::size_t>(degree() - dd + 1), Integer(0));
  const Integer& lead = divisor.leading();
  for (long k = degree() - dd; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("polynomial division is not exact over the integers");
    Integer c = top / lead;
    quot[static_cast<std::size_t>(k)] = c;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("polynomial division is not exact");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_coefficient_line() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ' ';
    os << coeffs_[i].get_str();
  }
  return os.str();
}

IntPolynomial IntPolynomial::from_coefficient_line(std::string_view line) {
  std::vector<Integer> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Integer v;
    if (v.set_str(token, 10) != 0) throw std::invalid_argument("bad polynomial coefficient '" + token + "'");
    out.push_back(std::move(v));
    token.clear();
  };
  for (char ch : line) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\r' || ch == '\n') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty polynomial coefficient list");
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

RatPolynomial::RatPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  coeffs_.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs_.emplace_back(c);
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RatPolynomial(std::move(out));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + Rational(-1) * b; }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPolynomial(std::move(out));
}

RatPolynomial operator*(const Rational& c, const RatPolynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& v : out) v *= c;
  return RatPolynomial(std::move(out));
}

RatPolynomial::DivMod RatPolynomial::divmod(const RatPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(coeffs_);
  const long dd = divisor.degree();
  if (degree() < dd) return {RatPolynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational& lead = divisor.leading();
  for (long k = degree() - dd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

Integer RatPolynomial::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

IntPolynomial RatPolynomial::to_integer() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) throw std::domain_error("polynomial has a non-integer coefficient");
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: index must be positive");
  IntPolynomial p = IntPolynomial::monomial(1, n) - IntPolynomial{1};
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    p = p.exact_divide(cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace clspec
