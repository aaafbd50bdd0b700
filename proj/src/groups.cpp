#include "clspec/groups.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace clspec {
namespace {

// Cyclotomic pieces of q^k - sign, sign = ±1.
void append_pieces(std::vector<Integer>& out, const Integer& q, unsigned long k, int sign) {
  const unsigned long span = sign > 0 ? k : 2 * k;
  for (unsigned long d = 1; d <= span; ++d) {
    if (span % d != 0) continue;
    if (sign < 0 && k % d == 0) continue;
    out.push_back(abs(cyclotomic_eval(d, q)));
  }
}

Integer gcd_ui(const Integer& a, unsigned long b) {
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), a.get_mpz_t(), b);
  return g;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error("inexact division " + a.get_str() + " / " + b.get_str());
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

FactoredInteger divide_factored(const FactoredInteger& value, const Integer& d) {
  if (d == 1) return value;
  std::map<Integer, unsigned> m;
  for (const auto& f : value.factors()) m[f.prime] = f.multiplicity;
  for (const auto& f : factor(d).factors()) {
    auto it = m.find(f.prime);
    if (it == m.end() || it->second < f.multiplicity) throw std::logic_error("divide_factored: not a divisor");
    it->second -= f.multiplicity;
    if (it->second == 0) m.erase(it);
  }
  std::vector<PrimeFactor> factors;
  for (auto& [p, e] : m) factors.push_back({p, e});
  return FactoredInteger(exact_div(value.value(), d), std::move(factors));
}

struct OrderData {
  unsigned long p_exponent = 0;  // |L|_p = q^p_exponent
  std::vector<Integer> pieces;   // p'-part before dividing by the centre
  Integer centre;
};

OrderData order_data(const GroupDescriptor& g) {
  OrderData d;
  const Integer q = g.q();
  const unsigned long n = g.n;
  switch (g.family) {
    case Family::linear:
    case Family::unitary: {
      const int e = g.epsilon();
      d.p_exponent = n * (n - 1) / 2;
      for (unsigned long i = 2; i <= n; ++i) append_pieces(d.pieces, q, i, (i % 2 == 0) ? 1 : e);
      d.centre = gcd_ui(q - e, n);
      break;
    }
    case Family::symplectic:
    case Family::odd_orthogonal:
      d.p_exponent = n * n;
      for (unsigned long i = 1; i <= n; ++i) append_pieces(d.pieces, q, 2 * i, 1);
      d.centre = gcd_ui(q - 1, 2);
      break;
    case Family::plus_orthogonal:
    case Family::minus_orthogonal: {
      const int e = g.epsilon();
      d.p_exponent = n * (n - 1);
      append_pieces(d.pieces, q, n, e);
      for (unsigned long i = 1; i + 1 <= n; ++i) append_pieces(d.pieces, q, 2 * i, 1);
      d.centre = gcd_ui(ipow(q, n) - e, 4);
      break;
    }
  }
  return d;
}

void require_table1(const GroupDescriptor& g) {
  if (!in_table1_scope(g))
    throw std::domain_error(g.name() + " has no Table-1 row (supported series: L8+, L8-, O10+, O10-, O12+)");
  if (g.p() == 2) throw std::domain_error("q must be odd for Table-1 invariants");
}

[[noreturn]] void bad_token(std::string_view token, const std::string& why) {
  throw DescriptorError("invalid token '" + std::string(token) + "': " + why);
}

}  // namespace

int GroupDescriptor::epsilon() const {
  return (family == Family::unitary || family == Family::minus_orthogonal) ? -1 : 1;
}

unsigned GroupDescriptor::rank() const {
  return (family == Family::linear || family == Family::unitary) ? n - 1 : n;
}

std::string GroupDescriptor::series() const {
  switch (family) {
    case Family::linear: return "L" + std::to_string(n) + "+";
    case Family::unitary: return "L" + std::to_string(n) + "-";
    case Family::symplectic: return "S" + std::to_string(2 * n);
    case Family::odd_orthogonal: return "O" + std::to_string(2 * n + 1);
    case Family::plus_orthogonal: return "O" + std::to_string(2 * n) + "+";
    case Family::minus_orthogonal: return "O" + std::to_string(2 * n) + "-";
  }
  return "?";
}

std::string GroupDescriptor::name() const { return series() + "(" + q().get_str() + ")"; }

GroupDescriptor make_group(Family family, unsigned n, std::uint64_t q) {
  auto field = SignedPrimePower::from_integer(Integer(static_cast<unsigned long>(q)));
  if (!field || q < 2) throw DescriptorError(std::to_string(q) + " is not a prime power");
  GroupDescriptor g{family, n, *field};
  return g;
}

bool in_table1_scope(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::linear:
    case Family::unitary: return g.n == 8;
    case Family::plus_orthogonal: return g.n == 5 || g.n == 6;
    case Family::minus_orthogonal: return g.n == 5;
    default: return false;
  }
}

GroupDescriptor parse_descriptor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw DescriptorError("empty group descriptor");

  const std::string& head = tokens[0];
  const char letter = head[0];
  std::size_t pos = 1;
  while (pos < head.size() && std::isdigit(static_cast<unsigned char>(head[pos]))) ++pos;
  const std::string digits = head.substr(1, pos - 1);
  const std::string sign = head.substr(pos);
  if (digits.empty() || digits.size() > 3 || (sign != "" && sign != "+" && sign != "-"))
    bad_token(head, "expected a series such as L8+, L8-, U8, S10, O9, O10+, O12+");
  const unsigned d = static_cast<unsigned>(std::stoul(digits));

  GroupDescriptor g;
  if (letter == 'L') {
    if (d < 2) bad_token(head, "linear groups need n >= 2");
    g.family = sign == "-" ? Family::unitary : Family::linear;
    g.n = d;
  } else if (letter == 'U') {
    if (!sign.empty()) bad_token(head, "unitary series take no sign");
    if (d < 3) bad_token(head, "unitary groups need n >= 3");
    g.family = Family::unitary;
    g.n = d;
  } else if (letter == 'S') {
    if (!sign.empty()) bad_token(head, "symplectic series take no sign");
    if (d < 4 || d % 2 != 0) bad_token(head, "symplectic dimension must be even and at least 4");
    g.family = Family::symplectic;
    g.n = d / 2;
  } else if (letter == 'O') {
    if (d % 2 == 1) {
      if (!sign.empty()) bad_token(head, "odd-dimensional orthogonal series take no sign");
      if (d < 7) bad_token(head, "odd orthogonal dimension must be at least 7");
      g.family = Family::odd_orthogonal;
      g.n = (d - 1) / 2;
    } else {
      if (sign.empty()) bad_token(head, "even-dimensional orthogonal series need a sign, e.g. O10+");
      if (d < 8) bad_token(head, "even orthogonal dimension must be at least 8");
      g.family = sign == "+" ? Family::plus_orthogonal : Family::minus_orthogonal;
      g.n = d / 2;
    }
  } else {
    bad_token(head, "expected a series such as L8+, L8-, U8, S10, O9, O10+, O12+");
  }

  bool have_field = false;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    const auto eq = t.find('=');
    if (eq == std::string::npos) bad_token(t, "expected key=value");
    const std::string key = t.substr(0, eq), value = t.substr(eq + 1);
    if (key != "q" && key != "u") bad_token(t, "unknown key (use q= or u=)");
    if (have_field) bad_token(t, "field size given twice");
    if (value.empty() || value.size() > 18 || value.find_first_not_of("0123456789") != std::string::npos)
      bad_token(t, "field size must be a positive integer");
    auto field = SignedPrimePower::from_integer(Integer(value));
    if (!field || field->sign < 0) bad_token(t, value + " is not a prime power");
    g.field = *field;
    have_field = true;
  }
  if (!have_field) throw DescriptorError("missing field size (q=... or u=...) in '" + std::string(text) + "'");

  const unsigned long q = g.q().get_ui();
  const bool not_simple = (g.family == Family::linear && g.n == 2 && q <= 3) ||
                          (g.family == Family::unitary && g.n == 3 && q == 2) ||
                          (g.family == Family::symplectic && g.n == 2 && q == 2);
  if (not_simple) throw DescriptorError(g.name() + " is not simple");
  if (g.family == Family::odd_orthogonal && g.p() == 2)
    throw DescriptorError(g.name() + ": use the symplectic series in characteristic 2");
  return g;
}

FactoredInteger group_order(const GroupDescriptor& g) {
  OrderData d = order_data(g);
  d.pieces.push_back(ipow(g.q(), d.p_exponent));
  return divide_factored(factor_product(d.pieces), d.centre);
}

Integer group_order_value(const GroupDescriptor& g) {
  const OrderData d = order_data(g);
  Integer v = ipow(g.q(), d.p_exponent);
  for (const auto& piece : d.pieces) v *= piece;
  return exact_div(v, d.centre);
}

ZYInvariants zy_invariants(const GroupDescriptor& g) {
  require_table1(g);
  const Integer q = g.q();
  const int e = g.epsilon();
  ZYInvariants out;
  if (g.family == Family::linear || g.family == Family::unitary) {
    const Integer q8 = ipow(q, 8) - 1, q7 = ipow(q, 7) - e;
    if (r_part(q - e, 2) > 8) {
      out = {8, 7, exact_div(q8, 8 * (q - e)), exact_div(q7, 8), "8 < (q-e)_2"};
    } else {
      const Integer d = gcd_ui(q - e, 8);
      out = {7, 8, exact_div(q7, d), exact_div(q8, (q - e) * d), "8 >= (q-e)_2"};
    }
  } else if (g.n == 5) {
    const Integer a = (ipow(q, 4) + 1) * (q + e), b = ipow(q, 5) - e;
    const Integer qm4 = ((q % 4) + 4) % 4, em4 = (e + 4) % 4;
    if (qm4 == em4) {
      out = {8, 5, exact_div(a, 4), exact_div(b, 4), "q = e mod 4"};
    } else {
      const Integer d = gcd_ui(q - e, 2);
      out = {5, 8, exact_div(b, d), exact_div(a, d), "q != e mod 4"};
    }
  } else {
    const Integer plus = ipow(q, 5) + 1, minus = ipow(q, 5) - 1;
    if (q % 4 == 1) {
      out = {10, 5, exact_div(plus, 2), exact_div(minus, 2), "q = 1 mod 4"};
    } else {
      const Integer d = gcd_ui(q - 1, 2);
      out = {5, 10, exact_div(minus, d), exact_div(plus, d), "q != 1 mod 4"};
    }
  }
  return out;
}

Integer k_x_of_L(const GroupDescriptor& g, ZY which) {
  const ZYInvariants zy = zy_invariants(g);
  const Integer eq = g.epsilon() * g.q();
  return k_i(which == ZY::z ? zy.z : zy.y, eq);
}

Integer exp_r(const GroupDescriptor& g, const Integer& rr) {
  require_table1(g);
  if (rr < 7 || !is_prime(rr)) throw std::domain_error("exp_r needs a prime r >= 7, got " + rr.get_str());
  const Integer order = group_order_value(g);
  if (!mpz_divisible_p(order.get_mpz_t(), rr.get_mpz_t()))
    throw std::domain_error(rr.get_str() + " does not divide |" + g.name() + "|");
  const bool is_o10 = g.n == 5 && (g.family == Family::plus_orthogonal || g.family == Family::minus_orthogonal);
  if (rr == g.p()) return (rr == 7 && !is_o10) ? Integer(49) : rr;
  const Integer eq = g.epsilon() * g.q();
  const unsigned long i = mult_order(rr, eq).get_ui();
  Integer v = r_part(ipow(eq, i) - 1, rr);
  const bool linear = g.family == Family::linear || g.family == Family::unitary;
  if (rr == 7 && i == 1 && linear) v *= 7;
  return v;
}

FactoredInteger exp_pprime_O10(const GroupDescriptor& g) {
  if (g.n != 5 || (g.family != Family::plus_orthogonal && g.family != Family::minus_orthogonal))
    throw std::domain_error("exp_pprime_O10 needs an O10+ or O10- group, got " + g.name());
  if (g.p() == 2) throw std::domain_error("exp_pprime_O10 needs odd q");
  const Integer q = g.q(), q2 = q * q;
  std::vector<Integer> pieces{cyclotomic_eval(5, g.epsilon() * q)};
  for (unsigned long l = 1; l <= 4; ++l) pieces.push_back(abs(cyclotomic_eval(l, q2)));
  return divide_factored(factor_product(pieces), 2);
}

Integer meo_upper_bound(const GroupDescriptor& g) { return ipow(g.q(), g.rank()); }

}  // namespace clspec
