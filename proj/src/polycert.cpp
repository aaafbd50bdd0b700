#include "clspec/polycert.hpp"

#include <sstream>
#include <stdexcept>

#include "clspec/parallel.hpp"

namespace clspec {
namespace {

IntPolynomial primitive_integer(const RatPolynomial& p) {
  const Integer den = p.denominator_lcm();
  return (Rational(den) * p).to_integer().primitive_part();
}

RatPolynomial exact_quotient(const RatPolynomial& a, const RatPolynomial& b) {
  auto dm = a.divmod(b);
  if (!dm.remainder.is_zero()) throw std::logic_error("certify: expected an exact polynomial quotient");
  return dm.quotient;
}

}  // namespace

bool GcdCertificate::identity_holds() const { return f * u + g * v == m * h; }

IntPolynomial poly_gcd_rational(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd_rational: both polynomials are zero");
  RatPolynomial a(f), b(g);
  while (!b.is_zero()) {
    RatPolynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_integer(a);
}

GcdCertificate certify(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("certify: polynomials must be nonzero");

  // Extended Euclid over Q: s*f + t*g = r at every step.
  RatPolynomial r0(f), r1(g);
  RatPolynomial s0(std::vector<Rational>{1}), s1;
  RatPolynomial t0, t1(std::vector<Rational>{1});
  while (!r1.is_zero()) {
    auto dm = r0.divmod(r1);
    RatPolynomial s2 = s0 - dm.quotient * s1;
    RatPolynomial t2 = t0 - dm.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(dm.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }

  GcdCertificate cert;
  cert.f = f;
  cert.g = g;
  cert.h = primitive_integer(r0);
  const RatPolynomial h_rat(cert.h);
  const Rational scale = h_rat.leading() / r0.leading();
  RatPolynomial u = scale * s0;

  // Reduce to the unique cofactors with deg u < deg(g/h).
  const RatPolynomial g_over_h = exact_quotient(RatPolynomial(g), h_rat);
  u = g_over_h.degree() >= 1 ? u.divmod(g_over_h).remainder : RatPolynomial{};
  const RatPolynomial v = exact_quotient(h_rat - RatPolynomial(f) * u, RatPolynomial(g));

  Integer m = u.denominator_lcm();
  mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.denominator_lcm().get_mpz_t());
  cert.m = m;
  cert.u = (Rational(m) * u).to_integer();
  cert.v = (Rational(m) * v).to_integer();
  if (!cert.identity_holds()) throw std::logic_error("certify: Bezout identity failed to verify");
  return cert;
}

CheckReport check_certificate_pointwise(const GcdCertificate& cert, long lo, long hi,
                                        const IntegerFilter& filter, unsigned jobs) {
  CheckReport report;
  report.check_id = "certificate-pointwise";
  {
    ReportTimer timer(report);
    std::ostringstream domain;
    domain << "gcd(f(a), g(a)) | m*h(a) for a in [" << lo << ", " << hi << "]" << (filter ? " (filtered)" : "")
           << "; f = " << cert.f.to_string() << ", g = " << cert.g.to_string() << ", m*h = " << cert.m.get_str()
           << "*(" << cert.h.to_string() << ")";
    report.domain_description = domain.str();

    struct Point {
      bool considered = false;
      bool degenerate = false;
      std::string violation;
    };
    const std::size_t n = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
    auto points = parallel_map<Point>(n, jobs, [&](std::size_t i) {
      Point pt;
      const Integer a(lo + static_cast<long>(i));
      if (filter && !filter(a)) return pt;
      pt.considered = true;
      const Integer fa = cert.f(a), ga = cert.g(a);
      if (fa == 0 && ga == 0) {
        pt.degenerate = true;
        return pt;
      }
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), fa.get_mpz_t(), ga.get_mpz_t());
      const Integer bound = cert.m * cert.h(a);
      if (!mpz_divisible_p(bound.get_mpz_t(), gcd.get_mpz_t()))
        pt.violation = "(a=" + a.get_str() + ",gcd=" + gcd.get_str() + ",bound=" + bound.get_str() + ")";
      return pt;
    });
    for (std::size_t i = 0; i < n; ++i) {
      const auto& pt = points[i];
      if (!pt.considered) continue;
      ++report.cases_checked;
      if (pt.degenerate) {
        ++report.degenerate_cases;
        report.notes.push_back("degenerate: f(a)=g(a)=0 at a=" + std::to_string(lo + static_cast<long>(i)));
      }
      if (!pt.violation.empty()) report.counterexamples.push_back(pt.violation);
    }
  }
  report.finalize();
  return report;
}

std::string serialize_certificate(const GcdCertificate& cert) {
  std::ostringstream os;
  os << cert.f.to_coefficient_line() << '\n'
     << cert.g.to_coefficient_line() << '\n'
     << cert.h.to_coefficient_line() << '\n'
     << cert.m.get_str() << '\n'
     << cert.u.to_coefficient_line() << '\n'
     << cert.v.to_coefficient_line() << '\n';
  return os.str();
}

GcdCertificate parse_certificate(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() != 6) throw std::invalid_argument("certificate text must have six lines (f, g, h, m, u, v)");
  GcdCertificate cert;
  cert.f = IntPolynomial::from_coefficient_line(lines[0]);
  cert.g = IntPolynomial::from_coefficient_line(lines[1]);
  cert.h = IntPolynomial::from_coefficient_line(lines[2]);
  if (cert.m.set_str(lines[3], 10) != 0 || cert.m <= 0)
    throw std::invalid_argument("certificate multiplier must be a positive integer");
  cert.u = IntPolynomial::from_coefficient_line(lines[4]);
  cert.v = IntPolynomial::from_coefficient_line(lines[5]);
  if (!cert.identity_holds()) throw std::invalid_argument("certificate identity f*u + g*v = m*h does not hold");
  return cert;
}

}  // namespace clspec
