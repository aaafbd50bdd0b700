#ifndef CLSPEC_POLYCERT_HPP
#define CLSPEC_POLYCERT_HPP

#include <functional>
#include <string>
#include <string_view>

#include "clspec/polynomial.hpp"
#include "clspec/report.hpp"

namespace clspec {

/// Witness that gcd(f(a), g(a)) divides m*h(a) for every integer a:
/// f*u + g*v = m*h holds coefficient by coefficient, h is the primitive gcd
/// of f and g over Q, and m is the least positive integer clearing the
/// denominators of the minimal-degree rational Bezout cofactors.
struct GcdCertificate {
  IntPolynomial f;
  IntPolynomial g;
  IntPolynomial h;
  Integer m = 1;
  IntPolynomial u;
  IntPolynomial v;

  /// Re-checks f*u + g*v == m*h exactly.
  bool identity_holds() const;
  /// m*h as a single polynomial.
  IntPolynomial bound() const { return m * h; }

  friend bool operator==(const GcdCertificate&, const GcdCertificate&) = default;
};

/// Primitive gcd over Q with positive leading coefficient.
IntPolynomial poly_gcd_rational(const IntPolynomial& f, const IntPolynomial& g);

GcdCertificate certify(const IntPolynomial& f, const IntPolynomial& g);

using IntegerFilter = std::function<bool(const Integer&)>;

/// Confirms gcd(f(a), g(a)) | m*h(a) for a in [lo, hi] (optionally filtered).
/// Points where f(a) = g(a) = 0 are counted as degenerate, not judged.
CheckReport check_certificate_pointwise(const GcdCertificate& cert, long lo, long hi,
                                        const IntegerFilter& filter = {}, unsigned jobs = 1);

// Plain-text form: six lines f, g, h, m, u, v, each a coefficient line.
std::string serialize_certificate(const GcdCertificate& cert);
GcdCertificate parse_certificate(std::string_view text);

}  // namespace clspec

#endif  // CLSPEC_POLYCERT_HPP
