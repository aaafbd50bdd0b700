#ifndef CLSPEC_CLI_HPP
#define CLSPEC_CLI_HPP

#include <iosfwd>
#include <string>

#include "clspec/groups.hpp"
#include "clspec/polycert.hpp"

namespace clspec {

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Invariant sheet for a Table-1 group. Throws std::domain_error out of scope.
std::string render_invariants(const GroupDescriptor& g);

/// Certificate summary with a spot check of gcd(f(a), g(a)) | m*h(a) at a = -50..49.
std::string render_certificate(const GcdCertificate& cert);

/// Entry point for `clspec`. Writes normal output to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clspec

#endif  // CLSPEC_CLI_HPP
