#include "clspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "clspec/tables.hpp"
#include "clspec/verifier.hpp"

namespace clspec {
namespace {

std::string with_factors(const Integer& n) {
  if (n == 0) return "0";
  const FactoredInteger f = factor(n);
  const std::string fs = f.to_string();
  return fs == n.get_str() ? fs : n.get_str() + " = " + fs;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

int cmd_invariants(const std::vector<std::string>& words, std::ostream& out, std::ostream& err) {
  try {
    out << render_invariants(parse_descriptor(join(words, " ")));
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

int cmd_certify(const std::string& f_text, const std::string& g_text, std::ostream& out, std::ostream& err) {
  try {
    const IntPolynomial f = IntPolynomial::from_coefficient_line(f_text);
    const IntPolynomial g = IntPolynomial::from_coefficient_line(g_text);
    if (f.is_zero() || g.is_zero()) {
      err << "error: f and g must be nonzero polynomials\n";
      return exit_usage;
    }
    out << render_certificate(certify(f, g));
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> checks;
  std::string profile = "quick";
  std::uint64_t range = 0;
  unsigned jobs = 1;
  std::string format = "human";
  std::string out_path;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  CheckOptions options;
  options.profile = parse_profile(args.profile);
  if (args.range > 0) options.range = args.range;
  options.jobs = args.jobs;
  std::vector<CheckReport> reports;
  try {
    const auto& registry = default_registry();
    reports = args.checks.empty() ? run_all(registry, options) : run_checks(registry, args.checks, options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) {
      err << "error: cannot write " << args.out_path << '\n';
      return exit_usage;
    }
    sink = &file;
  }
  if (args.format == "records") {
    write_records(*sink, reports);
  } else {
    *sink << "profile: " << to_string(options.profile) << ", tables: " << table_snapshot_id() << "\n\n";
    write_human(*sink, reports);
  }
  for (const auto& r : reports)
    if (!r.ok()) return exit_check_failed;
  return exit_ok;
}

}  // namespace

std::string render_invariants(const GroupDescriptor& g) {
  const ZYInvariants zy = zy_invariants(g);
  const Integer kz = k_x_of_L(g, ZY::z), ky = k_x_of_L(g, ZY::y);
  const Integer eq = g.epsilon() * g.q();
  Integer gcd;
  mpz_gcd(gcd.get_mpz_t(), zy.m_z.get_mpz_t(), zy.m_y.get_mpz_t());
  std::ostringstream os;
  os << "group: " << g.name() << '\n'
     << "q = " << g.q().get_str() << ", p = " << g.p() << ", epsilon = " << (g.epsilon() > 0 ? "+" : "-")
     << ", rank = " << g.rank() << '\n'
     << "Table 1 row: " << zy.branch << '\n'
     << "z = " << zy.z << ", y = " << zy.y << '\n'
     << "m_z = " << with_factors(zy.m_z) << '\n'
     << "m_y = " << with_factors(zy.m_y) << '\n'
     << "gcd(m_z, m_y) = " << gcd.get_str() << '\n'
     << "k_z = k_" << zy.z << "(" << eq.get_str() << ") = " << with_factors(kz) << '\n'
     << "k_y = k_" << zy.y << "(" << eq.get_str() << ") = " << with_factors(ky) << '\n'
     << "meo bound q^" << g.rank() << " = " << meo_upper_bound(g).get_str() << '\n';
  const FactoredInteger order = group_order(g);
  os << "|L| = " << order.value().get_str() << " = " << order.to_string() << '\n';
  return os.str();
}

std::string render_certificate(const GcdCertificate& cert) {
  std::ostringstream os;
  os << "f = " << cert.f.to_string() << '\n'
     << "g = " << cert.g.to_string() << '\n'
     << "h = " << cert.h.to_string() << '\n'
     << "m = " << cert.m.get_str() << '\n'
     << "u = " << cert.u.to_string() << '\n'
     << "v = " << cert.v.to_string() << '\n'
     << "identity f*u + g*v = m*h: " << (cert.identity_holds() ? "verified" : "FAILED") << '\n';
  const CheckReport spot = check_certificate_pointwise(cert, -50, 49);
  os << "spot check a = -50..49: " << spot.cases_checked - spot.degenerate_cases << " divisible, "
     << spot.degenerate_cases << " degenerate, " << spot.counterexamples.size() << " violations\n";
  for (const auto& c : spot.counterexamples) os << "  violation " << c << '\n';
  os << "certificate:\n" << serialize_certificate(cert);
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic invariants of classical groups and verification of the supporting lemmas", "clspec"};
  app.require_subcommand(1);

  std::vector<std::string> descriptor;
  auto* inv = app.add_subcommand("invariants", "Table-1 invariant sheet, e.g. invariants \"O12+ q=5\"");
  inv->add_option("descriptor", descriptor, "series token and q=/u= value")->required();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run verification checks");
  auto* all_flag = ver->add_flag("--all", va.all, "run every registered check (default)");
  ver->add_option("--check", va.checks, "check ids to run")->excludes(all_flag);
  ver->add_option("--profile", va.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--range", va.range, "override the main range of every selected check")
      ->check(CLI::PositiveNumber);
  ver->add_option("--jobs", va.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  ver->add_option("--format", va.format, "human or records")->check(CLI::IsMember({"human", "records"}));
  ver->add_option("--out", va.out_path, "write the report to a file");

  std::string f_text, g_text;
  auto* cer = app.add_subcommand("certify", "gcd certificate for two integer polynomials");
  cer->add_option("--f", f_text, "coefficients of f, constant term first")->required();
  cer->add_option("--g", g_text, "coefficients of g, constant term first")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (inv->parsed()) return cmd_invariants(descriptor, out, err);
  if (ver->parsed()) return cmd_verify(va, out, err);
  return cmd_certify(f_text, g_text, out, err);
}

}  // namespace clspec
