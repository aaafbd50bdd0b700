#ifndef CLSPEC_REPORT_HPP
#define CLSPEC_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace clspec {

enum class CheckStatus { pass, fail, degenerate };

std::string_view to_string(CheckStatus status);
CheckStatus parse_status(std::string_view text);

/// Outcome of one verification. `status` is fail exactly when there are
/// counterexamples; degenerate when there are none but some points could not
/// be judged (recorded in `degenerate_cases`).
struct CheckReport {
  std::string check_id;
  std::string domain_description;
  std::uint64_t cases_checked = 0;
  std::uint64_t degenerate_cases = 0;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  /// Derives `status` from counterexamples and degenerate cases.
  void finalize();
  bool ok() const { return status != CheckStatus::fail; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Measures wall-clock time for a report under construction.
class ReportTimer {
public:
  explicit ReportTimer(CheckReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

private:
  CheckReport& report_;
  std::chrono::steady_clock::time_point start_;
};

// Record format: one line per report, tab-separated:
//   id, status, cases_checked, counterexample count, counterexamples joined
//   by ';', elapsed-ms, domain description, degenerate count, notes joined by ';'.
// The first six fields are the stable core; the rest carry the remaining fields.
std::string to_record(const CheckReport& report);
CheckReport parse_record(std::string_view line);
void write_records(std::ostream& out, const std::vector<CheckReport>& reports);
std::vector<CheckReport> read_records(std::istream& in);

void write_human(std::ostream& out, const std::vector<CheckReport>& reports);

/// Replaces tabs, semicolons and newlines so a field survives the record format.
std::string sanitize_field(std::string_view text);

}  // namespace clspec

#endif  // CLSPEC_REPORT_HPP
