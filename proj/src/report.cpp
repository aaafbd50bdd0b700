#include "clspec/report.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace clspec {
namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(sep);
    out += items[i];
  }
  return out;
}

std::uint64_t parse_u64(const std::string& text, const char* field) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument(std::string("record: bad ") + field + " '" + text + "'");
  return std::stoull(text);
}

std::vector<std::string> split_list(const std::string& text) {
  if (text.empty()) return {};
  return split(text, ';');
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::degenerate: return "degenerate-cases-present";
  }
  return "fail";
}

CheckStatus parse_status(std::string_view text) {
  if (text == "pass") return CheckStatus::pass;
  if (text == "fail") return CheckStatus::fail;
  if (text == "degenerate-cases-present") return CheckStatus::degenerate;
  throw std::invalid_argument("record: unknown status '" + std::string(text) + "'");
}

void CheckReport::finalize() {
  if (!counterexamples.empty()) {
    status = CheckStatus::fail;
  } else if (degenerate_cases > 0) {
    status = CheckStatus::degenerate;
  } else {
    status = CheckStatus::pass;
  }
}

std::string sanitize_field(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    if (c == ';') c = ',';
  }
  return out;
}

std::string to_record(const CheckReport& r) {
  std::vector<std::string> cex, notes;
  for (const auto& c : r.counterexamples) cex.push_back(sanitize_field(c));
  for (const auto& n : r.notes) notes.push_back(sanitize_field(n));
  std::ostringstream os;
  os << sanitize_field(r.check_id) << '\t' << to_string(r.status) << '\t' << r.cases_checked << '\t'
     << cex.size() << '\t' << join(cex, ';') << '\t' << r.elapsed.count() << '\t'
     << sanitize_field(r.domain_description) << '\t' << r.degenerate_cases << '\t' << join(notes, ';');
  return os.str();
}

CheckReport parse_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto fields = split(line, '\t');
  if (fields.size() != 6 && fields.size() != 9)
    throw std::invalid_argument("record: expected 6 or 9 tab-separated fields, got " +
                                std::to_string(fields.size()));
  CheckReport r;
  r.check_id = fields[0];
  r.status = parse_status(fields[1]);
  r.cases_checked = parse_u64(fields[2], "cases_checked");
  const auto count = parse_u64(fields[3], "counterexample count");
  r.counterexamples = split_list(fields[4]);
  if (r.counterexamples.size() != count)
    throw std::invalid_argument("record: counterexample count does not match the list");
  r.elapsed = std::chrono::milliseconds(parse_u64(fields[5], "elapsed-ms"));
  if (fields.size() == 9) {
    r.domain_description = fields[6];
    r.degenerate_cases = parse_u64(fields[7], "degenerate count");
    r.notes = split_list(fields[8]);
  }
  return r;
}

void write_records(std::ostream& out, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) out << to_record(r) << '\n';
}

std::vector<CheckReport> read_records(std::istream& in) {
  std::vector<CheckReport> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_record(line));
  }
  return out;
}

void write_human(std::ostream& out, const std::vector<CheckReport>& reports) {
  std::size_t id_width = 5;
  for (const auto& r : reports) id_width = std::max(id_width, r.check_id.size());
  out << std::left << std::setw(static_cast<int>(id_width)) << "check" << "  " << std::setw(24) << "status"
      << std::right << std::setw(12) << "cases" << std::setw(10) << "cex" << std::setw(12) << "ms" << '\n';
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(id_width)) << r.check_id << "  " << std::setw(24)
        << to_string(r.status) << std::right << std::setw(12) << r.cases_checked << std::setw(10)
        << r.counterexamples.size() << std::setw(12) << r.elapsed.count() << '\n';
  }
  for (const auto& r : reports) {
    out << '\n' << r.check_id << ": " << r.domain_description << '\n';
    for (const auto& n : r.notes) out << "  note: " << n << '\n';
    for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
  }
  const bool all_ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
  out << '\n' << (all_ok ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << " (" << reports.size() << " checks)\n";
}

}  // namespace clspec
