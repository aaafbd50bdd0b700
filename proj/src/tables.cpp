#include "clspec/tables.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace clspec {
namespace {

KEntry k(unsigned i) { return {i, 0}; }
KEntry lit(long v) { return {0, Integer(v)}; }

using C = UCondition;

std::vector<TableRow> build_rows() {
  return {
      // t(S) = 6
      {2, 6, {"L11"}, C::not_two, {6, 7, 8, 9, 10, 11}, {}, {}, {}},
      {2, 6, {"L12"}, C::any, {7, 8, 9, 10, 11, 12}, {}, {}, {}},
      {2, 6, {"U11"}, C::any, {3, 5, 8, 14, 18, 22}, {}, {}, {}},
      {2, 6, {"U12"}, C::any, {5, 8, 12, 14, 18, 22}, {}, {}, {}},
      {2, 6, {"S14", "O15"}, C::any, {5, 7, 8, 10, 12, 14}, {}, {}, {}},
      {2, 6, {"O14+"}, C::any, {3, 5, 7, 8, 10, 12}, {}, {}, {}},
      {2, 6, {"O16+"}, C::any, {5, 7, 8, 10, 12, 14}, {}, {}, {}},
      {2, 6, {"O14-"}, C::any, {5, 6, 8, 10, 12, 14}, {}, {}, {}},
      // t(S) = 5
      {3, 5, {"L9"}, C::not_two, {5, 6, 7, 8, 9}, {k(9), k(8)}, {}, {}},
      {3, 5, {"L10"}, C::not_two, {6, 7, 8, 9, 10}, {k(10), k(9)}, {}, {}},
      {3, 5, {"L11"}, C::only_two, {7, 8, 9, 10, 11}, {lit(23 * 89), lit(11)}, {}, {}},
      {3, 5, {"U9"}, C::any, {3, 8, 10, 14, 18}, {k(18), k(8)}, {}, {}},
      {3, 5, {"U10"}, C::any, {3, 5, 8, 14, 18}, {k(5), k(18)}, {}, {}},
      {3, 5, {"S10", "O11"}, C::not_two, {3, 5, 6, 8, 10}, {k(5), k(10)}, {}, {}},
      {3, 5, {"S12", "O13"}, C::any, {3, 5, 8, 10, 12}, {k(12)}, {}, {}},
      {3, 5, {"O12-"}, C::any, {3, 5, 8, 10, 12}, {k(12), k(5), k(10)}, {}, {}},
      {3, 5, {"O14-"}, C::only_two, {5, 8, 10, 12, 14}, {lit(43), lit(13)}, {}, {}},
      // t(S) = 4, S not L3
      {4, 4, {"L7"}, C::not_two, {}, {k(7), k(6)}, {"r7", "r6", "r5", "r4"}, {}},
      {4, 4, {"L8"}, C::not_two, {}, {k(8), k(7)}, {"r7", "r6", "r5"}, {"r8", "r4"}},
      {4, 4, {"L9"}, C::only_two, {}, {lit(73), lit(17)}, {}, {}},
      {4, 4, {"L10"}, C::only_two, {}, {lit(73), lit(11)}, {}, {}},
      {4, 4, {"U7"}, C::any, {}, {k(14), k(3)}, {"r14", "r3", "r10", "r4"}, {}},
      {4, 4, {"U8"}, C::any, {}, {k(8), k(14)}, {"r14", "r3", "r10"}, {"r8", "r4"}},
      {4, 4, {"S8", "O9"}, C::not_two, {}, {k(8)}, {"r8", "r6", "r3", "r4"}, {}},
      {4, 4, {"S10"}, C::only_two, {}, {lit(31), lit(11)}, {}, {}},
      {4, 4, {"O10+"}, C::only_two, {}, {lit(31), lit(17)}, {}, {}},
      {4, 4, {"O10+"}, C::not_two, {}, {k(8), k(5)}, {"r5", "r8", "r3"}, {"r6", "r4"}},
      {4, 4, {"O12+"}, C::any, {}, {k(5), k(10)}, {"r10", "r5", "r8"}, {"r3", "r6"}},
      {4, 4, {"O8-"}, C::not_two, {}, {k(8), k(6), k(3)}, {"r8", "r6", "r3"}, {"r4", "v"}},
      {4, 4, {"O10-"}, C::not_two, {}, {k(8), k(10)}, {"r10", "r8", "r6"}, {"r3", "r4"}},
  };
}

std::string normalize(std::string_view series) {
  std::string s(series);
  if (s.size() >= 3 && s[0] == 'L' && (s.back() == '+' || s.back() == '-')) {
    if (s.back() == '-') s[0] = 'U';
    s.pop_back();
  }
  return s;
}

bool applies(UCondition c, const Integer& u) {
  switch (c) {
    case C::any: return true;
    case C::not_two: return u != 2;
    case C::only_two: return u == 2;
  }
  return false;
}

template <class T>
std::string join(const std::vector<T>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "," : "") << items[i];
  return os.str();
}

}  // namespace

std::string KEntry::to_string() const {
  return symbolic() ? "k_" + std::to_string(index) + "(u)" : literal.get_str();
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

CandidateSData candidate_table(std::string_view series, const Integer& u) {
  const std::string tag = normalize(series);
  const TableRow* generic = nullptr;
  const TableRow* special = nullptr;
  bool known = false;
  for (const auto& row : table_rows()) {
    bool named = false;
    for (const auto& s : row.series) named = named || s == tag;
    if (!named) continue;
    known = true;
    if (!applies(row.condition, u)) continue;
    if (row.condition == C::only_two) {
      if (!special) special = &row;
    } else if (!generic) {
      generic = &row;
    }
  }
  if (!known) throw std::invalid_argument("unknown series '" + std::string(series) + "' in Tables 2-4");
  const TableRow* row = special ? special : generic;
  if (!row) throw std::domain_error("no table row for " + tag + " at u=" + u.get_str());
  if (u < 2 || !SignedPrimePower::from_integer(u)) throw std::domain_error(u.get_str() + " is not a prime power");

  CandidateSData out;
  out.series = tag;
  out.u = u;
  out.table = row->table;
  out.t = row->t;
  out.I = row->I;
  out.K = row->K;
  for (const auto& e : row->K) out.K_values.push_back(e.evaluate(u));
  out.theta = row->theta;
  const auto v = SignedPrimePower::from_integer(u)->base;
  for (const auto& tp : row->theta_prime) out.theta_prime.push_back(tp == "v" ? "v=" + std::to_string(v) : tp);
  return out;
}

std::vector<std::string> table_series(int table) {
  std::vector<std::string> out;
  for (const auto& row : table_rows()) {
    if (row.table != table) continue;
    for (const auto& s : row.series) {
      bool seen = false;
      for (const auto& o : out) seen = seen || o == s;
      if (!seen) out.push_back(s);
    }
  }
  return out;
}

std::string table_snapshot_id() {
  std::ostringstream os;
  for (const auto& row : table_rows()) {
    std::vector<std::string> ks;
    for (const auto& e : row.K) ks.push_back(e.to_string());
    os << row.table << '|' << row.t << '|' << join(row.series) << '|' << static_cast<int>(row.condition) << '|'
       << join(row.I) << '|' << join(ks) << '|' << join(row.theta) << '|' << join(row.theta_prime) << '\n';
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("tables-v1:") + buf;
}

}  // namespace clspec
