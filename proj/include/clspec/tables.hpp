#ifndef CLSPEC_TABLES_HPP
#define CLSPEC_TABLES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "clspec/arith.hpp"

namespace clspec {

/// A K(S) entry: either k_index(u) or a literal number.
struct KEntry {
  unsigned index = 0;  // nonzero for k_index(u)
  Integer literal;

  bool symbolic() const { return index != 0; }
  Integer evaluate(const Integer& u) const { return symbolic() ? k_i(index, u) : literal; }
  std::string to_string() const;
};

enum class UCondition { any, not_two, only_two };

/// One row of Tables 2-4 as stated. Θ entries are tags such as "r8";
/// Θ' for O8- also contains "v", the defining characteristic.
struct TableRow {
  int table = 0;  // 2, 3 or 4
  unsigned t = 0;
  std::vector<std::string> series;  // e.g. {"S14", "O15"}
  UCondition condition = UCondition::any;
  std::vector<unsigned> I;  // Tables 2 and 3
  std::vector<KEntry> K;    // Tables 3 and 4
  std::vector<std::string> theta, theta_prime;
};

const std::vector<TableRow>& table_rows();

/// Row data evaluated at a given u.
struct CandidateSData {
  std::string series;
  Integer u;
  int table = 0;
  unsigned t = 0;
  std::vector<unsigned> I;
  std::vector<KEntry> K;
  std::vector<Integer> K_values;
  std::vector<std::string> theta, theta_prime;  // "v" resolved to "v=<p>"
};

/// Looks up `series` (L7, L8, U8, S10, O11, O12+, ...; L8+ and L8- are
/// accepted for L8 and U8) at u. A u = 2 row takes precedence over the
/// generic row. Throws std::invalid_argument for an unknown series and
/// std::domain_error when no row applies at this u.
CandidateSData candidate_table(std::string_view series, const Integer& u);

/// Series tags of the rows in one table, in table order.
std::vector<std::string> table_series(int table);

/// "tables-v1:<fnv64 hex>" over a canonical rendering of every row.
std::string table_snapshot_id();

}  // namespace clspec

#endif  // CLSPEC_TABLES_HPP
