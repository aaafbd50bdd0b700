#ifndef CLSPEC_GROUPS_HPP
#define CLSPEC_GROUPS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "clspec/arith.hpp"

namespace clspec {

enum class Family { linear, unitary, symplectic, odd_orthogonal, plus_orthogonal, minus_orthogonal };

class DescriptorError : public std::invalid_argument {
public:
  explicit DescriptorError(const std::string& what) : std::invalid_argument(what) {}
};

/// A simple classical group. `n` is the index in L_n, U_n, S_2n, O_2n+1, O_2n^±.
struct GroupDescriptor {
  Family family = Family::linear;
  unsigned n = 2;
  SignedPrimePower field;

  Integer q() const { return field.magnitude(); }
  std::uint64_t p() const { return field.base; }
  /// +1 or -1; unitary and minus-orthogonal groups are the twisted ones.
  int epsilon() const;
  /// Untwisted Lie rank: n - 1 for linear and unitary groups, n otherwise.
  unsigned rank() const;
  /// Series token as used on the command line, e.g. "L8+", "O10-", "S10".
  std::string series() const;
  /// e.g. "L8+(9)".
  std::string name() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor make_group(Family family, unsigned n, std::uint64_t q);

/// Parses `L8+ q=9`, `O10- q=5`, `U8 u=7`, `S10 u=2`, `O9 q=3`.
/// L8- and U8 name the same group. Errors name the offending token.
GroupDescriptor parse_descriptor(std::string_view text);

/// Order of the simple group, factored from its cyclotomic pieces.
FactoredInteger group_order(const GroupDescriptor& g);
Integer group_order_value(const GroupDescriptor& g);

/// L8^±, O10^± and O12^+: the groups with a Table-1 row.
bool in_table1_scope(const GroupDescriptor& g);

struct ZYInvariants {
  unsigned z = 0;
  unsigned y = 0;
  Integer m_z;
  Integer m_y;
  std::string branch;  // the row condition that fired
};

/// Throws std::domain_error for groups outside Table 1 or for even q.
ZYInvariants zy_invariants(const GroupDescriptor& g);

enum class ZY { z, y };
/// k_x(εq) for x in {z, y}.
Integer k_x_of_L(const GroupDescriptor& g, ZY which);

/// exp_r(L) for a prime r >= 7 dividing |L|.
Integer exp_r(const GroupDescriptor& g, const Integer& r);

/// Φ5(εq) · Φ1(q²)Φ2(q²)Φ3(q²)Φ4(q²) / 2 for L = O10^ε(q).
FactoredInteger exp_pprime_O10(const GroupDescriptor& g);

/// q^l with l the untwisted rank.
Integer meo_upper_bound(const GroupDescriptor& g);

}  // namespace clspec

#endif  // CLSPEC_GROUPS_HPP
