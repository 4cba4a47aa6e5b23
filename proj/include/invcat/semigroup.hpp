#pragma once

#include <string_view>
#include <vector>

#include "invcat/report.hpp"

namespace invcat {

using Id = std::string;

// An inverse semigroup as a total multiplication table with pseudoinverses.
// mul(s, t) follows the composition convention: t first, then s.
struct InverseSemigroupTable {
  std::vector<Id> elements;  // sorted
  std::vector<int> mul;      // dense n^2, row-major [s][t]
  std::vector<int> inv;      // s -> s•

  int size() const noexcept { return static_cast<int>(elements.size()); }
  int product(int s, int t) const {
    return mul[static_cast<std::size_t>(s) * static_cast<std::size_t>(elements.size()) +
               static_cast<std::size_t>(t)];
  }
  int pinv(int s) const { return inv[static_cast<std::size_t>(s)]; }
  int index_of(std::string_view id) const;
  bool idempotent(int s) const { return product(s, s) == s; }
};

// Associativity, the pseudoinverse equations s s• s = s and s• s s• = s•,
// commuting idempotents, and antisymmetry of the natural order.
ValidationReport validate_semigroup(const InverseSemigroupTable& s, Exec exec = Exec::parallel);

// s <= t iff s = t (s• s).
bool natural_leq(const InverseSemigroupTable& s, int a, int b);

}  // namespace invcat
