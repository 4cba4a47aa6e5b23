#include "invcat/semigroup.hpp"

#include <string>

namespace invcat {

int InverseSemigroupTable::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (elements[static_cast<std::size_t>(i)] == id) return i;
  return -1;
}

bool natural_leq(const InverseSemigroupTable& s, int a, int b) {
  return s.product(b, s.product(s.pinv(a), a)) == a;
}

ValidationReport validate_semigroup(const InverseSemigroupTable& s, Exec exec) {
  (void)exec;  // the table is dense; one pass is already cache-bound
  ValidationReport rep;
  const int n = s.size();
  if (static_cast<int>(s.inv.size()) != n) throw InputError("inv is not total on elements");
  for (int i = 0; i < n; ++i) {
    if (s.pinv(i) < 0 || s.pinv(i) >= n) throw InputError("inv out of range");
    for (int j = 0; j < n; ++j)
      if (s.product(i, j) < 0 || s.product(i, j) >= n)
        throw InputError("mul is not total: " + s.elements[static_cast<std::size_t>(i)] + " " +
                         s.elements[static_cast<std::size_t>(j)]);
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.product(a, s.product(b, c)) != s.product(s.product(a, b), c)) {
          rep.add("sg-associativity", "a=" + s.elements[static_cast<std::size_t>(a)] +
                                          " b=" + s.elements[static_cast<std::size_t>(b)] +
                                          " c=" + s.elements[static_cast<std::size_t>(c)]);
        }

  for (int a = 0; a < n; ++a) {
    int ai = s.pinv(a);
    if (s.product(s.product(a, ai), a) != a || s.product(s.product(ai, a), ai) != ai)
      rep.add("sg-pseudoinverse", "a=" + s.elements[static_cast<std::size_t>(a)]);
  }

  for (int a = 0; a < n; ++a) {
    if (!s.idempotent(a)) continue;
    for (int b = 0; b < n; ++b)
      if (s.idempotent(b) && s.product(a, b) != s.product(b, a))
        rep.add("sg-idempotents-commute", "e=" + s.elements[static_cast<std::size_t>(a)] +
                                              " f=" + s.elements[static_cast<std::size_t>(b)]);
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && natural_leq(s, a, b) && natural_leq(s, b, a))
        rep.add("sg-order-antisymmetry", "a=" + s.elements[static_cast<std::size_t>(a)] +
                                             " b=" + s.elements[static_cast<std::size_t>(b)]);

  rep.sort_canonical();
  return rep;
}

}  // namespace invcat
