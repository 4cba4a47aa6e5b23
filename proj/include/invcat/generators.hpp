#pragma once

#include <string>
#include <vector>

#include "invcat/restriction.hpp"
#include "invcat/semigroup.hpp"

namespace invcat {

// A partial bijection between finite integer sets, kept as a sorted graph.
// These are the independent oracle for everything downstream: composition,
// converses and domain identities are computed set-theoretically here, never
// through the table machinery they are used to test.
struct PartialBijection {
  std::vector<std::pair<int, int>> graph;  // sorted by source, injective

  static PartialBijection identity(const std::vector<int>& set);
  PartialBijection converse() const;
  PartialBijection domain_identity() const;  // id on the domain of definition
  bool is_idempotent() const;

  friend PartialBijection compose(const PartialBijection& g, const PartialBijection& f);
  friend bool operator==(const PartialBijection& a, const PartialBijection& b) {
    return a.graph == b.graph;
  }
  friend bool operator<(const PartialBijection& a, const PartialBijection& b) {
    return a.graph < b.graph;
  }
};

// Canonical id, e.g. "[1>2,2>1]"; "[]" for the empty map. Stable across runs
// and modules.
std::string graph_code(const PartialBijection& p);

// All partial bijections on {1..n} as a one-object inverse category, with
// rbar(f) = identity on the domain of definition. 1 <= n <= 5.
InverseCert symmetric_inverse_monoid(int n);

// Objects X0, X1, ... (one per position; duplicate sets allowed and
// distinct); arrows are all partial bijections between each ordered pair,
// with ids "Xi.Xj[...]".
InverseCert partial_bijection_category(const std::vector<std::vector<int>>& sets);

// Same shape with all partial functions; a restriction category that is not
// inverse as soon as some hom-set contains a non-injective map.
RestrictionData partial_function_category(const std::vector<std::vector<int>>& sets);

// Smallest subset of I_n containing the seeds and closed under composition
// and converse, as a multiplication table. Seed ids are graph codes.
InverseSemigroupTable closure_subsemigroup(int n, const std::vector<std::string>& seed_ids);

// A one-object inverse category as a plain table, for the classical
// single-object constructions.
InverseSemigroupTable semigroup_of(const InverseCert& one_object);

}  // namespace invcat
