#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "invcat/fincat.hpp"
#include "invcat/ogroupoid.hpp"
#include "invcat/restriction.hpp"
#include "invcat/semigroup.hpp"

namespace invcat {

enum class Kind { category, restriction, inverse, ordered_groupoid, semigroup, functor };

const char* kind_name(Kind k);

// One parsed structure file: line-oriented records, `#` comments, ids
// declared before use. Which sections must be present depends on the kind
// tag; see the format notes in the README.
struct Structure {
  Kind kind = Kind::category;
  bool semicategory = false;

  // category | restriction | inverse | ordered-groupoid
  CatPtr cat;
  std::vector<int> rbar;                    // restriction, inverse
  std::vector<int> inv;                     // inverse (optional), ordered-groupoid (ginv)
  std::vector<std::pair<int, int>> order;   // ordered-groupoid
  std::vector<std::vector<int>> blocks;     // optional stored partition
  std::vector<int> tops;                    // parallel to blocks; -1 = none

  // semigroup
  std::optional<InverseSemigroupTable> semigroup;

  // functor
  std::shared_ptr<Structure> source, target;
  std::vector<std::pair<Id, Id>> obj_map_ids, arr_map_ids;
};

Structure parse_structure(std::istream& in);
void serialize_structure(const Structure& s, std::ostream& out);

// Typed views of a parsed file.
RestrictionData restriction_of(const Structure& s);  // kinds restriction and inverse
OrderedGroupoid groupoid_of(const Structure& s);     // kind ordered-groupoid
FunctorData functor_of(const Structure& s);          // kind functor

// Structures for serialization.
Structure make_category_structure(CatPtr cat, bool semicategory);
Structure make_restriction_structure(const RestrictionData& r, bool semicategory);
Structure make_inverse_structure(const InverseCert& c, bool semicategory);
Structure make_groupoid_structure(const OrderedGroupoid& g, const SemilatticePartition* p,
                                  bool semicategory);
Structure make_semigroup_structure(const InverseSemigroupTable& t);

}  // namespace invcat
