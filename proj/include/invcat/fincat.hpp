#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invcat/report.hpp"

namespace invcat {

using Id = std::string;

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

// A finite category as an explicit table: objects, arrows with endpoints, a
// partial composition table and (optionally partial) identity assignment.
// Arrows and objects are addressed by dense indices in sorted-id order, so
// every iteration over a FinCategory is reproducible. Instances are immutable
// after construction and safe to share across threads.
class FinCategory {
 public:
  struct Arrow {
    Id id;
    int dom = -1;
    int cod = -1;
  };

  int object_count() const noexcept { return static_cast<int>(objects_.size()); }
  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }

  const Id& object_id(int o) const { return objects_[static_cast<std::size_t>(o)]; }
  const Id& arrow_id(int a) const { return arrows_[static_cast<std::size_t>(a)].id; }
  const std::vector<Id>& object_ids() const noexcept { return objects_; }

  int dom(int a) const { return arrows_[static_cast<std::size_t>(a)].dom; }
  int cod(int a) const { return arrows_[static_cast<std::size_t>(a)].cod; }

  // -1 when the id is unknown.
  int object_index(std::string_view id) const;
  int arrow_index(std::string_view id) const;

  // comp(g, f) = "f first, then g"; -1 when undefined.
  int comp(int g, int f) const {
    return comp_[static_cast<std::size_t>(g) * static_cast<std::size_t>(arrows_.size()) +
                 static_cast<std::size_t>(f)];
  }
  bool composable(int g, int f) const { return cod(f) == dom(g); }

  // Identity arrow at an object; -1 when none is designated (semicategory).
  int ident(int o) const { return ident_[static_cast<std::size_t>(o)]; }
  bool has_all_identities() const noexcept;

  // Arrows A -> B in index (= sorted id) order.
  std::vector<int> hom(int A, int B) const;

  // Bulk constructor for generated structures: ids must arrive sorted and
  // unique, endpoints and tables are indices, comp is dense n*n with -1 for
  // undefined. The line-oriented builder below is for parsed input.
  static CatPtr from_tables(std::vector<Id> objects, std::vector<Arrow> arrows,
                            std::vector<int> comp, std::vector<int> ident);

 private:
  friend class FinCategoryBuilder;
  std::vector<Id> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> comp_;   // arrow_count^2, row-major [g][f]
  std::vector<int> ident_;  // per object
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

// Accumulates declarations by id, then build() sorts, indexes and freezes.
// Duplicate or dangling ids throw InputError.
class FinCategoryBuilder {
 public:
  void add_object(Id id);
  void add_arrow(Id id, const Id& dom, const Id& cod);
  void set_comp(const Id& g, const Id& f, const Id& gf);
  void set_ident(const Id& obj, const Id& arrow);
  CatPtr build();

 private:
  struct RawArrow {
    Id id, dom, cod;
  };
  std::vector<Id> objects_;
  std::vector<RawArrow> arrows_;
  std::vector<std::array<Id, 3>> comps_;
  std::vector<std::pair<Id, Id>> idents_;
};

// An explicit functor: total object and arrow maps between two tables.
struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<int> obj_map;  // source object index -> target object index
  std::vector<int> arr_map;  // source arrow index -> target arrow index

  friend bool operator==(const FunctorData& a, const FunctorData& b) {
    return a.obj_map == b.obj_map && a.arr_map == b.arr_map;
  }
};

FunctorData identity_functor(const CatPtr& c);

// g_then_f? No: composes source --f--> mid --g--> target.
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);

// Reports every violated category law (composition defined exactly on
// composable pairs with matching endpoints, associativity over all triples,
// identity laws) with witnessing arrow ids. When require_identities is false,
// objects without a designated identity are tolerated (semicategory mode) and
// identity laws are only checked where identities exist.
ValidationReport validate_category(const FinCategory& c, Exec exec = Exec::parallel,
                                   bool require_identities = true);

// Reports every violated functor law (endpoint compatibility, identity
// preservation, composition preservation) with witnesses.
ValidationReport validate_functor(const FunctorData& f, Exec exec = Exec::parallel,
                                  bool require_identities = true);

// Arrows A -> B addressed by object id, in sorted-id order.
// Throws InputError on an unknown object id.
std::vector<Id> hom_set(const FinCategory& c, const Id& A, const Id& B);

}  // namespace invcat
