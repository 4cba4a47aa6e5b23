// The OpenMP kernels must reproduce the serial reference reports verbatim,
// on clean structures and on corrupted ones.

#include <doctest.h>

#include "invcat/esn.hpp"
#include "invcat/generators.hpp"
#include "invcat/kernels.hpp"
#include "test_helpers.hpp"

using namespace invcat;
using namespace testutil;

namespace {

void same(const ValidationReport& a, const ValidationReport& b) {
  CHECK(a.violations == b.violations);
}

RestrictionData corrupted_rd() {
  InverseCert i2 = symmetric_inverse_monoid(2);
  RestrictionData rd = i2.rd;
  rd.rbar[static_cast<std::size_t>(i2.cat().arrow_index(kSwap))] =
      i2.cat().arrow_index(kEmpty);
  return rd;
}

}  // namespace

TEST_CASE("kernels agree on category laws") {
  for (int n = 1; n <= 3; ++n) {
    InverseCert x = symmetric_inverse_monoid(n);
    same(par::category_laws(x.cat(), true), ref::category_laws(x.cat(), true));
  }
  RestrictionData pf = partial_function_category({{1}, {1, 2}});
  same(par::category_laws(pf.cat(), true), ref::category_laws(pf.cat(), true));
}

TEST_CASE("kernels agree on a corrupted composition table") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  const FinCategory& c = i2.cat();
  FinCategoryBuilder b;
  b.add_object("M");
  for (int a = 0; a < c.arrow_count(); ++a) b.add_arrow(c.arrow_id(a), "M", "M");
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int f = 0; f < c.arrow_count(); ++f) {
      bool corrupt = c.arrow_id(g) == kSwap && c.arrow_id(f) == kSwap;
      b.set_comp(c.arrow_id(g), c.arrow_id(f), corrupt ? kSwap : c.arrow_id(c.comp(g, f)));
    }
  b.set_ident("M", kId12);
  CatPtr corrupted = b.build();
  ValidationReport p = par::category_laws(*corrupted, true);
  same(p, ref::category_laws(*corrupted, true));
  CHECK_FALSE(p.ok());
}

TEST_CASE("kernels agree on restriction axioms and derived identities") {
  for (int n = 1; n <= 3; ++n) {
    RestrictionData rd = symmetric_inverse_monoid(n).rd;
    same(par::restriction_axioms(rd), ref::restriction_axioms(rd));
    same(par::derived_identities(rd), ref::derived_identities(rd));
  }
  RestrictionData bad = corrupted_rd();
  ValidationReport p = par::restriction_axioms(bad);
  same(p, ref::restriction_axioms(bad));
  CHECK_FALSE(p.ok());
  same(par::derived_identities(bad), ref::derived_identities(bad));
}

TEST_CASE("kernels agree without identity designations") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  const FinCategory& c = i2.cat();
  std::vector<FinCategory::Arrow> arrows;
  for (int a = 0; a < c.arrow_count(); ++a) arrows.push_back({c.arrow_id(a), 0, 0});
  std::vector<int> comp;
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int f = 0; f < c.arrow_count(); ++f) comp.push_back(c.comp(g, f));
  CatPtr stripped = FinCategory::from_tables({"M"}, std::move(arrows), std::move(comp), {-1});
  RestrictionData rd{stripped, i2.rd.rbar};

  same(par::category_laws(*stripped, false), ref::category_laws(*stripped, false));
  same(par::category_laws(*stripped, true), ref::category_laws(*stripped, true));
  same(par::derived_identities(rd), ref::derived_identities(rd));  // monic check skips
}

TEST_CASE("kernels agree on order computations") {
  for (int n = 1; n <= 3; ++n) {
    RestrictionData rd = symmetric_inverse_monoid(n).rd;
    CHECK(par::natural_order_pairs(rd) == ref::natural_order_pairs(rd));
    same(par::leq_partial_order(rd), ref::leq_partial_order(rd));
    same(par::order_compatibility(rd), ref::order_compatibility(rd));
  }
  RestrictionData pf = partial_function_category({{1, 2}});
  CHECK(par::natural_order_pairs(pf) == ref::natural_order_pairs(pf));
  same(par::order_compatibility(pf), ref::order_compatibility(pf));
}

TEST_CASE("kernels agree on groupoid laws and tensors") {
  for (int n = 2; n <= 3; ++n) {
    GImage img = g_of_inverse_category(symmetric_inverse_monoid(n));
    same(par::groupoid_order_laws(img.groupoid), ref::groupoid_order_laws(img.groupoid));
    same(par::tensor_associativity(img.groupoid), ref::tensor_associativity(img.groupoid));
  }

  // corrupted order: drop one pair
  GImage img = g_of_inverse_category(symmetric_inverse_monoid(2));
  auto pairs = img.groupoid.order_pairs();
  pairs.erase(pairs.begin() + 3);
  OrderedGroupoid corrupted(img.groupoid.base(), img.groupoid.ginv_table(), pairs);
  same(par::groupoid_order_laws(corrupted), ref::groupoid_order_laws(corrupted));
}

TEST_CASE("kernels agree on functor laws") {
  InverseCert i1 = symmetric_inverse_monoid(1);
  InverseCert i2 = symmetric_inverse_monoid(2);
  for (const FunctorData& f : enumerate_functors_one_object(i1, i2)) {
    same(par::functor_laws(f, true), ref::functor_laws(f, true));
  }
  // a broken one
  FunctorData f = identity_functor(i2.rd.base);
  f.arr_map[static_cast<std::size_t>(i2.cat().arrow_index(kSwap))] =
      i2.cat().arrow_index(kEmpty);
  ValidationReport p = par::functor_laws(f, true);
  same(p, ref::functor_laws(f, true));
  CHECK_FALSE(p.ok());

  GImage g2 = g_of_inverse_category(i2);
  FunctorData gid = identity_functor(g2.groupoid.base());
  same(par::ordered_functor_law(gid, g2.groupoid, g2.groupoid),
       ref::ordered_functor_law(gid, g2.groupoid, g2.groupoid));
}

TEST_CASE("public checks honor the Exec switch") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  CHECK(validate_category(i2.cat(), Exec::serial).violations ==
        validate_category(i2.cat(), Exec::parallel).violations);
  CHECK(check_restriction_axioms(i2.rd, Exec::serial).violations ==
        check_restriction_axioms(i2.rd, Exec::parallel).violations);
  GImage img = g_of_inverse_category(i2);
  CHECK(check_ordered_groupoid(img.groupoid, Exec::serial).violations ==
        check_ordered_groupoid(img.groupoid, Exec::parallel).violations);
  CHECK(check_tensor_associativity(img.groupoid, Exec::serial).violations ==
        check_tensor_associativity(img.groupoid, Exec::parallel).violations);
}
