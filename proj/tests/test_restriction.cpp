#include <doctest.h>

#include "invcat/generators.hpp"
#include "invcat/restriction.hpp"
#include "test_helpers.hpp"

using namespace invcat;
using namespace testutil;

namespace {

// rbar corrupted at one arrow: swap-bar redirected to the empty map.
RestrictionData corrupt_swap_rbar(const InverseCert& i2) {
  RestrictionData rd = i2.rd;
  rd.rbar[static_cast<std::size_t>(arr(i2.cat(), kSwap))] = arr(i2.cat(), kEmpty);
  return rd;
}

}  // namespace

TEST_CASE("restriction axioms hold on generated structures") {
  CHECK(check_restriction_axioms(symmetric_inverse_monoid(2).rd).ok());
  CHECK(check_restriction_axioms(partial_function_category({{1}, {1, 2}})).ok());
}

TEST_CASE("redefining rbar(swap) to the empty map breaks R.1") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  ValidationReport rep = check_restriction_axioms(corrupt_swap_rbar(i2));
  CHECK_FALSE(rep.ok());
  CHECK(rep.mentions("R.1"));  // swap * empty = empty != swap
}

TEST_CASE("rbar with wrong endpoints is a structural report before the axioms") {
  InverseCert pbc = partial_bijection_category({{1}, {1, 2}});
  RestrictionData rd = pbc.rd;
  // point some arrow's rbar at an endo-arrow of the wrong object
  int cross = arr(pbc.cat(), "X0.X1:1-1");
  rd.rbar[static_cast<std::size_t>(cross)] = arr(pbc.cat(), "X1.X1:1-1+2-2");
  ValidationReport rep = check_restriction_axioms(rd);
  CHECK_FALSE(rep.ok());
  for (const Violation& v : rep.violations) CHECK(v.law == "rbar-endpoints");
}

TEST_CASE("derived identities (i)-(vii) hold exhaustively") {
  CHECK(check_derived_identities(symmetric_inverse_monoid(2).rd).ok());
  CHECK(check_derived_identities(partial_function_category({{1}, {1, 2}})).ok());
}

TEST_CASE("rbar is idempotent under rbar on every arrow") {
  InverseCert i3 = symmetric_inverse_monoid(3);
  for (int f = 0; f < i3.cat().arrow_count(); ++f)
    CHECK(i3.rd.rb(i3.rd.rb(f)) == i3.rd.rb(f));
}

TEST_CASE("natural order on I_2") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  const FinCategory& c = i2.cat();
  CHECK(leq(i2.rd, arr(c, kSwap), arr(c, kSwap)));          // reflexive
  CHECK(leq(i2.rd, arr(c, kMap12), arr(c, kSwap)));         // swap restricted to {1}
  CHECK_FALSE(leq(i2.rd, arr(c, kSwap), arr(c, kMap12)));
  CHECK(natural_order_pairs(i2.rd).size() == 17);           // sum of 2^|dom|
}

TEST_CASE("order pair counts match the closed form") {
  // each map sits above one restriction per subset of its domain
  auto closed_form = [](int n) {
    auto choose = [](int a, int b) {
      long r = 1;
      for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
      return r;
    };
    long total = 0, fact = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) fact *= k;
      total += choose(n, k) * choose(n, k) * fact * (1L << k);
    }
    return total;
  };
  for (int n = 1; n <= 4; ++n)
    CHECK(static_cast<long>(natural_order_pairs(symmetric_inverse_monoid(n).rd).size()) ==
          closed_form(n));
}

TEST_CASE("leq is false across different hom-sets") {
  InverseCert pbc = partial_bijection_category({{1}, {1, 2}});
  const FinCategory& c = pbc.cat();
  CHECK_FALSE(leq(pbc.rd, arr(c, "X0.X1:0"), arr(c, "X1.X0:0")));
}

TEST_CASE("leq is a partial order and composition respects it") {
  for (int n = 1; n <= 3; ++n) {
    InverseCert x = symmetric_inverse_monoid(n);
    CHECK(check_leq_partial_order(x.rd).ok());
    CHECK(check_order_compatibility(x.rd).ok());
  }
  RestrictionData pf = partial_function_category({{1, 2}});
  CHECK(check_leq_partial_order(pf).ok());
  CHECK(check_order_compatibility(pf).ok());
}

TEST_CASE("totality") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  const FinCategory& c = i2.cat();
  CHECK(is_total(i2.rd, arr(c, kId12)));
  CHECK(is_total(i2.rd, arr(c, kSwap)));
  CHECK_FALSE(is_total(i2.rd, arr(c, kEmpty)));
  CHECK_FALSE(is_total(i2.rd, arr(c, kMap12)));
  CHECK(check_total_maps_subcategory(i2.rd).ok());
  CHECK(check_total_maps_subcategory(partial_function_category({{1}, {1, 2}})).ok());
}

TEST_CASE("restricted inverses in I_2") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  const FinCategory& c = i2.cat();
  auto inv12 = restricted_inverse_of(i2.rd, arr(c, kMap12));
  REQUIRE(inv12.has_value());
  CHECK(c.arrow_id(*inv12) == kMap21);

  // restriction idempotents are their own restricted inverses
  for (int f = 0; f < c.arrow_count(); ++f) {
    auto e = restricted_inverse_of(i2.rd, i2.rd.rb(f));
    REQUIRE(e.has_value());
    CHECK(*e == i2.rd.rb(f));
  }
}

TEST_CASE("the constant map has no restricted inverse") {
  RestrictionData pf = partial_function_category({{1}, {1, 2}});
  const FinCategory& c = pf.cat();
  CHECK_FALSE(restricted_inverse_of(pf, arr(c, "X1.X0:1-1+2-1")).has_value());
}

TEST_CASE("certification of generated inverse categories") {
  for (int n = 1; n <= 4; ++n) CHECK(certify_inverse_category(symmetric_inverse_monoid(n).rd).ok());
  CertifyResult cr = certify_inverse_category(partial_function_category({{1}, {1, 2}}));
  CHECK_FALSE(cr.ok());
  // exactly the non-injective maps: the collapse onto {1} and the two constants
  REQUIRE(cr.report.size() == 3);
  CHECK(cr.report.violations[0].detail == "f=X1.X0:1-1+2-1");
  CHECK(cr.report.violations[1].detail == "f=X1.X1:1-1+2-1");
  CHECK(cr.report.violations[2].detail == "f=X1.X1:1-2+2-2");
}

TEST_CASE("a groupoid is an inverse category with identity restrictions") {
  // two-element group as a one-object table
  FinCategoryBuilder b;
  b.add_object("G");
  b.add_arrow("e", "G", "G");
  b.add_arrow("s", "G", "G");
  b.set_comp("e", "e", "e");
  b.set_comp("e", "s", "s");
  b.set_comp("s", "e", "s");
  b.set_comp("s", "s", "e");
  b.set_ident("G", "e");
  CatPtr cat = b.build();
  RestrictionData rd{cat, {cat->arrow_index("e"), cat->arrow_index("e")}};
  REQUIRE(validate_category(*cat).ok());
  REQUIRE(check_restriction_axioms(rd).ok());
  CertifyResult cr = certify_inverse_category(rd);
  REQUIRE(cr.ok());
  CHECK(cr.cert->iv(cat->arrow_index("s")) == cat->arrow_index("s"));
  for (int f = 0; f < 2; ++f) CHECK(is_total(rd, f));
}

TEST_CASE("stored rbar inconsistent with the inverses is rejected") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  RestrictionData rd = corrupt_swap_rbar(i2);
  CHECK_FALSE(check_restriction_axioms(rd).ok());
  // past the failed axioms, the corrupted rbar even breaks inverse uniqueness
  CHECK_THROWS_AS((void)certify_inverse_category(rd), StructuralError);
}

TEST_CASE("idempotent sets") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  MeetSemilatticeView e = idempotent_set(i2.rd, 0);
  CHECK(e.elements.size() == 4);  // powerset of a 2-set
  CHECK(i2.cat().arrow_id(e.top) == kId12);
  int bottom = arr(i2.cat(), kEmpty);
  for (int x : e.elements) CHECK(e.meet_of(bottom, x) == bottom);

  // meet = intersection of partial identities
  CHECK(e.meet_of(arr(i2.cat(), kId1), arr(i2.cat(), kId2)) == bottom);

  // groupoid: E_A = {1_A}
  FinCategoryBuilder b;
  b.add_object("G");
  b.add_arrow("e", "G", "G");
  b.set_comp("e", "e", "e");
  b.set_ident("G", "e");
  CatPtr cat = b.build();
  RestrictionData rd{cat, {0}};
  MeetSemilatticeView trivial = idempotent_set(rd, 0);
  CHECK(trivial.elements == std::vector<int>{0});
  CHECK(trivial.top == 0);
}

TEST_CASE("idempotent sets of distinct objects are disjoint") {
  InverseCert pbc = partial_bijection_category({{1}, {1, 2}});
  MeetSemilatticeView e0 = idempotent_set(pbc.rd, 0);
  MeetSemilatticeView e1 = idempotent_set(pbc.rd, 1);
  for (int a : e0.elements)
    for (int b : e1.elements) CHECK(a != b);
  CHECK(e0.elements.size() == 2);
  CHECK(e1.elements.size() == 4);
}

TEST_CASE("order implies order of restrictions") {
  InverseCert i3 = symmetric_inverse_monoid(3);
  for (const auto& [f, g] : natural_order_pairs(i3.rd))
    CHECK(leq(i3.rd, i3.rd.rb(f), i3.rd.rb(g)));
}

TEST_CASE("inverse laws on certified structures") {
  for (int n = 1; n <= 3; ++n) {
    InverseCert x = symmetric_inverse_monoid(n);
    CHECK(check_inverse_laws(x).ok());
  }
  CHECK(check_inverse_laws(partial_bijection_category({{1}, {1, 2}})).ok());
}

TEST_CASE("functors between inverse categories preserve restrictions") {
  InverseCert i1 = symmetric_inverse_monoid(1);
  InverseCert i2 = symmetric_inverse_monoid(2);
  for (const FunctorData& f : enumerate_functors_one_object(i1, i2))
    CHECK(check_restriction_functor(f, i1.rd, i2.rd).ok());
  for (const FunctorData& f : enumerate_functors_one_object(i2, i2))
    CHECK(check_restriction_functor(f, i2.rd, i2.rd).ok());
}
