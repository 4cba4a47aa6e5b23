#include <doctest.h>

#include "invcat/esn.hpp"
#include "invcat/generators.hpp"
#include "test_helpers.hpp"

using namespace invcat;
using namespace testutil;

namespace {

// phi(empty) = empty, phi(s) = id_{1} otherwise. The image of an ordered
// endofunctor of the groupoid image that moves the top down; oplax with
// strict inequalities.
FunctorData top_collapse(const InverseCert& i2) {
  FunctorData f;
  f.source = i2.rd.base;
  f.target = i2.rd.base;
  f.obj_map = {0};
  f.arr_map.assign(7, arr(i2.cat(), kId1));
  f.arr_map[static_cast<std::size_t>(arr(i2.cat(), kEmpty))] = arr(i2.cat(), kEmpty);
  return f;
}

// The pre-restriction endomap f |-> comp(f, id_{1}).
FunctorData pre_restriction(const InverseCert& i2) {
  FunctorData f;
  f.source = i2.rd.base;
  f.target = i2.rd.base;
  f.obj_map = {0};
  f.arr_map.resize(7);
  int e = arr(i2.cat(), kId1);
  for (int a = 0; a < 7; ++a)
    f.arr_map[static_cast<std::size_t>(a)] = i2.cat().comp(a, e);
  return f;
}

}  // namespace

TEST_CASE("strict functors are oplax with equality everywhere") {
  InverseCert i1 = symmetric_inverse_monoid(1);
  InverseCert i2 = symmetric_inverse_monoid(2);
  for (const FunctorData& f : enumerate_functors_one_object(i1, i2)) {
    OplaxCheckResult r = check_oplax_functor(f, i1, i2);
    CHECK(r.ok());
    CHECK(r.strict_composites.empty());
    CHECK(r.strict_identities.empty());
  }
  for (const FunctorData& f : enumerate_functors_one_object(i2, i2)) {
    OplaxCheckResult r = check_oplax_functor(f, i2, i2);
    CHECK(r.ok());
    CHECK(r.strict_composites.empty());
    CHECK(r.strict_identities.empty());
  }
}

TEST_CASE("the top collapse is strictly oplax but not a functor") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  FunctorData phi = top_collapse(i2);
  CHECK_FALSE(validate_functor(phi).ok());

  OplaxCheckResult r = check_oplax_functor(phi, i2, i2);
  CHECK(r.ok());
  CHECK(r.strict_composites.size() == 8);  // pairs whose composite collapses to empty
  REQUIRE(r.strict_identities.size() == 1);
  CHECK(r.strict_identities[0] == 0);
}

TEST_CASE("sending the identity to swap violates the identity inequality") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  FunctorData f = identity_functor(i2.rd.base);
  f.arr_map[static_cast<std::size_t>(arr(i2.cat(), kId12))] = arr(i2.cat(), kSwap);
  OplaxCheckResult r = check_oplax_functor(f, i2, i2);
  CHECK_FALSE(r.ok());
  CHECK(r.report.mentions("oplax-identity"));  // swap is not below the identity
}

TEST_CASE("the pre-restriction endomap is lax, not oplax") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  const FinCategory& c = i2.cat();
  FunctorData f = pre_restriction(i2);

  OplaxCheckResult r = check_oplax_functor(f, i2, i2);
  CHECK_FALSE(r.ok());
  CHECK(r.report.mentions("oplax-composite"));
  // the canonical witness: F(swap o swap) = id_{1} is not below F(swap)F(swap) = empty
  bool swap_pair = false;
  for (const Violation& v : r.report.violations)
    if (v.detail == std::string("g=") + kSwap + " f=" + kSwap) swap_pair = true;
  CHECK(swap_pair);

  // it satisfies the reverse inequality on every composable pair
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int a = 0; a < c.arrow_count(); ++a) {
      int lhs = c.comp(f.arr_map[static_cast<std::size_t>(g)],
                       f.arr_map[static_cast<std::size_t>(a)]);
      int rhs = f.arr_map[static_cast<std::size_t>(c.comp(g, a))];
      CHECK(leq(i2.rd, lhs, rhs));
    }
}

TEST_CASE("an oplax functor induces an ordered functor of the images") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  GImage g2 = g_of_inverse_category(i2);
  FunctorData phi = top_collapse(i2);

  OplaxToOrdered r = oplax_to_ordered(phi, i2, g2, i2, g2);
  REQUIRE(r.ok());
  CHECK(validate_functor(r.groupoid_functor).ok());
  CHECK(check_ordered_functor(r.groupoid_functor, g2.groupoid, g2.groupoid).ok());
  // not locally inductive: the meet id_{1} /\ id_{2} = empty is not preserved
  CHECK_FALSE(check_locally_inductive_functor(r.groupoid_functor, g2.groupoid, g2.partition,
                                              g2.groupoid, g2.partition)
                  .ok());
  CHECK_FALSE(preserves_tops(r.groupoid_functor, g2.partition, g2.partition));
}

TEST_CASE("strict functors pass through both directions unchanged") {
  InverseCert i1 = symmetric_inverse_monoid(1);
  InverseCert i2 = symmetric_inverse_monoid(2);
  GImage g1 = g_of_inverse_category(i1);
  GImage g2 = g_of_inverse_category(i2);
  InverseCert ig1 = i_of_groupoid(g1.groupoid, g1.partition);
  InverseCert ig2 = i_of_groupoid(g2.groupoid, g2.partition);

  for (const FunctorData& f : enumerate_functors_one_object(i1, i2)) {
    OplaxToOrdered dir1 = oplax_to_ordered(f, i1, g1, i2, g2);
    REQUIRE(dir1.ok());
    CHECK(dir1.groupoid_functor == g_of_functor(f, i1, g1, i2, g2));

    OrderedToOplax dir2 = ordered_to_oplax(dir1.groupoid_functor, g1.groupoid, g1.partition, ig1,
                                           g2.groupoid, g2.partition, ig2);
    REQUIRE(dir2.ok());
    CHECK(dir2.identities_strict);
    CHECK(dir2.oplax.strict_composites.empty());
    // arrow ids survive every construction, so the map must be f again
    CHECK(dir2.category_map.arr_map == f.arr_map);
  }
}

TEST_CASE("an ordered functor that moves tops down gives a strictly oplax image") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  GImage g2 = g_of_inverse_category(i2);
  InverseCert ig2 = i_of_groupoid(g2.groupoid, g2.partition);
  const OrderedGroupoid& g = g2.groupoid;
  const FinCategory& c = g.cat();

  FunctorData f;  // the groupoid-level top collapse
  f.source = g.base();
  f.target = g.base();
  f.obj_map.assign(static_cast<std::size_t>(c.object_count()), obj(c, kId1));
  f.obj_map[static_cast<std::size_t>(obj(c, kEmpty))] = obj(c, kEmpty);
  f.arr_map.assign(static_cast<std::size_t>(c.arrow_count()), arr(c, kId1));
  f.arr_map[static_cast<std::size_t>(arr(c, kEmpty))] = arr(c, kEmpty);
  REQUIRE(validate_functor(f).ok());
  REQUIRE(check_ordered_functor(f, g, g).ok());

  OrderedToOplax dir2 = ordered_to_oplax(f, g, g2.partition, ig2, g, g2.partition, ig2);
  REQUIRE(dir2.ok());
  CHECK_FALSE(dir2.identities_strict);           // the top moved strictly down
  CHECK_FALSE(dir2.oplax.strict_composites.empty());

  // round trip back to an ordered functor
  GImage gig2 = g_of_inverse_category(ig2);
  OplaxToOrdered dir1 = oplax_to_ordered(dir2.category_map, ig2, gig2, ig2, gig2);
  CHECK(dir1.ok());
  // arrow ids are stable across the trip, so the arrow maps agree verbatim
  CHECK(dir1.groupoid_functor.arr_map == f.arr_map);
}

TEST_CASE("naturality squares for the double image on strict functors") {
  InverseCert i1 = symmetric_inverse_monoid(1);
  InverseCert i2 = symmetric_inverse_monoid(2);
  GImage g1 = g_of_inverse_category(i1);
  GImage g2 = g_of_inverse_category(i2);
  InverseCert ig1 = i_of_groupoid(g1.groupoid, g1.partition);
  InverseCert ig2 = i_of_groupoid(g2.groupoid, g2.partition);
  GImage gig1 = g_of_inverse_category(ig1);
  GImage gig2 = g_of_inverse_category(ig2);

  IsoWitness w1 = roundtrip_groupoid(g1.groupoid, g1.partition);
  IsoWitness w2 = roundtrip_groupoid(g2.groupoid, g2.partition);

  for (const FunctorData& f : enumerate_functors_one_object(i1, i2)) {
    FunctorData gf = g_of_functor(f, i1, g1, i2, g2);
    FunctorData igf = i_of_functor(gf, g1.partition, ig1, g2.partition, ig2);
    FunctorData gigf = g_of_functor(igf, ig1, gig1, ig2, gig2);
    // the square G(I(G F)) o unit = unit o G(F), checked entrywise
    for (std::size_t o = 0; o < gf.obj_map.size(); ++o) {
      int via_unit = w2.forward.obj_map[static_cast<std::size_t>(gf.obj_map[o])];
      int via_image = gigf.obj_map[static_cast<std::size_t>(w1.forward.obj_map[o])];
      CHECK(via_unit == via_image);
    }
    CHECK(gigf.arr_map == gf.arr_map);  // arrow indices are stable
  }
}
