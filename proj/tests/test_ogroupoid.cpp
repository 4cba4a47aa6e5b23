#include <doctest.h>

#include <algorithm>

#include "invcat/esn.hpp"
#include "invcat/generators.hpp"
#include "invcat/ogroupoid.hpp"
#include "test_helpers.hpp"

using namespace invcat;
using namespace testutil;

namespace {

// Two-element group with the discrete(-plus-reflexive) order.
OrderedGroupoid two_group_groupoid() {
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
  std::vector<int> ginv{cat->arrow_index("e"), cat->arrow_index("s")};
  return OrderedGroupoid(cat, ginv, {});
}

GImage g_of_in(int n) { return g_of_inverse_category(symmetric_inverse_monoid(n)); }

}  // namespace

TEST_CASE("a group with the discrete order is an ordered groupoid") {
  OrderedGroupoid g = two_group_groupoid();
  CHECK(check_ordered_groupoid(g).ok());
  ClassifyFlags flags = classify(g);
  CHECK(flags.ordered);
  CHECK(flags.locally_inductive);
  CHECK(flags.top_heavy);
  CHECK(flags.inductive);  // one object, one block
}

TEST_CASE("the groupoid image of I_3 passes all checks") {
  GImage img = g_of_in(3);
  CHECK(img.groupoid.cat().arrow_count() == 34);
  CHECK(check_ordered_groupoid(img.groupoid).ok());
}

TEST_CASE("object order in the image of I_2") {
  GImage img = g_of_in(2);
  const FinCategory& c = img.groupoid.cat();
  CHECK(object_order(img.groupoid, obj(c, kId1), obj(c, kId1)));
  CHECK(object_order(img.groupoid, obj(c, kId1), obj(c, kId12)));
  CHECK_FALSE(object_order(img.groupoid, obj(c, kId1), obj(c, kId2)));
  CHECK_THROWS_AS((void)object_order(img.groupoid, 0, 99), InputError);
}

TEST_CASE("removing an order pair breaks axiom (iii)") {
  GImage img = g_of_in(2);
  const FinCategory& c = img.groupoid.cat();
  std::vector<std::pair<int, int>> pairs = img.groupoid.order_pairs();
  std::pair<int, int> removed{arr(c, kMap12), arr(c, kSwap)};
  pairs.erase(std::remove(pairs.begin(), pairs.end(), removed), pairs.end());
  OrderedGroupoid corrupted(img.groupoid.base(), img.groupoid.ginv_table(), pairs);

  ValidationReport rep = check_ordered_groupoid(corrupted);
  CHECK_FALSE(rep.ok());
  CHECK(rep.mentions("og-axiom-(iii)"));  // no restriction of swap to id_{1}
}

TEST_CASE("restriction and corestriction in the image of I_2") {
  GImage img = g_of_in(2);
  const OrderedGroupoid& g = img.groupoid;
  const FinCategory& c = g.cat();

  CHECK(restrict_to(g, arr(c, kSwap), obj(c, kId1)) == arr(c, kMap12));
  CHECK(corestrict_to(g, obj(c, kId2), arr(c, kSwap)) == arr(c, kMap12));

  // restrictions of identities are identities
  for (int A = 0; A < c.object_count(); ++A)
    for (int B = 0; B < c.object_count(); ++B)
      if (g.object_leq(A, B)) CHECK(restrict_to(g, c.ident(B), A) == c.ident(A));

  // trivial cases
  for (int f = 0; f < c.arrow_count(); ++f) {
    CHECK(restrict_to(g, f, c.dom(f)) == f);
    CHECK(corestrict_to(g, c.cod(f), f) == f);
  }

  CHECK_THROWS_AS((void)restrict_to(g, arr(c, kMap12), obj(c, kId2)), InputError);
}

TEST_CASE("corestriction agrees with the inverse route") {
  GImage img = g_of_in(3);
  const OrderedGroupoid& g = img.groupoid;
  const FinCategory& c = g.cat();
  for (int f = 0; f < c.arrow_count(); ++f)
    for (int B = 0; B < c.object_count(); ++B)
      if (g.object_leq(B, c.cod(f)))
        CHECK(corestrict_to(g, B, f) == g.ginv(restrict_to(g, g.ginv(f), B)));
}

TEST_CASE("restrict is monotone in the object") {
  GImage img = g_of_in(3);
  const OrderedGroupoid& g = img.groupoid;
  const FinCategory& c = g.cat();
  for (int f = 0; f < c.arrow_count(); ++f)
    for (int A = 0; A < c.object_count(); ++A) {
      if (!g.object_leq(A, c.dom(f))) continue;
      for (int A2 = 0; A2 < c.object_count(); ++A2) {
        if (!g.object_leq(A, A2) || !g.object_leq(A2, c.dom(f))) continue;
        CHECK(g.leq(restrict_to(g, f, A), restrict_to(g, f, A2)));
      }
    }
}

TEST_CASE("tensor examples in the image of I_2") {
  GImage img = g_of_in(2);
  const OrderedGroupoid& g = img.groupoid;
  const FinCategory& c = g.cat();

  auto t = tensor(g, arr(c, kSwap), arr(c, kId1));
  REQUIRE(t.has_value());
  CHECK(*t == arr(c, kMap12));

  // tensor extends composition
  for (int a = 0; a < c.arrow_count(); ++a)
    for (int b = 0; b < c.arrow_count(); ++b)
      if (c.composable(a, b)) {
        auto tt = tensor(g, a, b);
        REQUIRE(tt.has_value());
        CHECK(*tt == c.comp(a, b));
      }
}

TEST_CASE("tensor is absent without a meet") {
  // two-object groupoid, discrete order: distinct identities have no meet
  OrderedGroupoid u = disjoint_union(two_group_groupoid(), two_group_groupoid(), "a:", "b:");
  const FinCategory& c = u.cat();
  CHECK(check_ordered_groupoid(u).ok());
  CHECK_FALSE(object_meet(u, obj(c, "a:G"), obj(c, "b:G")).has_value());
  CHECK_FALSE(tensor(u, arr(c, "a:e"), arr(c, "b:e")).has_value());
}

TEST_CASE("tensor associativity and pseudoinverses") {
  GImage img = g_of_in(3);
  CHECK(check_tensor_associativity(img.groupoid).ok());
  CHECK(check_tensor_pseudoinverses(img.groupoid).ok());
}

TEST_CASE("canonical partition of the image of I_2") {
  GImage img = g_of_in(2);
  PartitionResult pr = canonical_partition(img.groupoid);
  REQUIRE(pr.ok());
  CHECK(pr.partition->block_count() == 1);
  CHECK(pr.partition->blocks[0].size() == 4);
  CHECK(img.groupoid.cat().object_id(pr.partition->tops[0]) == kId12);

  // meets are intersections of partial identities
  const FinCategory& c = img.groupoid.cat();
  auto m = pr.partition->meet_of(obj(c, kId1), obj(c, kId2));
  REQUIRE(m.has_value());
  CHECK(c.object_id(*m) == kEmpty);
}

TEST_CASE("discrete order gives singleton blocks, each its own top") {
  OrderedGroupoid g = two_group_groupoid();
  PartitionResult pr = canonical_partition(g);
  REQUIRE(pr.ok());
  CHECK(pr.partition->block_count() == 1);  // one object
  CHECK(pr.partition->tops[0] == 0);

  OrderedGroupoid u = disjoint_union(g, g, "a:", "b:");
  PartitionResult pu = canonical_partition(u);
  REQUIRE(pu.ok());
  CHECK(pu.partition->block_count() == 2);
  CHECK(pu.partition->top_heavy());
}

TEST_CASE("disjoint union of images has two blocks with the right tops") {
  GImage g1 = g_of_in(1);
  GImage g2 = g_of_in(2);
  OrderedGroupoid u = disjoint_union(g1.groupoid, g2.groupoid, "a:", "b:");
  CHECK(check_ordered_groupoid(u).ok());
  PartitionResult pr = canonical_partition(u);
  REQUIRE(pr.ok());
  REQUIRE(pr.partition->block_count() == 2);
  const FinCategory& c = u.cat();
  std::vector<Id> tops;
  for (int t : pr.partition->tops) tops.push_back(c.object_id(t));
  std::sort(tops.begin(), tops.end());
  CHECK(tops == std::vector<Id>{"a:1-1", std::string("b:") + kId12});

  ClassifyFlags flags = classify(u);
  CHECK(flags.ordered);
  CHECK(flags.locally_inductive);
  CHECK(flags.top_heavy);
  CHECK_FALSE(flags.inductive);  // two blocks
}

TEST_CASE("classify on the image of I_2") {
  GImage img = g_of_in(2);
  ClassifyFlags flags = classify(img.groupoid);
  CHECK(flags.ordered);
  CHECK(flags.locally_inductive);
  CHECK(flags.top_heavy);
  CHECK(flags.inductive);
}

TEST_CASE("blocks are exactly the comparability components") {
  std::vector<OrderedGroupoid> corpus;
  corpus.push_back(g_of_in(2).groupoid);
  corpus.push_back(g_of_in(3).groupoid);
  corpus.push_back(disjoint_union(g_of_in(1).groupoid, g_of_in(2).groupoid, "a:", "b:"));
  corpus.push_back(two_group_groupoid());

  for (const OrderedGroupoid& g : corpus) {
    PartitionResult pr = canonical_partition(g);
    REQUIRE(pr.ok());
    const SemilatticePartition& p = *pr.partition;
    const int no = g.cat().object_count();

    std::vector<int> seen(static_cast<std::size_t>(no), 0);  // disjoint cover
    for (const auto& blk : p.blocks)
      for (int o : blk) ++seen[static_cast<std::size_t>(o)];
    for (int o = 0; o < no; ++o) CHECK(seen[static_cast<std::size_t>(o)] == 1);

    // comparable objects share a block; blockmates are linked by meets
    for (int a = 0; a < no; ++a)
      for (int b = 0; b < no; ++b) {
        if (g.object_leq(a, b) || g.object_leq(b, a))
          CHECK(p.block_of[static_cast<std::size_t>(a)] ==
                p.block_of[static_cast<std::size_t>(b)]);
        if (p.block_of[static_cast<std::size_t>(a)] == p.block_of[static_cast<std::size_t>(b)]) {
          auto m = p.meet_of(a, b);
          REQUIRE(m.has_value());
          CHECK(g.object_leq(*m, a));
          CHECK(g.object_leq(*m, b));
        }
      }
  }
}

TEST_CASE("stored partitions are validated against the canonical one") {
  GImage img = g_of_in(2);
  const FinCategory& c = img.groupoid.cat();
  CHECK(validate_stored_partition(img.groupoid, img.partition.blocks, img.partition.tops).ok());

  std::vector<std::vector<int>> wrong{{obj(c, kEmpty)},
                                      {obj(c, kId1), obj(c, kId2), obj(c, kId12)}};
  CHECK_FALSE(validate_stored_partition(img.groupoid, wrong, {}).ok());

  // swapped tops across blocks must not cancel out
  GImage g1 = g_of_in(1);
  OrderedGroupoid u = disjoint_union(g1.groupoid, g1.groupoid, "a:", "b:");
  PartitionResult pr = canonical_partition(u);
  REQUIRE(pr.ok());
  std::vector<int> swapped{pr.partition->tops[1], pr.partition->tops[0]};
  CHECK(validate_stored_partition(u, pr.partition->blocks, pr.partition->tops).ok());
  CHECK_FALSE(validate_stored_partition(u, pr.partition->blocks, swapped).ok());
}

TEST_CASE("ordered and locally inductive functor checks") {
  GImage g2 = g_of_in(2);
  FunctorData id = identity_functor(g2.groupoid.base());
  CHECK(check_ordered_functor(id, g2.groupoid, g2.groupoid).ok());
  CHECK(check_locally_inductive_functor(id, g2.groupoid, g2.partition, g2.groupoid, g2.partition)
            .ok());
}

TEST_CASE("a perturbed arrow map breaks order preservation with a witness") {
  GImage g2 = g_of_in(2);
  const FinCategory& c = g2.groupoid.cat();
  FunctorData f = identity_functor(g2.groupoid.base());
  // empty <= 1-2, but id_{12} is parallel to neither
  f.arr_map[static_cast<std::size_t>(arr(c, kEmpty))] = arr(c, kId12);
  ValidationReport rep = check_ordered_functor(f, g2.groupoid, g2.groupoid);
  CHECK_FALSE(rep.ok());
  bool witnessed = false;
  for (const Violation& v : rep.violations)
    if (v.law == "ordered-functor" && v.detail.find(kEmpty) != std::string::npos)
      witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("an ordered functor moving the top down is not locally inductive") {
  GImage g2 = g_of_in(2);
  const OrderedGroupoid& g = g2.groupoid;
  const FinCategory& c = g.cat();

  // collapse: everything above the empty map lands on id_{1}
  FunctorData f;
  f.source = g.base();
  f.target = g.base();
  f.obj_map.assign(static_cast<std::size_t>(c.object_count()), obj(c, kId1));
  f.obj_map[static_cast<std::size_t>(obj(c, kEmpty))] = obj(c, kEmpty);
  f.arr_map.assign(static_cast<std::size_t>(c.arrow_count()), arr(c, kId1));
  f.arr_map[static_cast<std::size_t>(arr(c, kEmpty))] = arr(c, kEmpty);

  REQUIRE(validate_functor(f).ok());
  CHECK(check_ordered_functor(f, g, g).ok());
  ValidationReport li = check_locally_inductive_functor(f, g, g2.partition, g, g2.partition);
  CHECK_FALSE(li.ok());
  CHECK(li.mentions("li-functor-top"));   // the empty meet moved strictly down
  CHECK(li.mentions("li-functor-meet"));  // id1 /\ id2 = empty maps to id1
  CHECK_FALSE(preserves_tops(f, g2.partition, g2.partition));
}
