#include <doctest.h>

#include <sstream>

#include "invcat/fincat.hpp"
#include "invcat/generators.hpp"
#include "test_helpers.hpp"

using namespace invcat;
using namespace testutil;

namespace {

CatPtr terminal_category() {
  FinCategoryBuilder b;
  b.add_object("A");
  b.add_arrow("id", "A", "A");
  b.set_comp("id", "id", "id");
  b.set_ident("A", "id");
  return b.build();
}

}  // namespace

TEST_CASE("terminal category validates") {
  CatPtr c = terminal_category();
  CHECK(validate_category(*c).ok());
}

TEST_CASE("I_2 as a one-object table validates") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  CHECK(i2.cat().arrow_count() == 7);
  CHECK(validate_category(i2.cat()).ok());
}

TEST_CASE("redirecting comp(id,id) to a non-identity is caught") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  const FinCategory& c = i2.cat();
  FinCategoryBuilder b;
  b.add_object("M");
  for (int a = 0; a < c.arrow_count(); ++a) b.add_arrow(c.arrow_id(a), "M", "M");
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int f = 0; f < c.arrow_count(); ++f) {
      bool corrupt = c.arrow_id(g) == kId12 && c.arrow_id(f) == kId12;
      b.set_comp(c.arrow_id(g), c.arrow_id(f), corrupt ? kSwap : c.arrow_id(c.comp(g, f)));
    }
  b.set_ident("M", kId12);
  CatPtr corrupted = b.build();

  ValidationReport rep = validate_category(*corrupted);
  CHECK_FALSE(rep.ok());
  CHECK(rep.mentions("identity-law"));
}

TEST_CASE("missing identities are violations unless semicategory mode") {
  FinCategoryBuilder b;
  b.add_object("A");
  b.add_arrow("f", "A", "A");
  b.set_comp("f", "f", "f");
  CatPtr c = b.build();
  CHECK(validate_category(*c).mentions("identity-missing"));
  CHECK(validate_category(*c, Exec::parallel, false).ok());
}

TEST_CASE("hom sets") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  CHECK(hom_set(i2.cat(), "M", "M").size() == 7);
  CHECK_THROWS_AS((void)hom_set(i2.cat(), "M", "nowhere"), InputError);

  FinCategoryBuilder b;
  b.add_object("A");
  b.add_object("B");
  b.add_arrow("1a", "A", "A");
  b.add_arrow("1b", "B", "B");
  b.set_comp("1a", "1a", "1a");
  b.set_comp("1b", "1b", "1b");
  b.set_ident("A", "1a");
  b.set_ident("B", "1b");
  CatPtr two = b.build();
  CHECK(validate_category(*two).ok());
  CHECK(hom_set(*two, "A", "B").empty());
  CHECK(hom_set(*two, "A", "A") == std::vector<Id>{"1a"});
}

TEST_CASE("builder rejects malformed declarations") {
  FinCategoryBuilder dup;
  dup.add_object("A");
  dup.add_object("A");
  CHECK_THROWS_AS((void)dup.build(), InputError);

  FinCategoryBuilder dangling;
  dangling.add_object("A");
  dangling.add_arrow("f", "A", "B");
  CHECK_THROWS_AS((void)dangling.build(), InputError);
}

TEST_CASE("identity functor validates on every generated category") {
  for (int n = 1; n <= 3; ++n) {
    InverseCert x = symmetric_inverse_monoid(n);
    CHECK(validate_functor(identity_functor(x.rd.base)).ok());
  }
  InverseCert pbc = partial_bijection_category({{1}, {1, 2}});
  CHECK(validate_functor(identity_functor(pbc.rd.base)).ok());
}

TEST_CASE("the I_1 embedding preserves composition but not identities") {
  InverseCert i1 = symmetric_inverse_monoid(1);
  InverseCert i2 = symmetric_inverse_monoid(2);
  FunctorData incl = inclusion_i1_i2(i1, i2);

  ValidationReport strict = validate_functor(incl);
  CHECK_FALSE(strict.ok());
  CHECK(strict.mentions("functor-identity"));
  CHECK_FALSE(strict.mentions("functor-composition"));

  CHECK(validate_functor(incl, Exec::parallel, false).ok());  // as a semifunctor
}

TEST_CASE("sending swap to the empty map breaks composition") {
  InverseCert i2 = symmetric_inverse_monoid(2);
  FunctorData f;
  f.source = i2.rd.base;
  f.target = i2.rd.base;
  f.obj_map = {0};
  f.arr_map.assign(7, 0);
  for (int a = 0; a < 7; ++a) f.arr_map[static_cast<std::size_t>(a)] = a;
  f.arr_map[static_cast<std::size_t>(arr(i2.cat(), kSwap))] = arr(i2.cat(), kEmpty);

  ValidationReport rep = validate_functor(f);
  CHECK_FALSE(rep.ok());
  // swap o swap = identity, but the image composes to the empty map
  CHECK(rep.mentions("functor-composition"));
}

TEST_CASE("composition of validated functors validates") {
  InverseCert i1 = symmetric_inverse_monoid(1);
  InverseCert i2 = symmetric_inverse_monoid(2);
  auto functors_12 = enumerate_functors_one_object(i1, i2);
  auto functors_22 = enumerate_functors_one_object(i2, i2);
  CHECK(functors_12.size() == 4);  // F(empty) ranges over the idempotents

  for (const auto& f : functors_12)
    for (const auto& g : functors_22) {
      FunctorData gf = compose_functors(g, f);
      CHECK(validate_functor(gf).ok());
    }
}
