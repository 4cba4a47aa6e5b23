#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "invcat/ogroupoid.hpp"
#include "invcat/restriction.hpp"
#include "invcat/semigroup.hpp"

namespace invcat {

// The groupoid built from an inverse category: objects are the restriction
// idempotents, one arrow f : rbar(f) -> rbar(f°) per base arrow, composition
// inherited where endpoints match, order = natural order, blocks = the E_A.
// Arrow ids are preserved, so arrow index i corresponds to base arrow i.
struct GImage {
  OrderedGroupoid groupoid;
  SemilatticePartition partition;
  std::vector<int> object_to_base_arrow;  // groupoid object -> idempotent arrow of X
  std::vector<int> base_arrow_to_object;  // arrow of X -> groupoid object or -1
};

// In semicategory mode no identities are required of X and the partition
// carries no tops. Verifies its own output (ordered groupoid + partition);
// failure on certified input is a structural bug.
GImage g_of_inverse_category(const InverseCert& x, bool semicategory = false);

// The locally inductive functor induced on the groupoid images. Verifies the
// restriction-functor property of F and all structure preservation. In
// semicategory mode F is a semifunctor (no identity preservation) and the
// images carry no tops, so top preservation is not demanded.
FunctorData g_of_functor(const FunctorData& f, const InverseCert& x, const GImage& gx,
                         const InverseCert& y, const GImage& gy, bool semicategory = false);

// The inverse category built from a top-heavy locally inductive groupoid:
// objects are the blocks (named "M000", ... by least member), every groupoid
// arrow appears in exactly one hom-set, composition is the tensor product,
// identities are 1_top. Arrow ids are preserved. In semicategory mode tops
// are not required and no identities are designated.
InverseCert i_of_groupoid(const OrderedGroupoid& g, const SemilatticePartition& p,
                          bool semicategory = false);

// The functor induced between i-images: blocks map to the unique block
// containing their image. Throws StructuralError if an image spans two blocks.
FunctorData i_of_functor(const FunctorData& f, const SemilatticePartition& src_part,
                         const InverseCert& ig, const SemilatticePartition& tgt_part,
                         const InverseCert& ih);

// In the groupoid image of X, every tensor defined by a meet equals the
// composite taken in X, and tensors exist exactly for X-composable pairs.
ValidationReport tensor_equals_composition_check(const InverseCert& x, bool semicategory = false);

// Explicit isomorphism pair with its verification flags. Round trips relabel
// (1_A vs A), so witnesses are isomorphisms, never table equalities.
struct IsoWitness {
  FunctorData forward;
  FunctorData backward;
  bool order_preserved = false;      // both directions (groupoid round trip)
  bool partition_matches = false;    // blocks and tops correspond
  bool restriction_preserved = false;  // rbar and inverses correspond (category round trip)
  bool composites_identity = false;
};

// G ~ g_of_inverse_category(i_of_groupoid(G)): arrow bijection f -> f, object
// bijection A -> 1_A. Throws StructuralError on any mismatch.
IsoWitness roundtrip_groupoid(const OrderedGroupoid& g, const SemilatticePartition& p,
                              bool semicategory = false);

// X ~ i_of_groupoid(g_of_inverse_category(X)): object bijection A -> E_A,
// arrow bijection f -> f. Throws StructuralError on any mismatch.
IsoWitness roundtrip_category(const InverseCert& x, bool semicategory = false);

// Lifts a locally inductive functor between groupoid images back to a functor
// of the inverse categories: F'(A) is the unique B with F(E_A) within E_B.
// Verifies g_of_functor(F') = F. Throws InputError("not locally inductive")
// when an E_A image spans two idempotent sets.
FunctorData reconstruct_functor(const FunctorData& f, const InverseCert& x, const GImage& gx,
                                const InverseCert& y, const GImage& gy,
                                bool semicategory = false);

// Classical single-object constructions -------------------------------------

// Objects E(S), arrows s : s•s -> s s•, order = natural order. Inductive.
OrderedGroupoid classical_g(const InverseSemigroupTable& s);

// Elements = arrows, multiplication = tensor (total on an inductive
// groupoid), inverses = ginv. Throws InputError("tensor not total") otherwise.
InverseSemigroupTable classical_s(const OrderedGroupoid& g);

// Oplax correspondence -------------------------------------------------------

struct OplaxCheckResult {
  ValidationReport report;  // empty iff F(gf) <= F(g)F(f) and F(1_A) <= 1_FA everywhere
  std::vector<std::pair<int, int>> strict_composites;  // (g, f) with F(gf) < F(g)F(f)
  std::vector<int> strict_identities;                  // objects with F(1_A) < 1_FA

  bool ok() const { return report.ok(); }
};

// F is FunctorData-shaped (endpoint-compatible maps); only the oplax
// inequalities are demanded, against the natural order of the target.
OplaxCheckResult check_oplax_functor(const FunctorData& f, const InverseCert& x,
                                     const InverseCert& y);

// Direction 1: an oplax functor of inverse categories induces a map of the
// groupoid images, verified to be an ordered functor.
struct OplaxToOrdered {
  FunctorData groupoid_functor;
  ValidationReport report;  // functor laws + order preservation

  bool ok() const { return report.ok(); }
};
OplaxToOrdered oplax_to_ordered(const FunctorData& f, const InverseCert& x, const GImage& gx,
                                const InverseCert& y, const GImage& gy);

// Direction 2: an ordered functor of top-heavy locally inductive groupoids
// induces an oplax functor of the category images. Whether identities are
// preserved exactly (= tops preserved) is reported as a separate flag.
struct OrderedToOplax {
  FunctorData category_map;
  OplaxCheckResult oplax;
  bool identities_strict = false;

  bool ok() const { return oplax.ok(); }
};
OrderedToOplax ordered_to_oplax(const FunctorData& f, const OrderedGroupoid& g,
                                const SemilatticePartition& pg, const InverseCert& ig,
                                const OrderedGroupoid& h, const SemilatticePartition& ph,
                                const InverseCert& ih);

}  // namespace invcat
