#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "invcat/fincat.hpp"
#include "invcat/report.hpp"

namespace invcat {

// A restriction structure layered on a category: rbar[f] is the arrow f-bar,
// an endo-arrow on dom(f). Stored explicitly even when the base is an inverse
// category (where f-bar = comp(inv f, f) is forced); certification
// cross-checks the stored values so inconsistent input files are caught.
struct RestrictionData {
  CatPtr base;
  std::vector<int> rbar;  // arrow index -> arrow index

  const FinCategory& cat() const { return *base; }
  int rb(int f) const { return rbar[static_cast<std::size_t>(f)]; }
};

// Certificate that every arrow has a (unique) restricted inverse.
struct InverseCert {
  RestrictionData rd;
  std::vector<int> inv;  // arrow index -> arrow index, f -> f°

  const FinCategory& cat() const { return *rd.base; }
  int iv(int f) const { return inv[static_cast<std::size_t>(f)]; }
};

// The set E_A of restriction idempotents at an object, with its meet table
// (meet = composition) and top 1_A (-1 when A has no designated identity).
struct MeetSemilatticeView {
  int object = -1;
  std::vector<int> elements;  // arrow indices, sorted
  std::vector<int> meet;      // dense elements^2 -> arrow index
  int top = -1;

  int local_index(int arrow) const;
  int meet_of(int e, int f) const;  // by arrow index
};

// Structural sanity (rbar total, rbar(f): dom f -> dom f) followed by the four
// axioms over all applicable pairs. Quantification: R.2/R.3 over pairs with a
// common domain, R.4 over composable pairs.
ValidationReport check_restriction_axioms(const RestrictionData& r, Exec exec = Exec::parallel);

// The seven derived identities, checked exhaustively. All hold in any
// structure passing the axioms, so a non-empty report flags an implementation
// bug; that is the point of running it.
ValidationReport check_derived_identities(const RestrictionData& r, Exec exec = Exec::parallel);

// Natural partial order: f <= g iff f = comp(g, rbar f). Non-parallel arrows
// are incomparable (false), so order relations fit one arrow-pair set.
bool leq(const RestrictionData& r, int f, int g);

// All (f, g) with leq(f, g), sorted; includes the reflexive pairs.
std::vector<std::pair<int, int>> natural_order_pairs(const RestrictionData& r,
                                                     Exec exec = Exec::parallel);

bool is_total(const RestrictionData& r, int f);

// The unique g with comp(g,f) = rbar(f) and comp(f,g) = rbar(g), found by
// exhaustive search over hom(cod f, dom f). Two distinct candidates contradict
// the uniqueness theorem, so the input was not a restriction category.
std::optional<int> restricted_inverse_of(const RestrictionData& r, int f);

struct CertifyResult {
  std::optional<InverseCert> cert;
  ValidationReport report;  // names every arrow lacking a restricted inverse

  bool ok() const { return cert.has_value(); }
};

// Builds inv via restricted_inverse_of, verifies the regular-inverse equations
// f f° f = f and f° f f° = f°, and cross-checks rbar(f) = comp(inv f, f).
CertifyResult certify_inverse_category(const RestrictionData& r);

// E_A = { rbar(f) : f in hom(A,A) }, validated as a meet-semilattice.
MeetSemilatticeView idempotent_set(const RestrictionData& r, int object);

// F(rbar f) = rbar(F f) for every arrow. Any functor between inverse
// categories satisfies this; it is verified rather than assumed.
ValidationReport check_restriction_functor(const FunctorData& f, const RestrictionData& src,
                                           const RestrictionData& tgt);

// Exhaustive property checks used by `check` and the test suite.
ValidationReport check_leq_partial_order(const RestrictionData& r, Exec exec = Exec::parallel);
ValidationReport check_order_compatibility(const RestrictionData& r, Exec exec = Exec::parallel);
ValidationReport check_total_maps_subcategory(const RestrictionData& r);
ValidationReport check_inverse_laws(const InverseCert& c);

}  // namespace invcat
