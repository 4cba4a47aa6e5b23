#pragma once

// Exhaustive sweep kernels, in two builds: invcat::par runs the OpenMP
// data-parallel loops used by default; invcat::ref is the plain serial
// reference kept for testing and benchmarking against. Both return reports in
// canonical order, so results are comparable verbatim.

#include <utility>
#include <vector>

#include "invcat/fincat.hpp"
#include "invcat/ogroupoid.hpp"
#include "invcat/report.hpp"
#include "invcat/restriction.hpp"

namespace invcat::ref {

ValidationReport category_laws(const FinCategory& c, bool require_identities);
ValidationReport functor_laws(const FunctorData& f, bool require_identities);
ValidationReport restriction_axioms(const RestrictionData& r);
ValidationReport derived_identities(const RestrictionData& r);
std::vector<std::pair<int, int>> natural_order_pairs(const RestrictionData& r);
ValidationReport leq_partial_order(const RestrictionData& r);
ValidationReport order_compatibility(const RestrictionData& r);
ValidationReport groupoid_order_laws(const OrderedGroupoid& g);
ValidationReport tensor_associativity(const OrderedGroupoid& g);
ValidationReport ordered_functor_law(const FunctorData& f, const OrderedGroupoid& src,
                                     const OrderedGroupoid& tgt);

}  // namespace invcat::ref

namespace invcat::par {

ValidationReport category_laws(const FinCategory& c, bool require_identities);
ValidationReport functor_laws(const FunctorData& f, bool require_identities);
ValidationReport restriction_axioms(const RestrictionData& r);
ValidationReport derived_identities(const RestrictionData& r);
std::vector<std::pair<int, int>> natural_order_pairs(const RestrictionData& r);
ValidationReport leq_partial_order(const RestrictionData& r);
ValidationReport order_compatibility(const RestrictionData& r);
ValidationReport groupoid_order_laws(const OrderedGroupoid& g);
ValidationReport tensor_associativity(const OrderedGroupoid& g);
ValidationReport ordered_functor_law(const FunctorData& f, const OrderedGroupoid& src,
                                     const OrderedGroupoid& tgt);

}  // namespace invcat::par
