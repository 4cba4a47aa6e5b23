#include "invcat/restriction.hpp"

#include <algorithm>

#include "invcat/kernels.hpp"

namespace invcat {

namespace {

void require_rbar_total(const RestrictionData& r) {
  const int n = r.cat().arrow_count();
  if (static_cast<int>(r.rbar.size()) != n) throw InputError("rbar is not total on arrows");
  for (int f = 0; f < n; ++f)
    if (r.rb(f) < 0 || r.rb(f) >= n) throw InputError("rbar out of range at " + r.cat().arrow_id(f));
}

}  // namespace

int MeetSemilatticeView::local_index(int arrow) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), arrow);
  if (it == elements.end() || *it != arrow) return -1;
  return static_cast<int>(it - elements.begin());
}

int MeetSemilatticeView::meet_of(int e, int f) const {
  int le = local_index(e), lf = local_index(f);
  if (le < 0 || lf < 0) throw InputError("meet_of: arrow not in the idempotent set");
  return meet[static_cast<std::size_t>(le) * elements.size() + static_cast<std::size_t>(lf)];
}

ValidationReport check_restriction_axioms(const RestrictionData& r, Exec exec) {
  require_rbar_total(r);
  return exec == Exec::parallel ? par::restriction_axioms(r) : ref::restriction_axioms(r);
}

ValidationReport check_derived_identities(const RestrictionData& r, Exec exec) {
  require_rbar_total(r);
  return exec == Exec::parallel ? par::derived_identities(r) : ref::derived_identities(r);
}

bool leq(const RestrictionData& r, int f, int g) {
  const FinCategory& c = r.cat();
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) return false;  // incomparable: not parallel
  return c.comp(g, r.rb(f)) == f;
}

std::vector<std::pair<int, int>> natural_order_pairs(const RestrictionData& r, Exec exec) {
  require_rbar_total(r);
  return exec == Exec::parallel ? par::natural_order_pairs(r) : ref::natural_order_pairs(r);
}

bool is_total(const RestrictionData& r, int f) {
  int e = r.cat().ident(r.cat().dom(f));
  return e >= 0 && r.rb(f) == e;
}

std::optional<int> restricted_inverse_of(const RestrictionData& r, int f) {
  const FinCategory& c = r.cat();
  std::optional<int> found;
  for (int g : c.hom(c.cod(f), c.dom(f))) {
    if (c.comp(g, f) == r.rb(f) && c.comp(f, g) == r.rb(g)) {
      if (found)
        throw StructuralError("uniqueness violated: not a restriction category (arrows " +
                              c.arrow_id(*found) + " and " + c.arrow_id(g) + " both invert " +
                              c.arrow_id(f) + ")");
      found = g;
    }
  }
  return found;
}

CertifyResult certify_inverse_category(const RestrictionData& r) {
  require_rbar_total(r);
  const FinCategory& c = r.cat();
  const int n = c.arrow_count();
  CertifyResult out;
  std::vector<int> inv(static_cast<std::size_t>(n), -1);

  for (int f = 0; f < n; ++f) {
    auto g = restricted_inverse_of(r, f);
    if (!g) {
      out.report.add("no-restricted-inverse", "f=" + c.arrow_id(f));
      continue;
    }
    inv[static_cast<std::size_t>(f)] = *g;
  }
  if (!out.report.ok()) {
    out.report.sort_canonical();
    return out;
  }

  // Regular-inverse equations and the stored-rbar cross-check.
  for (int f = 0; f < n; ++f) {
    int g = inv[static_cast<std::size_t>(f)];
    if (c.comp(c.comp(f, g), f) != f)
      out.report.add("regular-inverse", "f=" + c.arrow_id(f) + ": f f° f != f");
    if (c.comp(c.comp(g, f), g) != g)
      out.report.add("regular-inverse", "f=" + c.arrow_id(f) + ": f° f f° != f°");
    if (c.comp(g, f) != r.rb(f))
      out.report.add("rbar-consistency", "f=" + c.arrow_id(f) + ": stored rbar != f° f");
  }
  if (!out.report.ok()) {
    out.report.sort_canonical();
    return out;
  }

  out.cert = InverseCert{r, std::move(inv)};
  return out;
}

MeetSemilatticeView idempotent_set(const RestrictionData& r, int object) {
  const FinCategory& c = r.cat();
  if (object < 0 || object >= c.object_count()) throw InputError("idempotent_set: unknown object");

  MeetSemilatticeView view;
  view.object = object;
  for (int f : c.hom(object, object)) view.elements.push_back(r.rb(f));
  std::sort(view.elements.begin(), view.elements.end());
  view.elements.erase(std::unique(view.elements.begin(), view.elements.end()),
                      view.elements.end());

  const int k = static_cast<int>(view.elements.size());
  view.meet.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), -1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int m = c.comp(view.elements[static_cast<std::size_t>(i)],
                     view.elements[static_cast<std::size_t>(j)]);
      if (m < 0 || view.local_index(m) < 0)
        throw StructuralError("idempotent_set: meet escapes E_" + c.object_id(object));
      view.meet[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(j)] = m;
    }
  }

  view.top = c.ident(object);
  if (view.top >= 0 && view.local_index(view.top) < 0)
    throw StructuralError("idempotent_set: identity is not a restriction idempotent");

  // Meet-semilattice laws; failures mean the axioms were not checked first.
  for (int i = 0; i < k; ++i) {
    int e = view.elements[static_cast<std::size_t>(i)];
    if (view.meet_of(e, e) != e) throw StructuralError("idempotent_set: meet not idempotent");
    if (view.top >= 0 && view.meet_of(view.top, e) != e)
      throw StructuralError("idempotent_set: top is not a unit for meet");
    for (int j = 0; j < k; ++j) {
      int f = view.elements[static_cast<std::size_t>(j)];
      int m = view.meet_of(e, f);
      if (m != view.meet_of(f, e)) throw StructuralError("idempotent_set: meet not commutative");
      // greatest lower bound in the natural order restricted to E_A
      if (!leq(r, m, e) || !leq(r, m, f))
        throw StructuralError("idempotent_set: meet is not a lower bound");
      for (int l = 0; l < k; ++l) {
        int d = view.elements[static_cast<std::size_t>(l)];
        if (leq(r, d, e) && leq(r, d, f) && !leq(r, d, m))
          throw StructuralError("idempotent_set: meet is not the greatest lower bound");
        if (view.meet_of(view.meet_of(e, f), d) != view.meet_of(e, view.meet_of(f, d)))
          throw StructuralError("idempotent_set: meet not associative");
      }
    }
  }
  return view;
}

ValidationReport check_restriction_functor(const FunctorData& f, const RestrictionData& src,
                                           const RestrictionData& tgt) {
  ValidationReport rep;
  for (int a = 0; a < src.cat().arrow_count(); ++a) {
    int img = f.arr_map[static_cast<std::size_t>(a)];
    if (f.arr_map[static_cast<std::size_t>(src.rb(a))] != tgt.rb(img))
      rep.add("restriction-functor", "f=" + src.cat().arrow_id(a));
  }
  rep.sort_canonical();
  return rep;
}

ValidationReport check_leq_partial_order(const RestrictionData& r, Exec exec) {
  require_rbar_total(r);
  return exec == Exec::parallel ? par::leq_partial_order(r) : ref::leq_partial_order(r);
}

ValidationReport check_order_compatibility(const RestrictionData& r, Exec exec) {
  require_rbar_total(r);
  return exec == Exec::parallel ? par::order_compatibility(r) : ref::order_compatibility(r);
}

ValidationReport check_total_maps_subcategory(const RestrictionData& r) {
  ValidationReport rep;
  const FinCategory& c = r.cat();
  const int n = c.arrow_count();

  for (int o = 0; o < c.object_count(); ++o) {
    int e = c.ident(o);
    if (e >= 0 && !is_total(r, e)) rep.add("totals-identity", "object=" + c.object_id(o));
  }
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.comp(g, f);
      if (gf < 0) continue;
      if (is_total(r, g) && is_total(r, f) && !is_total(r, gf))
        rep.add("totals-closed", "g=" + c.arrow_id(g) + " f=" + c.arrow_id(f));
      if (is_total(r, gf) && !is_total(r, f))
        rep.add("totals-left-divisor", "g=" + c.arrow_id(g) + " f=" + c.arrow_id(f));
    }
  }
  rep.sort_canonical();
  return rep;
}

ValidationReport check_inverse_laws(const InverseCert& cert) {
  ValidationReport rep;
  const FinCategory& c = cert.cat();
  const int n = c.arrow_count();

  for (int f = 0; f < n; ++f) {
    if (cert.iv(cert.iv(f)) != f) rep.add("inv-involution", "f=" + c.arrow_id(f));
    if (c.comp(cert.iv(f), f) != cert.rd.rb(f)) rep.add("inv-rbar", "f=" + c.arrow_id(f));
  }
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.comp(g, f);
      if (gf < 0) continue;
      if (cert.iv(gf) != c.comp(cert.iv(f), cert.iv(g)))
        rep.add("inv-antihomomorphism", "g=" + c.arrow_id(g) + " f=" + c.arrow_id(f));
    }
  }
  rep.sort_canonical();
  return rep;
}

}  // namespace invcat
