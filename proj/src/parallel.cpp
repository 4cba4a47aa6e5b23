// OpenMP builds of the sweep kernels. Each thread collects violations into
// its own bucket; buckets are merged and canonically sorted, so the reports
// match the serial reference verbatim on any thread count.

#include <omp.h>

#include <string>

#include "invcat/kernels.hpp"

namespace invcat::par {

namespace {

std::string w(const FinCategory& c, const char* name, int arrow) {
  return std::string(name) + "=" + c.arrow_id(arrow);
}

class Collector {
 public:
  Collector() : buckets_(static_cast<std::size_t>(omp_get_max_threads())) {}

  ValidationReport& local() { return buckets_[static_cast<std::size_t>(omp_get_thread_num())]; }

  void drain_into(ValidationReport& rep) {
    for (ValidationReport& b : buckets_) rep.merge(std::move(b));
  }

 private:
  std::vector<ValidationReport> buckets_;
};

}  // namespace

ValidationReport category_laws(const FinCategory& c, bool require_identities) {
  ValidationReport rep;
  const int n = c.arrow_count();

  for (int o = 0; o < c.object_count(); ++o) {
    int e = c.ident(o);
    if (e < 0) {
      if (require_identities) rep.add("identity-missing", "object=" + c.object_id(o));
      continue;
    }
    if (c.dom(e) != o || c.cod(e) != o)
      rep.add("identity-endpoints", "object=" + c.object_id(o) + " ident=" + c.arrow_id(e));
  }

  for (int f = 0; f < n; ++f) {
    int ed = c.ident(c.dom(f));
    int ec = c.ident(c.cod(f));
    if (ed >= 0 && c.dom(ed) == c.dom(f) && c.cod(ed) == c.dom(f) && c.comp(f, ed) != f)
      rep.add("identity-law", w(c, "f", f) + " with right identity");
    if (ec >= 0 && c.dom(ec) == c.cod(f) && c.cod(ec) == c.cod(f) && c.comp(ec, f) != f)
      rep.add("identity-law", w(c, "f", f) + " with left identity");
  }

  Collector pairs;
#pragma omp parallel
  {
    ValidationReport& mine = pairs.local();
#pragma omp for schedule(static) nowait
    for (int g = 0; g < n; ++g) {
      for (int f = 0; f < n; ++f) {
        int r = c.comp(g, f);
        if (c.composable(g, f)) {
          if (r < 0)
            mine.add("comp-defined",
                     w(c, "g", g) + " " + w(c, "f", f) + " composable but undefined");
          else if (c.dom(r) != c.dom(f) || c.cod(r) != c.cod(g))
            mine.add("comp-endpoints", w(c, "g", g) + " " + w(c, "f", f) + " gf=" + c.arrow_id(r));
        } else if (r >= 0) {
          mine.add("comp-defined", w(c, "g", g) + " " + w(c, "f", f) + " defined but not composable");
        }
      }
    }
  }
  pairs.drain_into(rep);

  Collector triples;
#pragma omp parallel
  {
    ValidationReport& mine = triples.local();
#pragma omp for schedule(dynamic, 4) nowait
    for (int h = 0; h < n; ++h) {
      for (int g = 0; g < n; ++g) {
        if (!c.composable(h, g)) continue;
        int hg = c.comp(h, g);
        for (int f = 0; f < n; ++f) {
          if (!c.composable(g, f)) continue;
          int gf = c.comp(g, f);
          if (hg < 0 || gf < 0) continue;
          int a = c.comp(h, gf);
          int b = c.comp(hg, f);
          if (a != b || a < 0)
            mine.add("associativity", w(c, "h", h) + " " + w(c, "g", g) + " " + w(c, "f", f));
        }
      }
    }
  }
  triples.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

ValidationReport functor_laws(const FunctorData& fd, bool require_identities) {
  ValidationReport rep;
  const FinCategory& s = *fd.source;
  const FinCategory& t = *fd.target;
  const int n = s.arrow_count();

  for (int a = 0; a < n; ++a) {
    int fa = fd.arr_map[static_cast<std::size_t>(a)];
    if (t.dom(fa) != fd.obj_map[static_cast<std::size_t>(s.dom(a))] ||
        t.cod(fa) != fd.obj_map[static_cast<std::size_t>(s.cod(a))])
      rep.add("functor-endpoints", w(s, "f", a) + " image=" + t.arrow_id(fa));
  }

  if (require_identities) {
    for (int o = 0; o < s.object_count(); ++o) {
      int e = s.ident(o);
      if (e < 0) continue;
      int te = t.ident(fd.obj_map[static_cast<std::size_t>(o)]);
      if (te < 0 || fd.arr_map[static_cast<std::size_t>(e)] != te)
        rep.add("functor-identity", "object=" + s.object_id(o));
    }
  }

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(static) nowait
    for (int g = 0; g < n; ++g) {
      for (int f = 0; f < n; ++f) {
        if (!s.composable(g, f)) continue;
        int gf = s.comp(g, f);
        if (gf < 0) continue;
        int img = t.comp(fd.arr_map[static_cast<std::size_t>(g)],
                         fd.arr_map[static_cast<std::size_t>(f)]);
        if (img != fd.arr_map[static_cast<std::size_t>(gf)] || img < 0)
          mine.add("functor-composition", w(s, "g", g) + " " + w(s, "f", f));
      }
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

ValidationReport restriction_axioms(const RestrictionData& r) {
  ValidationReport rep;
  const FinCategory& c = r.cat();
  const int n = c.arrow_count();

  bool shape_ok = true;
  for (int f = 0; f < n; ++f) {
    int e = r.rb(f);
    if (c.dom(e) != c.dom(f) || c.cod(e) != c.dom(f)) {
      rep.add("rbar-endpoints", w(c, "f", f) + " rbar=" + c.arrow_id(e));
      shape_ok = false;
    }
  }
  if (!shape_ok) {
    rep.sort_canonical();
    return rep;
  }

  for (int f = 0; f < n; ++f)
    if (c.comp(f, r.rb(f)) != f) rep.add("R.1", w(c, "f", f));

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(static) nowait
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        if (c.dom(f) != c.dom(g)) continue;
        if (c.comp(r.rb(f), r.rb(g)) != c.comp(r.rb(g), r.rb(f)))
          mine.add("R.2", w(c, "f", f) + " " + w(c, "g", g));
        int gfbar = c.comp(g, r.rb(f));
        if (gfbar < 0 || r.rb(gfbar) != c.comp(r.rb(g), r.rb(f)))
          mine.add("R.3", w(c, "f", f) + " " + w(c, "g", g));
      }
    }
#pragma omp for schedule(static) nowait
    for (int g = 0; g < n; ++g) {
      for (int f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        int gf = c.comp(g, f);
        if (gf < 0) continue;
        if (c.comp(r.rb(g), f) != c.comp(f, r.rb(gf)))
          mine.add("R.4", w(c, "g", g) + " " + w(c, "f", f));
      }
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

ValidationReport derived_identities(const RestrictionData& r) {
  ValidationReport rep;
  const FinCategory& c = r.cat();
  const int n = c.arrow_count();

  for (int f = 0; f < n; ++f) {
    if (c.comp(r.rb(f), r.rb(f)) != r.rb(f)) rep.add("derived-(i)", w(c, "f", f));
    if (r.rb(r.rb(f)) != r.rb(f)) rep.add("derived-(iv)", w(c, "f", f));
  }

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(static) nowait
    for (int g = 0; g < n; ++g) {
      for (int f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        int gf = c.comp(g, f);
        if (gf < 0) continue;
        if (c.comp(r.rb(f), r.rb(gf)) != r.rb(gf))
          mine.add("derived-(ii)", w(c, "g", g) + " " + w(c, "f", f));
        int gbar_f = c.comp(r.rb(g), f);
        if (gbar_f < 0 || r.rb(gbar_f) != r.rb(gf))
          mine.add("derived-(iii)", w(c, "g", g) + " " + w(c, "f", f));
      }
    }
#pragma omp for schedule(static) nowait
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        if (c.dom(f) != c.dom(g)) continue;
        int m = c.comp(r.rb(g), r.rb(f));
        if (m < 0 || r.rb(m) != m) mine.add("derived-(v)", w(c, "f", f) + " " + w(c, "g", g));
        if (c.comp(f, r.rb(g)) == f && r.rb(f) != c.comp(r.rb(f), r.rb(g)))
          mine.add("derived-(vii)", w(c, "f", f) + " " + w(c, "g", g));
      }
    }
#pragma omp for schedule(dynamic, 4) nowait
    for (int m = 0; m < n; ++m) {
      int e = c.ident(c.dom(m));
      if (e < 0) continue;
      bool monic = true;
      for (int x = 0; x < n && monic; ++x) {
        if (c.cod(x) != c.dom(m)) continue;
        for (int y = 0; y < n && monic; ++y) {
          if (c.cod(y) != c.dom(m) || c.dom(y) != c.dom(x) || x == y) continue;
          if (c.comp(m, x) == c.comp(m, y)) monic = false;
        }
      }
      if (monic && r.rb(m) != e) mine.add("derived-(vi)", w(c, "m", m));
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

std::vector<std::pair<int, int>> natural_order_pairs(const RestrictionData& r) {
  const FinCategory& c = r.cat();
  const int n = c.arrow_count();
  std::vector<std::vector<std::pair<int, int>>> buckets(
      static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& mine = buckets[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static) nowait
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g)
        if (c.dom(f) == c.dom(g) && c.cod(f) == c.cod(g) && c.comp(g, r.rb(f)) == f)
          mine.emplace_back(f, g);
  }
  std::vector<std::pair<int, int>> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport leq_partial_order(const RestrictionData& r) {
  ValidationReport rep;
  const FinCategory& c = r.cat();
  const int n = c.arrow_count();
  auto le = [&](int f, int g) {
    return c.dom(f) == c.dom(g) && c.cod(f) == c.cod(g) && c.comp(g, r.rb(f)) == f;
  };

  for (int f = 0; f < n; ++f)
    if (!le(f, f)) rep.add("leq-reflexive", w(c, "f", f));

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(dynamic, 4) nowait
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        if (f == g || !le(f, g)) continue;
        if (le(g, f)) mine.add("leq-antisymmetry", w(c, "f", f) + " " + w(c, "g", g));
        for (int h = 0; h < n; ++h)
          if (le(g, h) && !le(f, h))
            mine.add("leq-transitivity", w(c, "f", f) + " " + w(c, "g", g) + " " + w(c, "h", h));
      }
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

ValidationReport order_compatibility(const RestrictionData& r) {
  ValidationReport rep;
  const FinCategory& c = r.cat();
  auto pairs = par::natural_order_pairs(r);
  const long p = static_cast<long>(pairs.size());

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(static) nowait
    for (long i = 0; i < p; ++i) {
      auto [a, A] = pairs[static_cast<std::size_t>(i)];
      if (c.comp(r.rb(a), r.rb(A)) != r.rb(a))
        mine.add("order-rbar-monotone", w(c, "f", a) + " " + w(c, "g", A));
      for (const auto& [b, B] : pairs) {
        int ab = c.composable(a, b) ? c.comp(a, b) : -1;
        int AB = c.composable(A, B) ? c.comp(A, B) : -1;
        if (ab < 0 || AB < 0) continue;
        bool le = c.dom(ab) == c.dom(AB) && c.cod(ab) == c.cod(AB) && c.comp(AB, r.rb(ab)) == ab;
        if (!le)
          mine.add("order-compatibility",
                   w(c, "a", a) + " " + w(c, "A", A) + " " + w(c, "b", b) + " " + w(c, "B", B));
      }
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

ValidationReport groupoid_order_laws(const OrderedGroupoid& g) {
  ValidationReport rep;
  const FinCategory& c = g.cat();
  const int n = c.arrow_count();
  const auto& pairs = g.order_pairs();
  const long p = static_cast<long>(pairs.size());

  for (int f = 0; f < n; ++f)
    if (!g.leq(f, f)) rep.add("order-reflexive", w(c, "f", f));

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(static) nowait
    for (long i = 0; i < p; ++i) {
      auto [f, gg] = pairs[static_cast<std::size_t>(i)];
      if (f != gg && g.leq(gg, f))
        mine.add("order-antisymmetry", w(c, "f", f) + " " + w(c, "g", gg));
      for (int h = 0; h < n; ++h)
        if (g.leq(gg, h) && !g.leq(f, h))
          mine.add("order-transitivity", w(c, "f", f) + " " + w(c, "g", gg) + " " + w(c, "h", h));
      if (!g.leq(g.ginv(f), g.ginv(gg)))
        mine.add("og-axiom-(i)", w(c, "f", f) + " " + w(c, "g", gg));
    }
#pragma omp for schedule(static) nowait
    for (long i = 0; i < p; ++i) {
      auto [a, A] = pairs[static_cast<std::size_t>(i)];
      for (const auto& [b, B] : pairs) {
        if (!c.composable(a, b) || !c.composable(A, B)) continue;
        int ab = c.comp(a, b);
        int AB = c.comp(A, B);
        if (ab < 0 || AB < 0) continue;
        if (!g.leq(ab, AB))
          mine.add("og-axiom-(ii)",
                   w(c, "a", a) + " " + w(c, "A", A) + " " + w(c, "b", b) + " " + w(c, "B", B));
      }
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

ValidationReport tensor_associativity(const OrderedGroupoid& g) {
  ValidationReport rep;
  const FinCategory& c = g.cat();
  const int n = c.arrow_count();

  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
#pragma omp parallel for schedule(dynamic, 4)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (auto t = tensor(g, a, b))
        table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(b)] = *t;
  auto tab = [&](int a, int b) {
    return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(b)];
  };

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(dynamic, 4) nowait
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int ab = tab(a, b);
        for (int cc = 0; cc < n; ++cc) {
          int bc = tab(b, cc);
          int lhs = ab < 0 ? -1 : tab(ab, cc);
          int rhs = bc < 0 ? -1 : tab(a, bc);
          if (lhs >= 0 && rhs >= 0 && lhs != rhs)
            mine.add("tensor-associativity",
                     w(c, "a", a) + " " + w(c, "b", b) + " " + w(c, "c", cc));
        }
      }
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

ValidationReport ordered_functor_law(const FunctorData& fd, const OrderedGroupoid& src,
                                     const OrderedGroupoid& tgt) {
  ValidationReport rep;
  const auto& pairs = src.order_pairs();
  const long p = static_cast<long>(pairs.size());

  Collector col;
#pragma omp parallel
  {
    ValidationReport& mine = col.local();
#pragma omp for schedule(static) nowait
    for (long i = 0; i < p; ++i) {
      auto [f, g] = pairs[static_cast<std::size_t>(i)];
      if (!tgt.leq(fd.arr_map[static_cast<std::size_t>(f)],
                   fd.arr_map[static_cast<std::size_t>(g)]))
        mine.add("ordered-functor", w(src.cat(), "f", f) + " " + w(src.cat(), "g", g));
    }
  }
  col.drain_into(rep);

  rep.sort_canonical();
  return rep;
}

}  // namespace invcat::par
