#include "invcat/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace invcat {

namespace {

// All injective graphs dom -> (subsets of tgt), dom already sorted.
void partial_bijections_into(const std::vector<int>& dom, const std::vector<int>& tgt,
                             std::vector<PartialBijection>& out) {
  std::vector<std::pair<int, int>> acc;
  std::vector<char> used(tgt.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == dom.size()) {
      PartialBijection p{acc};
      out.push_back(std::move(p));
      return;
    }
    self(self, i + 1);  // undefined at dom[i]
    for (std::size_t t = 0; t < tgt.size(); ++t) {
      if (used[t]) continue;
      used[t] = 1;
      acc.emplace_back(dom[i], tgt[t]);
      self(self, i + 1);
      acc.pop_back();
      used[t] = 0;
    }
  };
  rec(rec, 0);
}

std::vector<PartialBijection> all_partial_bijections(const std::vector<int>& src,
                                                     const std::vector<int>& tgt) {
  std::vector<PartialBijection> out;
  partial_bijections_into(src, tgt, out);
  for (auto& p : out) std::sort(p.graph.begin(), p.graph.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All functional graphs src -> tgt (not necessarily injective).
std::vector<PartialBijection> all_partial_functions(const std::vector<int>& src,
                                                    const std::vector<int>& tgt) {
  std::vector<PartialBijection> out;
  std::vector<std::pair<int, int>> acc;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == src.size()) {
      out.push_back(PartialBijection{acc});
      return;
    }
    self(self, i + 1);
    for (int t : tgt) {
      acc.emplace_back(src[i], t);
      self(self, i + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
  for (auto& p : out) std::sort(p.graph.begin(), p.graph.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> range_set(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

}  // namespace

PartialBijection PartialBijection::identity(const std::vector<int>& set) {
  PartialBijection p;
  for (int x : set) p.graph.emplace_back(x, x);
  std::sort(p.graph.begin(), p.graph.end());
  return p;
}

PartialBijection PartialBijection::converse() const {
  PartialBijection p;
  for (const auto& [a, b] : graph) p.graph.emplace_back(b, a);
  std::sort(p.graph.begin(), p.graph.end());
  return p;
}

PartialBijection PartialBijection::domain_identity() const {
  PartialBijection p;
  for (const auto& [a, _] : graph) p.graph.emplace_back(a, a);
  std::sort(p.graph.begin(), p.graph.end());
  return p;
}

bool PartialBijection::is_idempotent() const { return compose(*this, *this) == *this; }

PartialBijection compose(const PartialBijection& g, const PartialBijection& f) {
  PartialBijection out;
  for (const auto& [x, y] : f.graph)
    for (const auto& [a, b] : g.graph)
      if (a == y) out.graph.emplace_back(x, b);
  std::sort(out.graph.begin(), out.graph.end());
  return out;
}

std::string graph_code(const PartialBijection& p) {
  if (p.graph.empty()) return "0";
  std::string s;
  for (const auto& [a, b] : p.graph) {
    if (!s.empty()) s += '+';
    s += std::to_string(a);
    s += '-';
    s += std::to_string(b);
  }
  return s;
}

InverseCert symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 5) throw InputError("symmetric_inverse_monoid: n must be in 1..5");
  const std::vector<int> base = range_set(n);
  std::vector<PartialBijection> maps = all_partial_bijections(base, base);

  std::vector<std::pair<Id, std::size_t>> order;  // id -> position in maps
  order.reserve(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) order.emplace_back(graph_code(maps[i]), i);
  std::sort(order.begin(), order.end());

  const std::size_t count = maps.size();
  std::vector<PartialBijection> sorted(count);
  std::vector<FinCategory::Arrow> arrows(count);
  for (std::size_t i = 0; i < count; ++i) {
    sorted[i] = maps[order[i].second];
    arrows[i] = {order[i].first, 0, 0};
  }
  auto index_of = [&](const PartialBijection& p) {
    Id code = graph_code(p);
    auto it = std::lower_bound(order.begin(), order.end(), code,
                               [](const auto& a, const Id& b) { return a.first < b; });
    return static_cast<int>(it - order.begin());
  };

  std::vector<int> comp(count * count, -1);
  std::vector<int> rbar(count), inv(count);
  for (std::size_t g = 0; g < count; ++g) {
    rbar[g] = index_of(sorted[g].domain_identity());
    inv[g] = index_of(sorted[g].converse());
    for (std::size_t f = 0; f < count; ++f)
      comp[g * count + f] = index_of(compose(sorted[g], sorted[f]));
  }
  std::vector<int> ident{index_of(PartialBijection::identity(base))};

  CatPtr cat = FinCategory::from_tables({"M"}, std::move(arrows), std::move(comp),
                                        std::move(ident));
  return InverseCert{RestrictionData{std::move(cat), std::move(rbar)}, std::move(inv)};
}

namespace {

Id position_object_id(std::size_t i) { return "X" + std::to_string(i); }

Id positioned_arrow_id(std::size_t i, std::size_t j, const PartialBijection& p) {
  return position_object_id(i) + "." + position_object_id(j) + ":" + graph_code(p);
}

template <typename MapEnumerator>
std::pair<CatPtr, std::vector<int>> build_map_category(const std::vector<std::vector<int>>& sets,
                                                       MapEnumerator&& enumerate) {
  if (sets.empty()) throw InputError("at least one set is required");
  std::vector<std::vector<int>> sorted_sets = sets;
  for (auto& s : sorted_sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  const std::size_t k = sorted_sets.size();

  std::vector<Id> objects;
  for (std::size_t i = 0; i < k; ++i) objects.push_back(position_object_id(i));
  std::sort(objects.begin(), objects.end());

  std::map<std::pair<std::size_t, std::size_t>, std::vector<PartialBijection>> homs;
  std::vector<FinCategory::Arrow> arrows;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      homs[{i, j}] = enumerate(sorted_sets[i], sorted_sets[j]);
      for (const auto& p : homs[{i, j}])
        arrows.push_back({positioned_arrow_id(i, j, p), static_cast<int>(i), static_cast<int>(j)});
    }
  std::sort(arrows.begin(), arrows.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  // Object index = position only while position ids sort numerically.
  if (k > 9) throw InputError("at most 9 sets are supported");

  std::map<Id, int> arrow_at;
  for (std::size_t i = 0; i < arrows.size(); ++i) arrow_at[arrows[i].id] = static_cast<int>(i);
  auto idx = [&](std::size_t i, std::size_t j, const PartialBijection& p) {
    return arrow_at.at(positioned_arrow_id(i, j, p));
  };

  const std::size_t na = arrows.size();
  std::vector<int> comp(na * na, -1);
  std::vector<int> rbar(na), ident(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    ident[i] = idx(i, i, PartialBijection::identity(sorted_sets[i]));
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& p : homs[{i, j}]) {
        rbar[static_cast<std::size_t>(idx(i, j, p))] = idx(i, i, p.domain_identity());
        for (std::size_t l = 0; l < k; ++l)
          for (const auto& g : homs[{j, l}])
            comp[static_cast<std::size_t>(idx(j, l, g)) * na +
                 static_cast<std::size_t>(idx(i, j, p))] = idx(i, l, compose(g, p));
      }
  }

  CatPtr cat = FinCategory::from_tables(std::move(objects), std::move(arrows), std::move(comp),
                                        std::move(ident));
  return {std::move(cat), std::move(rbar)};
}

}  // namespace

InverseCert partial_bijection_category(const std::vector<std::vector<int>>& sets) {
  auto [cat, rbar] = build_map_category(sets, [](const auto& a, const auto& b) {
    return all_partial_bijections(a, b);
  });

  std::vector<std::vector<int>> sorted_sets = sets;
  for (auto& s : sorted_sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::vector<int> inv(static_cast<std::size_t>(cat->arrow_count()));
  for (std::size_t i = 0; i < sorted_sets.size(); ++i)
    for (std::size_t j = 0; j < sorted_sets.size(); ++j)
      for (const auto& p : all_partial_bijections(sorted_sets[i], sorted_sets[j])) {
        int idx = cat->arrow_index(positioned_arrow_id(i, j, p));
        inv[static_cast<std::size_t>(idx)] =
            cat->arrow_index(positioned_arrow_id(j, i, p.converse()));
      }
  return InverseCert{RestrictionData{std::move(cat), std::move(rbar)}, std::move(inv)};
}

RestrictionData partial_function_category(const std::vector<std::vector<int>>& sets) {
  auto [cat, rbar] = build_map_category(sets, [](const auto& a, const auto& b) {
    return all_partial_functions(a, b);
  });
  return RestrictionData{std::move(cat), std::move(rbar)};
}

InverseSemigroupTable closure_subsemigroup(int n, const std::vector<std::string>& seed_ids) {
  if (seed_ids.empty()) throw InputError("closure_subsemigroup: empty seed");
  const std::vector<int> base = range_set(n);
  const std::vector<PartialBijection> all = all_partial_bijections(base, base);
  std::map<std::string, PartialBijection> by_code;
  for (const auto& p : all) by_code[graph_code(p)] = p;

  std::set<PartialBijection> closed;
  for (const auto& id : seed_ids) {
    auto it = by_code.find(id);
    if (it == by_code.end()) throw InputError("closure_subsemigroup: unknown element " + id);
    closed.insert(it->second);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PartialBijection> snapshot(closed.begin(), closed.end());
    for (const auto& a : snapshot) {
      if (closed.insert(a.converse()).second) grew = true;
      for (const auto& b : snapshot)
        if (closed.insert(compose(a, b)).second) grew = true;
    }
  }

  InverseSemigroupTable table;
  std::vector<PartialBijection> elems(closed.begin(), closed.end());
  std::sort(elems.begin(), elems.end(),
            [](const auto& a, const auto& b) { return graph_code(a) < graph_code(b); });
  for (const auto& p : elems) table.elements.push_back(graph_code(p));
  const int count = static_cast<int>(elems.size());
  auto index_of = [&](const PartialBijection& p) {
    for (int i = 0; i < count; ++i)
      if (elems[static_cast<std::size_t>(i)] == p) return i;
    throw StructuralError("closure_subsemigroup: product escaped the closure");
  };
  table.mul.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(count), -1);
  table.inv.assign(static_cast<std::size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    table.inv[static_cast<std::size_t>(i)] = index_of(elems[static_cast<std::size_t>(i)].converse());
    for (int j = 0; j < count; ++j)
      table.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(count) +
                static_cast<std::size_t>(j)] =
          index_of(compose(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
  }
  return table;
}

InverseSemigroupTable semigroup_of(const InverseCert& one_object) {
  const FinCategory& c = one_object.cat();
  if (c.object_count() != 1) throw InputError("semigroup_of: the category must have one object");
  InverseSemigroupTable table;
  const int n = c.arrow_count();
  for (int a = 0; a < n; ++a) table.elements.push_back(c.arrow_id(a));
  table.mul.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  table.inv.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    table.inv[static_cast<std::size_t>(a)] = one_object.iv(a);
    for (int b = 0; b < n; ++b)
      table.mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)] = c.comp(a, b);
  }
  return table;
}

}  // namespace invcat
