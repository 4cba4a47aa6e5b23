#include "invcat/fincat.hpp"

#include <algorithm>
#include <array>

#include "invcat/kernels.hpp"

namespace invcat {

int FinCategory::object_index(std::string_view id) const {
  auto it = object_index_.find(std::string(id));
  return it == object_index_.end() ? -1 : it->second;
}

int FinCategory::arrow_index(std::string_view id) const {
  auto it = arrow_index_.find(std::string(id));
  return it == arrow_index_.end() ? -1 : it->second;
}

bool FinCategory::has_all_identities() const noexcept {
  return std::all_of(ident_.begin(), ident_.end(), [](int i) { return i >= 0; });
}

std::vector<int> FinCategory::hom(int A, int B) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (dom(a) == A && cod(a) == B) out.push_back(a);
  return out;
}

CatPtr FinCategory::from_tables(std::vector<Id> objects, std::vector<Arrow> arrows,
                                std::vector<int> comp, std::vector<int> ident) {
  auto cat = std::make_shared<FinCategory>();
  const std::size_t no = objects.size();
  const std::size_t na = arrows.size();
  if (!std::is_sorted(objects.begin(), objects.end()) ||
      std::adjacent_find(objects.begin(), objects.end()) != objects.end())
    throw InputError("from_tables: object ids must be sorted and unique");
  if (!std::is_sorted(arrows.begin(), arrows.end(),
                      [](const Arrow& a, const Arrow& b) { return a.id < b.id; }))
    throw InputError("from_tables: arrow ids must be sorted");
  if (comp.size() != na * na || ident.size() != no) throw InputError("from_tables: table sizes");
  for (const Arrow& a : arrows)
    if (a.dom < 0 || a.dom >= static_cast<int>(no) || a.cod < 0 || a.cod >= static_cast<int>(no))
      throw InputError("from_tables: arrow endpoints out of range");
  for (int v : comp)
    if (v < -1 || v >= static_cast<int>(na)) throw InputError("from_tables: comp out of range");
  for (int v : ident)
    if (v < -1 || v >= static_cast<int>(na)) throw InputError("from_tables: ident out of range");

  cat->objects_ = std::move(objects);
  cat->arrows_ = std::move(arrows);
  cat->comp_ = std::move(comp);
  cat->ident_ = std::move(ident);
  for (int i = 0; i < static_cast<int>(no); ++i)
    cat->object_index_.emplace(cat->objects_[static_cast<std::size_t>(i)], i);
  for (int i = 0; i < static_cast<int>(na); ++i) {
    if (!cat->arrow_index_.emplace(cat->arrows_[static_cast<std::size_t>(i)].id, i).second)
      throw InputError("from_tables: duplicate arrow id " +
                       cat->arrows_[static_cast<std::size_t>(i)].id);
  }
  return cat;
}

void FinCategoryBuilder::add_object(Id id) { objects_.push_back(std::move(id)); }

void FinCategoryBuilder::add_arrow(Id id, const Id& dom, const Id& cod) {
  arrows_.push_back({std::move(id), dom, cod});
}

void FinCategoryBuilder::set_comp(const Id& g, const Id& f, const Id& gf) {
  comps_.push_back({g, f, gf});
}

void FinCategoryBuilder::set_ident(const Id& obj, const Id& arrow) {
  idents_.emplace_back(obj, arrow);
}

CatPtr FinCategoryBuilder::build() {
  auto cat = std::make_shared<FinCategory>();

  std::sort(objects_.begin(), objects_.end());
  for (std::size_t i = 0; i + 1 < objects_.size(); ++i)
    if (objects_[i] == objects_[i + 1]) throw InputError("duplicate object id: " + objects_[i]);
  cat->objects_ = objects_;
  for (int i = 0; i < static_cast<int>(objects_.size()); ++i)
    cat->object_index_.emplace(objects_[static_cast<std::size_t>(i)], i);

  std::sort(arrows_.begin(), arrows_.end(),
            [](const RawArrow& a, const RawArrow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < arrows_.size(); ++i)
    if (arrows_[i].id == arrows_[i + 1].id)
      throw InputError("duplicate arrow id: " + arrows_[i].id);
  cat->arrows_.reserve(arrows_.size());
  for (const RawArrow& raw : arrows_) {
    int d = cat->object_index(raw.dom);
    int c = cat->object_index(raw.cod);
    if (d < 0) throw InputError("arrow " + raw.id + ": unknown object " + raw.dom);
    if (c < 0) throw InputError("arrow " + raw.id + ": unknown object " + raw.cod);
    cat->arrows_.push_back({raw.id, d, c});
  }
  for (int i = 0; i < static_cast<int>(cat->arrows_.size()); ++i)
    cat->arrow_index_.emplace(cat->arrows_[static_cast<std::size_t>(i)].id, i);

  const std::size_t n = cat->arrows_.size();
  cat->comp_.assign(n * n, -1);
  for (const auto& [g, f, gf] : comps_) {
    int gi = cat->arrow_index(g), fi = cat->arrow_index(f), ri = cat->arrow_index(gf);
    if (gi < 0 || fi < 0 || ri < 0)
      throw InputError("composition references unknown arrow: " + g + " " + f + " " + gf);
    int& slot = cat->comp_[static_cast<std::size_t>(gi) * n + static_cast<std::size_t>(fi)];
    if (slot >= 0 && slot != ri)
      throw InputError("conflicting composition entries for (" + g + ", " + f + ")");
    slot = ri;
  }

  cat->ident_.assign(cat->objects_.size(), -1);
  for (const auto& [obj, arr] : idents_) {
    int oi = cat->object_index(obj), ai = cat->arrow_index(arr);
    if (oi < 0) throw InputError("identity for unknown object " + obj);
    if (ai < 0) throw InputError("identity references unknown arrow " + arr);
    int& slot = cat->ident_[static_cast<std::size_t>(oi)];
    if (slot >= 0 && slot != ai) throw InputError("conflicting identity entries for " + obj);
    slot = ai;
  }
  return cat;
}

FunctorData identity_functor(const CatPtr& c) {
  FunctorData f;
  f.source = c;
  f.target = c;
  f.obj_map.resize(static_cast<std::size_t>(c->object_count()));
  f.arr_map.resize(static_cast<std::size_t>(c->arrow_count()));
  for (int i = 0; i < c->object_count(); ++i) f.obj_map[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < c->arrow_count(); ++i) f.arr_map[static_cast<std::size_t>(i)] = i;
  return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  if (f.target.get() != g.source.get())
    throw InputError("compose_functors: boundary categories do not match");
  FunctorData out;
  out.source = f.source;
  out.target = g.target;
  out.obj_map.reserve(f.obj_map.size());
  out.arr_map.reserve(f.arr_map.size());
  for (int o : f.obj_map) out.obj_map.push_back(g.obj_map[static_cast<std::size_t>(o)]);
  for (int a : f.arr_map) out.arr_map.push_back(g.arr_map[static_cast<std::size_t>(a)]);
  return out;
}

ValidationReport validate_category(const FinCategory& c, Exec exec, bool require_identities) {
  return exec == Exec::parallel ? par::category_laws(c, require_identities)
                                : ref::category_laws(c, require_identities);
}

ValidationReport validate_functor(const FunctorData& f, Exec exec, bool require_identities) {
  if (f.obj_map.size() != static_cast<std::size_t>(f.source->object_count()) ||
      f.arr_map.size() != static_cast<std::size_t>(f.source->arrow_count()))
    throw InputError("validate_functor: map sizes do not match the source");
  return exec == Exec::parallel ? par::functor_laws(f, require_identities)
                                : ref::functor_laws(f, require_identities);
}

std::vector<Id> hom_set(const FinCategory& c, const Id& A, const Id& B) {
  int ai = c.object_index(A);
  int bi = c.object_index(B);
  if (ai < 0) throw InputError("hom_set: unknown object " + A);
  if (bi < 0) throw InputError("hom_set: unknown object " + B);
  std::vector<Id> out;
  for (int a : c.hom(ai, bi)) out.push_back(c.arrow_id(a));
  return out;
}

}  // namespace invcat
