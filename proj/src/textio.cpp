#include "invcat/textio.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace invcat {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::category: return "category";
    case Kind::restriction: return "restriction";
    case Kind::inverse: return "inverse";
    case Kind::ordered_groupoid: return "ordered-groupoid";
    case Kind::semigroup: return "semigroup";
    case Kind::functor: return "functor";
  }
  return "?";
}

namespace {

std::optional<Kind> kind_from(const std::string& name) {
  for (Kind k : {Kind::category, Kind::restriction, Kind::inverse, Kind::ordered_groupoid,
                 Kind::semigroup, Kind::functor})
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    toks.push_back(tok);
  }
  return toks;
}

// Raw records; ids are resolved once the full table is known, but declaration
// order is still enforced line by line.
struct RawFile {
  Kind kind;
  bool semicategory = false;
  std::vector<Id> objects;
  std::vector<std::array<Id, 3>> arrows;  // id dom cod
  std::vector<std::array<Id, 3>> comps;   // g f gf
  std::vector<std::pair<Id, Id>> idents;  // object arrow
  std::vector<std::pair<Id, Id>> rbars;
  std::vector<std::pair<Id, Id>> invs;
  std::vector<std::pair<Id, Id>> orders;
  std::vector<std::pair<Id, std::vector<Id>>> blocks;  // name members
  std::vector<std::pair<Id, Id>> tops;                 // name object
  std::vector<Id> elems;
  std::vector<std::array<Id, 3>> muls;
  std::shared_ptr<Structure> source, target;
  std::vector<std::pair<Id, Id>> objmaps, arrmaps;
};

class Parser {
 public:
  explicit Parser(std::istream& in) : in_(in) {}

  Structure parse(bool nested) {
    RawFile raw = read_lines(nested);
    return resolve(raw);
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

  void expect_args(const std::vector<std::string>& toks, std::size_t count) const {
    if (toks.size() != count + 1)
      fail(toks[0] + " expects " + std::to_string(count) + " field(s)");
  }

  RawFile read_lines(bool nested) {
    RawFile raw;
    std::set<Id> objects, arrows, elems, blocks;
    bool have_kind = false;
    std::string line;

    auto known_object = [&](const Id& id) {
      if (!objects.count(id)) fail("object " + id + " not declared");
    };
    auto known_arrow = [&](const Id& id) {
      if (!arrows.count(id)) fail("arrow " + id + " not declared");
    };
    auto known_elem = [&](const Id& id) {
      if (!elems.count(id)) fail("element " + id + " not declared");
    };

    while (std::getline(in_, line)) {
      ++line_;
      std::vector<std::string> toks = tokens_of(line);
      if (toks.empty()) continue;
      const std::string& key = toks[0];

      if (key == "end") {
        if (!nested) fail("end outside a functor section");
        if (!have_kind) fail("section ended before a kind line");
        return raw;
      }
      if (key == "kind") {
        if (have_kind) fail("duplicate kind line");
        if (toks.size() < 2 || toks.size() > 3) fail("kind expects a tag");
        auto k = kind_from(toks[1]);
        if (!k) fail("unknown kind tag " + toks[1]);
        raw.kind = *k;
        if (toks.size() == 3) {
          if (toks[2] != "semicategory") fail("unknown kind modifier " + toks[2]);
          raw.semicategory = true;
        }
        have_kind = true;
        continue;
      }
      if (!have_kind) fail("the first record must be a kind line");

      if (raw.kind == Kind::semigroup) {
        if (key == "elem") {
          expect_args(toks, 1);
          if (!elems.insert(toks[1]).second) fail("duplicate element " + toks[1]);
          raw.elems.push_back(toks[1]);
        } else if (key == "mul") {
          expect_args(toks, 3);
          known_elem(toks[1]);
          known_elem(toks[2]);
          known_elem(toks[3]);
          raw.muls.push_back({toks[1], toks[2], toks[3]});
        } else if (key == "inv") {
          expect_args(toks, 2);
          known_elem(toks[1]);
          known_elem(toks[2]);
          raw.invs.emplace_back(toks[1], toks[2]);
        } else {
          fail("record " + key + " is not part of a semigroup file");
        }
        continue;
      }

      if (raw.kind == Kind::functor) {
        if (key == "begin") {
          expect_args(toks, 1);
          auto sub = std::make_shared<Structure>(Parser(in_).parse_into(line_, true));
          if (toks[1] == "source") {
            if (raw.source) fail("duplicate source section");
            raw.source = std::move(sub);
          } else if (toks[1] == "target") {
            if (raw.target) fail("duplicate target section");
            raw.target = std::move(sub);
          } else {
            fail("begin expects source or target");
          }
        } else if (key == "objmap") {
          expect_args(toks, 2);
          raw.objmaps.emplace_back(toks[1], toks[2]);
        } else if (key == "arrmap") {
          expect_args(toks, 2);
          raw.arrmaps.emplace_back(toks[1], toks[2]);
        } else {
          fail("record " + key + " is not part of a functor file");
        }
        continue;
      }

      // category-like kinds
      if (key == "object") {
        expect_args(toks, 1);
        if (!objects.insert(toks[1]).second) fail("duplicate object " + toks[1]);
        raw.objects.push_back(toks[1]);
      } else if (key == "arrow") {
        expect_args(toks, 3);
        known_object(toks[2]);
        known_object(toks[3]);
        if (!arrows.insert(toks[1]).second) fail("duplicate arrow " + toks[1]);
        raw.arrows.push_back({toks[1], toks[2], toks[3]});
      } else if (key == "comp") {
        expect_args(toks, 3);
        known_arrow(toks[1]);
        known_arrow(toks[2]);
        known_arrow(toks[3]);
        raw.comps.push_back({toks[1], toks[2], toks[3]});
      } else if (key == "ident") {
        expect_args(toks, 2);
        known_object(toks[1]);
        known_arrow(toks[2]);
        raw.idents.emplace_back(toks[1], toks[2]);
      } else if (key == "rbar") {
        if (raw.kind != Kind::restriction && raw.kind != Kind::inverse)
          fail("rbar is only part of restriction and inverse files");
        expect_args(toks, 2);
        known_arrow(toks[1]);
        known_arrow(toks[2]);
        raw.rbars.emplace_back(toks[1], toks[2]);
      } else if (key == "inv") {
        if (raw.kind != Kind::inverse && raw.kind != Kind::ordered_groupoid)
          fail("inv is only part of inverse and ordered-groupoid files");
        expect_args(toks, 2);
        known_arrow(toks[1]);
        known_arrow(toks[2]);
        raw.invs.emplace_back(toks[1], toks[2]);
      } else if (key == "order") {
        if (raw.kind != Kind::ordered_groupoid)
          fail("order is only part of ordered-groupoid files");
        expect_args(toks, 2);
        known_arrow(toks[1]);
        known_arrow(toks[2]);
        raw.orders.emplace_back(toks[1], toks[2]);
      } else if (key == "block") {
        if (raw.kind != Kind::ordered_groupoid)
          fail("block is only part of ordered-groupoid files");
        if (toks.size() < 3) fail("block expects a name and at least one object");
        if (!blocks.insert(toks[1]).second) fail("duplicate block " + toks[1]);
        std::vector<Id> members(toks.begin() + 2, toks.end());
        for (const Id& m : members) known_object(m);
        raw.blocks.emplace_back(toks[1], std::move(members));
      } else if (key == "top") {
        if (raw.kind != Kind::ordered_groupoid)
          fail("top is only part of ordered-groupoid files");
        expect_args(toks, 2);
        if (!blocks.count(toks[1])) fail("block " + toks[1] + " not declared");
        known_object(toks[2]);
        raw.tops.emplace_back(toks[1], toks[2]);
      } else {
        fail("unknown record " + key);
      }
    }
    if (nested) fail("unterminated functor section (missing end)");
    if (!have_kind) fail("empty input: no kind line");
    return raw;
  }

  // Nested sections continue on the same stream and line counter.
  Structure parse_into(int& outer_line, bool nested) {
    line_ = outer_line;
    Structure s = parse(nested);
    outer_line = line_;
    return s;
  }

  Structure resolve(RawFile& raw) {
    Structure s;
    s.kind = raw.kind;
    s.semicategory = raw.semicategory;

    if (raw.kind == Kind::semigroup) {
      InverseSemigroupTable t;
      t.elements = raw.elems;
      std::sort(t.elements.begin(), t.elements.end());
      const std::size_t n = t.elements.size();
      auto at = [&](const Id& id) {
        return static_cast<int>(std::lower_bound(t.elements.begin(), t.elements.end(), id) -
                                t.elements.begin());
      };
      t.mul.assign(n * n, -1);
      for (const auto& [a, b, ab] : raw.muls) {
        int& slot = t.mul[static_cast<std::size_t>(at(a)) * n + static_cast<std::size_t>(at(b))];
        if (slot >= 0 && slot != at(ab)) fail("conflicting mul entries for " + a + " " + b);
        slot = at(ab);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (t.mul[i * n + j] < 0)
            fail("mul missing for " + t.elements[i] + " " + t.elements[j]);
      t.inv.assign(n, -1);
      if (!raw.invs.empty()) {
        for (const auto& [a, b] : raw.invs) t.inv[static_cast<std::size_t>(at(a))] = at(b);
        for (std::size_t i = 0; i < n; ++i)
          if (t.inv[i] < 0) fail("inv missing for " + t.elements[i]);
      } else {
        // Unique pseudoinverse search; ambiguity means not an inverse semigroup.
        for (int a = 0; a < static_cast<int>(n); ++a) {
          int found = -1;
          for (int b = 0; b < static_cast<int>(n); ++b) {
            if (t.product(t.product(a, b), a) == a && t.product(t.product(b, a), b) == b) {
              if (found >= 0)
                throw InputError("element " + t.elements[static_cast<std::size_t>(a)] +
                                 " has two pseudoinverses; not an inverse semigroup");
              found = b;
            }
          }
          if (found < 0)
            throw InputError("element " + t.elements[static_cast<std::size_t>(a)] +
                             " has no pseudoinverse");
          t.inv[static_cast<std::size_t>(a)] = found;
        }
      }
      s.semigroup = std::move(t);
      return s;
    }

    if (raw.kind == Kind::functor) {
      if (!raw.source || !raw.target) fail("functor files need source and target sections");
      s.source = std::move(raw.source);
      s.target = std::move(raw.target);
      s.obj_map_ids = std::move(raw.objmaps);
      s.arr_map_ids = std::move(raw.arrmaps);
      // Resolution against the two categories happens in functor_of; here we
      // only require totality and id existence.
      if (!s.source->cat || !s.target->cat)
        fail("functor source and target must be category-like files");
      for (const auto& [a, b] : s.obj_map_ids) {
        if (s.source->cat->object_index(a) < 0) fail("objmap: unknown source object " + a);
        if (s.target->cat->object_index(b) < 0) fail("objmap: unknown target object " + b);
      }
      for (const auto& [a, b] : s.arr_map_ids) {
        if (s.source->cat->arrow_index(a) < 0) fail("arrmap: unknown source arrow " + a);
        if (s.target->cat->arrow_index(b) < 0) fail("arrmap: unknown target arrow " + b);
      }
      for (int o = 0; o < s.source->cat->object_count(); ++o) {
        const Id& id = s.source->cat->object_id(o);
        if (std::count_if(s.obj_map_ids.begin(), s.obj_map_ids.end(),
                          [&](const auto& p) { return p.first == id; }) != 1)
          fail("objmap must list every source object exactly once (" + id + ")");
      }
      for (int a = 0; a < s.source->cat->arrow_count(); ++a) {
        const Id& id = s.source->cat->arrow_id(a);
        if (std::count_if(s.arr_map_ids.begin(), s.arr_map_ids.end(),
                          [&](const auto& p) { return p.first == id; }) != 1)
          fail("arrmap must list every source arrow exactly once (" + id + ")");
      }
      return s;
    }

    FinCategoryBuilder builder;
    for (const Id& o : raw.objects) builder.add_object(o);
    for (const auto& [id, dom, cod] : raw.arrows) builder.add_arrow(id, dom, cod);
    for (const auto& [g, f, gf] : raw.comps) builder.set_comp(g, f, gf);
    for (const auto& [o, e] : raw.idents) builder.set_ident(o, e);
    try {
      s.cat = builder.build();
    } catch (const InputError& e) {
      throw ParseError(e.what());
    }
    const FinCategory& c = *s.cat;

    if (raw.kind == Kind::restriction || raw.kind == Kind::inverse) {
      s.rbar.assign(static_cast<std::size_t>(c.arrow_count()), -1);
      for (const auto& [f, e] : raw.rbars)
        s.rbar[static_cast<std::size_t>(c.arrow_index(f))] = c.arrow_index(e);
      for (int f = 0; f < c.arrow_count(); ++f)
        if (s.rbar[static_cast<std::size_t>(f)] < 0)
          fail("rbar missing for arrow " + c.arrow_id(f));
    }
    if (raw.kind == Kind::inverse || raw.kind == Kind::ordered_groupoid) {
      if (!raw.invs.empty()) {
        s.inv.assign(static_cast<std::size_t>(c.arrow_count()), -1);
        for (const auto& [f, g] : raw.invs)
          s.inv[static_cast<std::size_t>(c.arrow_index(f))] = c.arrow_index(g);
        for (int f = 0; f < c.arrow_count(); ++f)
          if (s.inv[static_cast<std::size_t>(f)] < 0)
            fail("inv missing for arrow " + c.arrow_id(f));
      } else if (raw.kind == Kind::ordered_groupoid) {
        fail("ordered-groupoid files need inv records");
      }
    }
    if (raw.kind == Kind::ordered_groupoid) {
      for (const auto& [f, g] : raw.orders)
        s.order.emplace_back(c.arrow_index(f), c.arrow_index(g));
      std::map<Id, std::size_t> block_index;
      for (const auto& [name, members] : raw.blocks) {
        block_index[name] = s.blocks.size();
        std::vector<int> blk;
        for (const Id& m : members) blk.push_back(c.object_index(m));
        std::sort(blk.begin(), blk.end());
        s.blocks.push_back(std::move(blk));
        s.tops.push_back(-1);
      }
      for (const auto& [name, obj] : raw.tops)
        s.tops[block_index.at(name)] = c.object_index(obj);
    }
    return s;
  }
};

void write_category_sections(const Structure& s, std::ostream& out) {
  const FinCategory& c = *s.cat;
  for (int o = 0; o < c.object_count(); ++o) out << "object " << c.object_id(o) << "\n";
  for (int a = 0; a < c.arrow_count(); ++a)
    out << "arrow " << c.arrow_id(a) << " " << c.object_id(c.dom(a)) << " "
        << c.object_id(c.cod(a)) << "\n";
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int f = 0; f < c.arrow_count(); ++f)
      if (c.comp(g, f) >= 0)
        out << "comp " << c.arrow_id(g) << " " << c.arrow_id(f) << " " << c.arrow_id(c.comp(g, f))
            << "\n";
  for (int o = 0; o < c.object_count(); ++o)
    if (c.ident(o) >= 0)
      out << "ident " << c.object_id(o) << " " << c.arrow_id(c.ident(o)) << "\n";
}

}  // namespace

Structure parse_structure(std::istream& in) { return Parser(in).parse(false); }

void serialize_structure(const Structure& s, std::ostream& out) {
  out << "kind " << kind_name(s.kind);
  if (s.semicategory) out << " semicategory";
  out << "\n";

  if (s.kind == Kind::semigroup) {
    const InverseSemigroupTable& t = *s.semigroup;
    for (const Id& e : t.elements) out << "elem " << e << "\n";
    for (int a = 0; a < t.size(); ++a)
      for (int b = 0; b < t.size(); ++b)
        out << "mul " << t.elements[static_cast<std::size_t>(a)] << " "
            << t.elements[static_cast<std::size_t>(b)] << " "
            << t.elements[static_cast<std::size_t>(t.product(a, b))] << "\n";
    for (int a = 0; a < t.size(); ++a)
      out << "inv " << t.elements[static_cast<std::size_t>(a)] << " "
          << t.elements[static_cast<std::size_t>(t.pinv(a))] << "\n";
    return;
  }

  if (s.kind == Kind::functor) {
    out << "begin source\n";
    serialize_structure(*s.source, out);
    out << "end\n";
    out << "begin target\n";
    serialize_structure(*s.target, out);
    out << "end\n";
    auto obj_sorted = s.obj_map_ids;
    auto arr_sorted = s.arr_map_ids;
    std::sort(obj_sorted.begin(), obj_sorted.end());
    std::sort(arr_sorted.begin(), arr_sorted.end());
    for (const auto& [a, b] : obj_sorted) out << "objmap " << a << " " << b << "\n";
    for (const auto& [a, b] : arr_sorted) out << "arrmap " << a << " " << b << "\n";
    return;
  }

  write_category_sections(s, out);
  const FinCategory& c = *s.cat;
  if (s.kind == Kind::restriction || s.kind == Kind::inverse)
    for (int f = 0; f < c.arrow_count(); ++f)
      out << "rbar " << c.arrow_id(f) << " " << c.arrow_id(s.rbar[static_cast<std::size_t>(f)])
          << "\n";
  if (!s.inv.empty())
    for (int f = 0; f < c.arrow_count(); ++f)
      out << "inv " << c.arrow_id(f) << " " << c.arrow_id(s.inv[static_cast<std::size_t>(f)])
          << "\n";
  if (s.kind == Kind::ordered_groupoid) {
    auto sorted = s.order;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& [f, g] : sorted)
      out << "order " << c.arrow_id(f) << " " << c.arrow_id(g) << "\n";
    for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
      out << "block b" << bi;
      for (int o : s.blocks[bi]) out << " " << c.object_id(o);
      out << "\n";
    }
    for (std::size_t bi = 0; bi < s.blocks.size(); ++bi)
      if (s.tops[bi] >= 0) out << "top b" << bi << " " << c.object_id(s.tops[bi]) << "\n";
  }
}

RestrictionData restriction_of(const Structure& s) {
  if (s.kind != Kind::restriction && s.kind != Kind::inverse)
    throw InputError("expected a restriction or inverse file, got " +
                     std::string(kind_name(s.kind)));
  return RestrictionData{s.cat, s.rbar};
}

OrderedGroupoid groupoid_of(const Structure& s) {
  if (s.kind != Kind::ordered_groupoid)
    throw InputError("expected an ordered-groupoid file, got " + std::string(kind_name(s.kind)));
  return OrderedGroupoid(s.cat, s.inv, s.order);
}

FunctorData functor_of(const Structure& s) {
  if (s.kind != Kind::functor)
    throw InputError("expected a functor file, got " + std::string(kind_name(s.kind)));
  FunctorData f;
  f.source = s.source->cat;
  f.target = s.target->cat;
  f.obj_map.assign(static_cast<std::size_t>(f.source->object_count()), -1);
  f.arr_map.assign(static_cast<std::size_t>(f.source->arrow_count()), -1);
  for (const auto& [a, b] : s.obj_map_ids)
    f.obj_map[static_cast<std::size_t>(f.source->object_index(a))] = f.target->object_index(b);
  for (const auto& [a, b] : s.arr_map_ids)
    f.arr_map[static_cast<std::size_t>(f.source->arrow_index(a))] = f.target->arrow_index(b);
  return f;
}

Structure make_category_structure(CatPtr cat, bool semicategory) {
  Structure s;
  s.kind = Kind::category;
  s.semicategory = semicategory;
  s.cat = std::move(cat);
  return s;
}

Structure make_restriction_structure(const RestrictionData& r, bool semicategory) {
  Structure s;
  s.kind = Kind::restriction;
  s.semicategory = semicategory;
  s.cat = r.base;
  s.rbar = r.rbar;
  return s;
}

Structure make_inverse_structure(const InverseCert& c, bool semicategory) {
  Structure s;
  s.kind = Kind::inverse;
  s.semicategory = semicategory;
  s.cat = c.rd.base;
  s.rbar = c.rd.rbar;
  s.inv = c.inv;
  return s;
}

Structure make_groupoid_structure(const OrderedGroupoid& g, const SemilatticePartition* p,
                                  bool semicategory) {
  Structure s;
  s.kind = Kind::ordered_groupoid;
  s.semicategory = semicategory;
  s.cat = g.base();
  s.inv = g.ginv_table();
  s.order = g.order_pairs();
  if (p) {
    s.blocks = p->blocks;
    s.tops = p->tops;
  }
  return s;
}

Structure make_semigroup_structure(const InverseSemigroupTable& t) {
  Structure s;
  s.kind = Kind::semigroup;
  s.semigroup = t;
  return s;
}

}  // namespace invcat
