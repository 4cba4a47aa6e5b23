#include "invcat/ogroupoid.hpp"

#include <algorithm>
#include <numeric>

#include "invcat/kernels.hpp"

namespace invcat {

OrderedGroupoid::OrderedGroupoid(CatPtr base, std::vector<int> ginv,
                                 std::vector<std::pair<int, int>> order)
    : base_(std::move(base)), ginv_(std::move(ginv)), order_(std::move(order)) {
  const int n = base_->arrow_count();
  if (static_cast<int>(ginv_.size()) != n) throw InputError("ginv is not total on arrows");
  for (int v : ginv_)
    if (v < 0 || v >= n) throw InputError("ginv out of range");
  for (const auto& [f, g] : order_)
    if (f < 0 || f >= n || g < 0 || g >= n) throw InputError("order pair out of range");

  for (int f = 0; f < n; ++f) order_.emplace_back(f, f);  // reflexive closure
  std::sort(order_.begin(), order_.end());
  order_.erase(std::unique(order_.begin(), order_.end()), order_.end());

  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& [f, g] : order_)
    matrix_[static_cast<std::size_t>(f) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(g)] = 1;
}

bool OrderedGroupoid::object_leq(int A, int B) const {
  int ea = cat().ident(A);
  int eb = cat().ident(B);
  if (ea < 0 || eb < 0) throw StructuralError("object order needs identity arrows");
  return leq(ea, eb);
}

bool object_order(const OrderedGroupoid& g, int A, int B) {
  if (A < 0 || A >= g.cat().object_count() || B < 0 || B >= g.cat().object_count())
    throw InputError("object_order: unknown object");
  return g.object_leq(A, B);
}

ValidationReport check_ordered_groupoid(const OrderedGroupoid& g, Exec exec) {
  const FinCategory& c = g.cat();
  ValidationReport rep = validate_category(c, exec, /*require_identities=*/true);
  if (!rep.ok()) return rep;  // the remaining laws presuppose a category

  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.comp(g.ginv(f), f) != c.ident(c.dom(f)) || c.comp(f, g.ginv(f)) != c.ident(c.cod(f)))
      rep.add("groupoid-inverse", "f=" + c.arrow_id(f));
  }

  rep.merge(exec == Exec::parallel ? par::groupoid_order_laws(g) : ref::groupoid_order_laws(g));

  // Axioms (iii)/(iv): unique (co)restrictions, by exhaustive search.
  for (int f = 0; f < c.arrow_count(); ++f) {
    std::vector<int> below;
    for (int fp = 0; fp < c.arrow_count(); ++fp)
      if (g.leq(fp, f)) below.push_back(fp);
    for (int A = 0; A < c.object_count(); ++A) {
      if (g.object_leq(A, c.dom(f))) {
        int count = 0;
        for (int fp : below)
          if (c.dom(fp) == A) ++count;
        if (count != 1)
          rep.add("og-axiom-(iii)", "f=" + c.arrow_id(f) + " A=" + c.object_id(A) +
                                        " candidates=" + std::to_string(count));
      }
      if (g.object_leq(A, c.cod(f))) {
        int count = 0;
        for (int fp : below)
          if (c.cod(fp) == A) ++count;
        if (count != 1)
          rep.add("og-axiom-(iv)", "f=" + c.arrow_id(f) + " B=" + c.object_id(A) +
                                       " candidates=" + std::to_string(count));
      }
    }
  }

  rep.sort_canonical();
  return rep;
}

int restrict_to(const OrderedGroupoid& g, int f, int A) {
  const FinCategory& c = g.cat();
  if (A < 0 || A >= c.object_count()) throw InputError("restrict_to: unknown object");
  if (!g.object_leq(A, c.dom(f)))
    throw InputError("not <=: " + c.object_id(A) + " below dom " + c.arrow_id(f));
  int found = -1;
  for (int fp = 0; fp < c.arrow_count(); ++fp) {
    if (c.dom(fp) != A || !g.leq(fp, f)) continue;
    if (found >= 0)
      throw StructuralError("restriction not unique for " + c.arrow_id(f) + " at " +
                            c.object_id(A));
    found = fp;
  }
  if (found < 0)
    throw StructuralError("no restriction of " + c.arrow_id(f) + " to " + c.object_id(A));
  return found;
}

int corestrict_to(const OrderedGroupoid& g, int B, int f) {
  const FinCategory& c = g.cat();
  if (B < 0 || B >= c.object_count()) throw InputError("corestrict_to: unknown object");
  if (!g.object_leq(B, c.cod(f)))
    throw InputError("not <=: " + c.object_id(B) + " below cod " + c.arrow_id(f));
  int found = -1;
  for (int fp = 0; fp < c.arrow_count(); ++fp) {
    if (c.cod(fp) != B || !g.leq(fp, f)) continue;
    if (found >= 0)
      throw StructuralError("corestriction not unique for " + c.arrow_id(f) + " at " +
                            c.object_id(B));
    found = fp;
  }
  if (found < 0)
    throw StructuralError("no corestriction of " + c.arrow_id(f) + " to " + c.object_id(B));
  int via_inverse = g.ginv(restrict_to(g, g.ginv(f), B));
  if (via_inverse != found)
    throw StructuralError("corestriction disagrees with ginv(restrict(ginv f)) for " +
                          c.arrow_id(f));
  return found;
}

std::optional<int> object_meet(const OrderedGroupoid& g, int A, int B) {
  const FinCategory& c = g.cat();
  std::vector<int> lower;
  for (int o = 0; o < c.object_count(); ++o)
    if (g.object_leq(o, A) && g.object_leq(o, B)) lower.push_back(o);
  for (int m : lower) {
    bool greatest = std::all_of(lower.begin(), lower.end(),
                                [&](int o) { return g.object_leq(o, m); });
    if (greatest) return m;
  }
  return std::nullopt;
}

std::optional<int> tensor(const OrderedGroupoid& g, int alpha, int beta) {
  auto m = object_meet(g, g.cat().dom(alpha), g.cat().cod(beta));
  if (!m) return std::nullopt;
  int left = restrict_to(g, alpha, *m);
  int right = corestrict_to(g, *m, beta);
  int result = g.cat().comp(left, right);
  if (result < 0) throw StructuralError("tensor composite undefined in the base category");
  return result;
}

bool SemilatticePartition::top_heavy() const {
  return std::all_of(tops.begin(), tops.end(), [](int t) { return t >= 0; });
}

int SemilatticePartition::local_index(int block, int object) const {
  const auto& blk = blocks[static_cast<std::size_t>(block)];
  auto it = std::lower_bound(blk.begin(), blk.end(), object);
  if (it == blk.end() || *it != object) return -1;
  return static_cast<int>(it - blk.begin());
}

std::optional<int> SemilatticePartition::meet_of(int A, int B) const {
  int ba = block_of[static_cast<std::size_t>(A)];
  if (ba != block_of[static_cast<std::size_t>(B)]) return std::nullopt;
  const auto& blk = blocks[static_cast<std::size_t>(ba)];
  int m = meet[static_cast<std::size_t>(ba)]
              [static_cast<std::size_t>(local_index(ba, A)) * blk.size() +
               static_cast<std::size_t>(local_index(ba, B))];
  if (m < 0) return std::nullopt;
  return m;
}

PartitionResult canonical_partition(const OrderedGroupoid& g) {
  const FinCategory& c = g.cat();
  const int no = c.object_count();
  PartitionResult out;

  // Comparability components by union-find.
  std::vector<int> parent(static_cast<std::size_t>(no));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int a = 0; a < no; ++a)
    for (int b = a + 1; b < no; ++b)
      if (g.object_leq(a, b) || g.object_leq(b, a)) parent[static_cast<std::size_t>(find(a))] = find(b);

  SemilatticePartition part;
  part.block_of.assign(static_cast<std::size_t>(no), -1);
  std::vector<int> root_to_block;
  for (int o = 0; o < no; ++o) {  // objects are sorted, so blocks sort by least member
    int root = find(o);
    int bi = -1;
    for (std::size_t i = 0; i < root_to_block.size(); ++i)
      if (root_to_block[i] == root) bi = static_cast<int>(i);
    if (bi < 0) {
      bi = static_cast<int>(part.blocks.size());
      part.blocks.emplace_back();
      root_to_block.push_back(root);
    }
    part.blocks[static_cast<std::size_t>(bi)].push_back(o);
    part.block_of[static_cast<std::size_t>(o)] = bi;
  }

  // Pairwise meets by greatest-lower-bound search within each block.
  part.meet.resize(part.blocks.size());
  part.tops.assign(part.blocks.size(), -1);
  for (std::size_t bi = 0; bi < part.blocks.size(); ++bi) {
    const auto& blk = part.blocks[bi];
    const std::size_t k = blk.size();
    part.meet[bi].assign(k * k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<int> lower;
        for (int o : blk)
          if (g.object_leq(o, blk[i]) && g.object_leq(o, blk[j])) lower.push_back(o);
        int glb = -1;
        for (int m : lower)
          if (std::all_of(lower.begin(), lower.end(), [&](int o) { return g.object_leq(o, m); }))
            glb = m;
        if (glb < 0)
          out.report.add("partition-meet", "block=" + std::to_string(bi) + " A=" +
                                               c.object_id(blk[i]) + " B=" + c.object_id(blk[j]));
        part.meet[bi][i * k + j] = glb;
      }
    }
    for (int t : blk) {
      if (std::all_of(blk.begin(), blk.end(), [&](int o) { return g.object_leq(o, t); })) {
        part.tops[bi] = t;
        break;
      }
    }
  }

  out.report.sort_canonical();
  if (out.report.ok()) out.partition = std::move(part);
  return out;
}

ValidationReport validate_stored_partition(const OrderedGroupoid& g,
                                           const std::vector<std::vector<int>>& blocks,
                                           const std::vector<int>& tops) {
  ValidationReport rep;
  PartitionResult canon = canonical_partition(g);
  if (!canon.ok()) {
    rep.merge(std::move(canon.report));
    rep.sort_canonical();
    return rep;
  }

  // Blocks with members sorted, keeping each block's stored top attached.
  std::vector<std::pair<std::vector<int>, int>> stored;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> b = blocks[i];
    std::sort(b.begin(), b.end());
    stored.emplace_back(std::move(b), i < tops.size() ? tops[i] : -1);
  }
  std::sort(stored.begin(), stored.end());

  const SemilatticePartition& canon_p = *canon.partition;
  if (stored.size() != canon_p.blocks.size()) {
    rep.add("partition-stored", "stored block count differs from the comparability components");
  } else {
    for (std::size_t i = 0; i < stored.size(); ++i) {
      if (stored[i].first != canon_p.blocks[i]) {
        rep.add("partition-stored", "stored blocks differ from the comparability components");
        break;
      }
      int canon_top = canon_p.tops[i];
      if (stored[i].second >= 0 && stored[i].second != canon_top)
        rep.add("partition-stored",
                "stored top differs for the block of " +
                    g.cat().object_id(canon_p.blocks[i].front()));
    }
  }
  rep.sort_canonical();
  return rep;
}

ClassifyFlags classify(const OrderedGroupoid& g) {
  ClassifyFlags flags;
  flags.ordered = check_ordered_groupoid(g).ok();
  if (!flags.ordered) return flags;
  PartitionResult pr = canonical_partition(g);
  flags.locally_inductive = pr.ok();
  if (!flags.locally_inductive) return flags;
  flags.top_heavy = pr.partition->top_heavy();
  flags.inductive = pr.partition->block_count() == 1;
  return flags;
}

ValidationReport check_ordered_functor(const FunctorData& f, const OrderedGroupoid& src,
                                       const OrderedGroupoid& tgt, Exec exec) {
  if (f.arr_map.size() != static_cast<std::size_t>(src.cat().arrow_count()))
    throw InputError("check_ordered_functor: arrow map does not match the source");
  return exec == Exec::parallel ? par::ordered_functor_law(f, src, tgt)
                                : ref::ordered_functor_law(f, src, tgt);
}

ValidationReport check_locally_inductive_functor(const FunctorData& f, const OrderedGroupoid& src,
                                                 const SemilatticePartition& src_part,
                                                 const OrderedGroupoid& tgt,
                                                 const SemilatticePartition& tgt_part) {
  ValidationReport rep;
  const FinCategory& sc = src.cat();
  auto fo = [&](int o) { return f.obj_map[static_cast<std::size_t>(o)]; };

  for (const auto& blk : src_part.blocks) {
    for (int A : blk) {
      for (int B : blk) {
        auto m = src_part.meet_of(A, B);
        if (!m) continue;  // partition invalid; reported elsewhere
        auto tm = tgt_part.meet_of(fo(A), fo(B));
        if (!tm || *tm != fo(*m))
          rep.add("li-functor-meet", "A=" + sc.object_id(A) + " B=" + sc.object_id(B));
      }
    }
  }

  // Empty meets: a block top must land on the top of its image block.
  for (std::size_t bi = 0; bi < src_part.blocks.size(); ++bi) {
    int t = src_part.tops[bi];
    if (t < 0) continue;
    int tb = tgt_part.block_of[static_cast<std::size_t>(fo(t))];
    int tt = tgt_part.tops[static_cast<std::size_t>(tb)];
    if (tt < 0 || fo(t) != tt) rep.add("li-functor-top", "top=" + sc.object_id(t));
  }

  for (int a = 0; a < sc.arrow_count(); ++a) {
    for (int b = 0; b < sc.arrow_count(); ++b) {
      auto ts = tensor(src, a, b);
      if (!ts) continue;
      auto tt = tensor(tgt, f.arr_map[static_cast<std::size_t>(a)],
                       f.arr_map[static_cast<std::size_t>(b)]);
      if (!tt || *tt != f.arr_map[static_cast<std::size_t>(*ts)])
        rep.add("li-functor-tensor", "a=" + sc.arrow_id(a) + " b=" + sc.arrow_id(b));
    }
  }

  rep.sort_canonical();
  return rep;
}

ValidationReport check_tensor_associativity(const OrderedGroupoid& g, Exec exec) {
  return exec == Exec::parallel ? par::tensor_associativity(g) : ref::tensor_associativity(g);
}

ValidationReport check_tensor_pseudoinverses(const OrderedGroupoid& g) {
  ValidationReport rep;
  const FinCategory& c = g.cat();
  for (int a = 0; a < c.arrow_count(); ++a) {
    auto left = tensor(g, a, g.ginv(a));
    std::optional<int> whole;
    if (left) whole = tensor(g, *left, a);
    if (!whole || *whole != a) rep.add("tensor-pseudoinverse", "a=" + c.arrow_id(a));
  }
  rep.sort_canonical();
  return rep;
}

bool preserves_tops(const FunctorData& f, const SemilatticePartition& src_part,
                    const SemilatticePartition& tgt_part) {
  for (std::size_t bi = 0; bi < src_part.blocks.size(); ++bi) {
    int t = src_part.tops[bi];
    if (t < 0) continue;
    int img = f.obj_map[static_cast<std::size_t>(t)];
    int tb = tgt_part.block_of[static_cast<std::size_t>(img)];
    if (tgt_part.tops[static_cast<std::size_t>(tb)] != img) return false;
  }
  return true;
}

OrderedGroupoid disjoint_union(const OrderedGroupoid& a, const OrderedGroupoid& b,
                               std::string_view prefix_a, std::string_view prefix_b) {
  FinCategoryBuilder builder;
  auto copy_side = [&](const OrderedGroupoid& side, std::string_view prefix) {
    const FinCategory& c = side.cat();
    auto tag = [&](const Id& id) { return std::string(prefix) + id; };
    for (int o = 0; o < c.object_count(); ++o) builder.add_object(tag(c.object_id(o)));
    for (int f = 0; f < c.arrow_count(); ++f)
      builder.add_arrow(tag(c.arrow_id(f)), tag(c.object_id(c.dom(f))),
                        tag(c.object_id(c.cod(f))));
    for (int g = 0; g < c.arrow_count(); ++g)
      for (int f = 0; f < c.arrow_count(); ++f)
        if (c.comp(g, f) >= 0)
          builder.set_comp(tag(c.arrow_id(g)), tag(c.arrow_id(f)), tag(c.arrow_id(c.comp(g, f))));
    for (int o = 0; o < c.object_count(); ++o)
      if (c.ident(o) >= 0) builder.set_ident(tag(c.object_id(o)), tag(c.arrow_id(c.ident(o))));
  };
  copy_side(a, prefix_a);
  copy_side(b, prefix_b);
  CatPtr cat = builder.build();

  std::vector<int> ginv(static_cast<std::size_t>(cat->arrow_count()), -1);
  std::vector<std::pair<int, int>> order;
  auto fill_side = [&](const OrderedGroupoid& side, std::string_view prefix) {
    const FinCategory& c = side.cat();
    auto at = [&](int f) {
      return cat->arrow_index(std::string(prefix) + c.arrow_id(f));
    };
    for (int f = 0; f < c.arrow_count(); ++f)
      ginv[static_cast<std::size_t>(at(f))] = at(side.ginv(f));
    for (const auto& [f, g] : side.order_pairs()) order.emplace_back(at(f), at(g));
  };
  fill_side(a, prefix_a);
  fill_side(b, prefix_b);
  return OrderedGroupoid(std::move(cat), std::move(ginv), std::move(order));
}

}  // namespace invcat
