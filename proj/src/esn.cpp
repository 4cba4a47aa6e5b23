#include "invcat/esn.hpp"

#include <algorithm>
#include <string>

namespace invcat {

namespace {

// Arrow ids survive both constructions unchanged, so sorted arrow index i of
// an image category must name the same arrow as index i of its source.
void require_same_arrow_ids(const FinCategory& a, const FinCategory& b, const char* where) {
  if (a.arrow_count() != b.arrow_count())
    throw StructuralError(std::string(where) + ": arrow counts differ");
  for (int i = 0; i < a.arrow_count(); ++i)
    if (a.arrow_id(i) != b.arrow_id(i))
      throw StructuralError(std::string(where) + ": arrow id order mismatch at " + a.arrow_id(i));
}

void require_clean(const ValidationReport& rep, const char* what) {
  if (!rep.ok())
    throw StructuralError(std::string(what) + " failed:\n" + rep.to_string());
}

Id block_name(int index, int count) {
  int width = 3;
  for (int c = count; c > 1000; c /= 10) ++width;
  std::string digits = std::to_string(index);
  return "M" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

}  // namespace

GImage g_of_inverse_category(const InverseCert& x, bool semicategory) {
  const FinCategory& c = x.cat();
  const int n = c.arrow_count();

  std::vector<int> idems;
  for (int f = 0; f < n; ++f) idems.push_back(x.rd.rb(f));
  std::sort(idems.begin(), idems.end());
  idems.erase(std::unique(idems.begin(), idems.end()), idems.end());

  std::vector<int> base_arrow_to_object(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < idems.size(); ++i)
    base_arrow_to_object[static_cast<std::size_t>(idems[i])] = static_cast<int>(i);

  // Objects are the idempotents under their arrow ids; arrow indices are
  // shared with X because the id set is identical.
  std::vector<Id> objects;
  for (int e : idems) objects.push_back(c.arrow_id(e));
  std::vector<FinCategory::Arrow> arrows;
  arrows.reserve(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f)
    arrows.push_back({c.arrow_id(f),
                      base_arrow_to_object[static_cast<std::size_t>(x.rd.rb(f))],
                      base_arrow_to_object[static_cast<std::size_t>(x.rd.rb(x.iv(f)))]});

  std::vector<int> comp(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (x.rd.rb(g) != x.rd.rb(x.iv(f))) continue;  // not composable here
      int gf = c.comp(g, f);
      if (gf < 0) throw StructuralError("g_of_inverse_category: composite missing in the base");
      comp[static_cast<std::size_t>(g) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(f)] = gf;
    }

  std::vector<int> ident(idems.size());
  for (std::size_t i = 0; i < idems.size(); ++i) ident[i] = idems[i];

  CatPtr cat = FinCategory::from_tables(std::move(objects), std::move(arrows), std::move(comp),
                                        std::move(ident));
  require_same_arrow_ids(c, *cat, "g_of_inverse_category");

  OrderedGroupoid groupoid(cat, x.inv, natural_order_pairs(x.rd));

  require_clean(check_ordered_groupoid(groupoid), "g_of_inverse_category: ordered-groupoid laws");
  PartitionResult canon = canonical_partition(groupoid);
  require_clean(canon.report, "g_of_inverse_category: canonical partition");
  SemilatticePartition partition = std::move(*canon.partition);

  // The canonical blocks must be exactly the E_A sets.
  for (std::size_t i = 0; i < idems.size(); ++i)
    for (std::size_t j = 0; j < idems.size(); ++j) {
      bool same_base_object = c.dom(idems[i]) == c.dom(idems[j]);
      bool same_block = partition.block_of[i] == partition.block_of[j];
      if (same_base_object != same_block)
        throw StructuralError("g_of_inverse_category: blocks differ from the idempotent sets");
    }

  if (semicategory) {
    std::fill(partition.tops.begin(), partition.tops.end(), -1);
  } else {
    if (!partition.top_heavy())
      throw StructuralError("g_of_inverse_category: a block has no top");
    for (std::size_t bi = 0; bi < partition.blocks.size(); ++bi) {
      int top_arrow = idems[static_cast<std::size_t>(partition.tops[bi])];
      int base_obj = c.dom(top_arrow);
      if (c.ident(base_obj) != top_arrow)
        throw StructuralError("g_of_inverse_category: block top is not an identity");
    }
  }

  GImage out;
  out.groupoid = std::move(groupoid);
  out.partition = std::move(partition);
  out.object_to_base_arrow = std::move(idems);
  out.base_arrow_to_object = std::move(base_arrow_to_object);
  return out;
}

FunctorData g_of_functor(const FunctorData& f, const InverseCert& x, const GImage& gx,
                         const InverseCert& y, const GImage& gy, bool semicategory) {
  if (!validate_functor(f, Exec::parallel, !semicategory).ok())
    throw InputError("g_of_functor: the input is not a functor");
  require_clean(check_restriction_functor(f, x.rd, y.rd),
                "g_of_functor: restriction-functor property");

  FunctorData out;
  out.source = gx.groupoid.base();
  out.target = gy.groupoid.base();
  out.obj_map.resize(gx.object_to_base_arrow.size());
  for (std::size_t o = 0; o < gx.object_to_base_arrow.size(); ++o) {
    int img = f.arr_map[static_cast<std::size_t>(gx.object_to_base_arrow[o])];
    int obj = gy.base_arrow_to_object[static_cast<std::size_t>(img)];
    if (obj < 0)
      throw StructuralError("g_of_functor: image of an idempotent is not an idempotent");
    out.obj_map[o] = obj;
  }
  out.arr_map = f.arr_map;

  // Identities survive even for semifunctors: idempotent objects are their
  // own identity arrows on both sides.
  require_clean(validate_functor(out), "g_of_functor: functor laws on the images");
  require_clean(check_ordered_functor(out, gx.groupoid, gy.groupoid),
                "g_of_functor: order preservation");
  require_clean(check_locally_inductive_functor(out, gx.groupoid, gx.partition, gy.groupoid,
                                                gy.partition),
                "g_of_functor: meet preservation");
  return out;
}

InverseCert i_of_groupoid(const OrderedGroupoid& g, const SemilatticePartition& p,
                          bool semicategory) {
  const FinCategory& c = g.cat();
  const int n = c.arrow_count();
  const int nb = p.block_count();

  if (!semicategory)
    for (int bi = 0; bi < nb; ++bi)
      if (p.tops[static_cast<std::size_t>(bi)] < 0)
        throw InputError("not top-heavy: block " + std::to_string(bi) + " has no top");

  std::vector<Id> objects;
  for (int bi = 0; bi < nb; ++bi) objects.push_back(block_name(bi, nb));

  std::vector<FinCategory::Arrow> arrows;
  arrows.reserve(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f)
    arrows.push_back({c.arrow_id(f), p.block_of[static_cast<std::size_t>(c.dom(f))],
                      p.block_of[static_cast<std::size_t>(c.cod(f))]});

  std::vector<int> comp(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int gg = 0; gg < n; ++gg)
    for (int f = 0; f < n; ++f) {
      if (p.block_of[static_cast<std::size_t>(c.dom(gg))] !=
          p.block_of[static_cast<std::size_t>(c.cod(f))])
        continue;
      auto t = tensor(g, gg, f);
      if (!t)
        throw StructuralError("i_of_groupoid: tensor undefined inside a block (missing meet)");
      comp[static_cast<std::size_t>(gg) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(f)] = *t;
    }

  std::vector<int> ident(static_cast<std::size_t>(nb), -1);
  if (!semicategory)
    for (int bi = 0; bi < nb; ++bi) {
      int e = c.ident(p.tops[static_cast<std::size_t>(bi)]);
      if (e < 0) throw StructuralError("i_of_groupoid: top object lacks an identity arrow");
      ident[static_cast<std::size_t>(bi)] = e;
    }

  CatPtr cat = FinCategory::from_tables(std::move(objects), std::move(arrows), std::move(comp),
                                        std::move(ident));
  require_same_arrow_ids(c, *cat, "i_of_groupoid");

  std::vector<int> rbar(static_cast<std::size_t>(n));
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f) {
    int e = c.ident(c.dom(f));
    if (e < 0) throw StructuralError("i_of_groupoid: object lacks an identity arrow");
    rbar[static_cast<std::size_t>(f)] = e;
    inv[static_cast<std::size_t>(f)] = g.ginv(f);
  }

  RestrictionData rd{cat, std::move(rbar)};
  require_clean(validate_category(*cat, Exec::parallel, !semicategory),
                "i_of_groupoid: category laws");
  require_clean(check_restriction_axioms(rd), "i_of_groupoid: restriction axioms");
  CertifyResult cert = certify_inverse_category(rd);
  require_clean(cert.report, "i_of_groupoid: certification");
  if (cert.cert->inv != inv)
    throw StructuralError("i_of_groupoid: groupoid inverses are not the restricted inverses");
  return std::move(*cert.cert);
}

FunctorData i_of_functor(const FunctorData& f, const SemilatticePartition& src_part,
                         const InverseCert& ig, const SemilatticePartition& tgt_part,
                         const InverseCert& ih) {
  FunctorData out;
  out.source = ig.rd.base;
  out.target = ih.rd.base;
  out.obj_map.assign(src_part.blocks.size(), -1);
  for (std::size_t bi = 0; bi < src_part.blocks.size(); ++bi) {
    int image_block = -1;
    for (int member : src_part.blocks[bi]) {
      int tb = tgt_part.block_of[static_cast<std::size_t>(
          f.obj_map[static_cast<std::size_t>(member)])];
      if (image_block < 0) image_block = tb;
      if (tb != image_block)
        throw StructuralError("i_of_functor: image of a block spans two blocks");
    }
    out.obj_map[bi] = image_block;
  }
  out.arr_map = f.arr_map;  // arrow indices are shared with the groupoids
  return out;
}

ValidationReport tensor_equals_composition_check(const InverseCert& x, bool semicategory) {
  ValidationReport rep;
  const FinCategory& c = x.cat();
  GImage gx = g_of_inverse_category(x, semicategory);
  const int n = c.arrow_count();

  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      auto t = tensor(gx.groupoid, f, g);
      bool composable = c.composable(f, g);
      if (t.has_value() != composable) {
        rep.add("tensor-composition", "f=" + c.arrow_id(f) + " g=" + c.arrow_id(g) +
                                          (composable ? ": tensor missing" : ": tensor spurious"));
        continue;
      }
      if (t && *t != c.comp(f, g))
        rep.add("tensor-composition", "f=" + c.arrow_id(f) + " g=" + c.arrow_id(g));
    }
  }
  rep.sort_canonical();
  return rep;
}

namespace {

FunctorData make_functor(CatPtr src, CatPtr tgt, std::vector<int> obj_map,
                         std::vector<int> arr_map) {
  FunctorData f;
  f.source = std::move(src);
  f.target = std::move(tgt);
  f.obj_map = std::move(obj_map);
  f.arr_map = std::move(arr_map);
  return f;
}

bool is_identity_map(const FunctorData& f) {
  for (std::size_t i = 0; i < f.obj_map.size(); ++i)
    if (f.obj_map[i] != static_cast<int>(i)) return false;
  for (std::size_t i = 0; i < f.arr_map.size(); ++i)
    if (f.arr_map[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

IsoWitness roundtrip_groupoid(const OrderedGroupoid& g, const SemilatticePartition& p,
                              bool semicategory) {
  const FinCategory& c = g.cat();
  InverseCert ic = i_of_groupoid(g, p, semicategory);
  GImage h = g_of_inverse_category(ic, semicategory);
  const FinCategory& hc = h.groupoid.cat();

  // Objects correspond through identity arrows: A <-> the H-object named 1_A.
  std::vector<int> fwd_obj(static_cast<std::size_t>(c.object_count()), -1);
  std::vector<int> bwd_obj(static_cast<std::size_t>(hc.object_count()), -1);
  for (int A = 0; A < c.object_count(); ++A) {
    int e = c.ident(A);
    if (e < 0) throw StructuralError("roundtrip_groupoid: object lacks an identity arrow");
    int ho = hc.object_index(c.arrow_id(e));
    if (ho < 0) throw StructuralError("roundtrip_groupoid: object " + c.object_id(A) +
                                      " has no counterpart");
    fwd_obj[static_cast<std::size_t>(A)] = ho;
    bwd_obj[static_cast<std::size_t>(ho)] = A;
  }
  if (c.object_count() != hc.object_count() ||
      std::any_of(bwd_obj.begin(), bwd_obj.end(), [](int v) { return v < 0; }))
    throw StructuralError("roundtrip_groupoid: object correspondence is not a bijection");

  require_same_arrow_ids(c, hc, "roundtrip_groupoid");
  std::vector<int> fwd_arr(static_cast<std::size_t>(c.arrow_count()));
  for (int f = 0; f < c.arrow_count(); ++f) fwd_arr[static_cast<std::size_t>(f)] = f;

  IsoWitness wit;
  wit.forward = make_functor(g.base(), h.groupoid.base(), fwd_obj, fwd_arr);
  wit.backward = make_functor(h.groupoid.base(), g.base(), bwd_obj, fwd_arr);

  require_clean(validate_functor(wit.forward, Exec::parallel, true),
                "roundtrip_groupoid: forward functor");
  require_clean(validate_functor(wit.backward, Exec::parallel, true),
                "roundtrip_groupoid: backward functor");
  wit.composites_identity = is_identity_map(compose_functors(wit.backward, wit.forward)) &&
                            is_identity_map(compose_functors(wit.forward, wit.backward));
  if (!wit.composites_identity)
    throw StructuralError("roundtrip_groupoid: composites are not identities");

  require_clean(check_ordered_functor(wit.forward, g, h.groupoid),
                "roundtrip_groupoid: order preservation");
  require_clean(check_ordered_functor(wit.backward, h.groupoid, g),
                "roundtrip_groupoid: order reflection");
  for (int f = 0; f < c.arrow_count(); ++f)
    if (h.groupoid.ginv(f) != g.ginv(f))
      throw StructuralError("roundtrip_groupoid: inverses disagree at " + c.arrow_id(f));
  wit.order_preserved = true;

  require_clean(check_locally_inductive_functor(wit.forward, g, p, h.groupoid, h.partition),
                "roundtrip_groupoid: meets forward");
  require_clean(check_locally_inductive_functor(wit.backward, h.groupoid, h.partition, g, p),
                "roundtrip_groupoid: meets backward");

  // Blocks and tops correspond under the object bijection.
  if (p.block_count() != h.partition.block_count())
    throw StructuralError("roundtrip_groupoid: block counts differ");
  for (int A = 0; A < c.object_count(); ++A)
    for (int B = 0; B < c.object_count(); ++B) {
      bool same_src = p.block_of[static_cast<std::size_t>(A)] ==
                      p.block_of[static_cast<std::size_t>(B)];
      bool same_img =
          h.partition.block_of[static_cast<std::size_t>(fwd_obj[static_cast<std::size_t>(A)])] ==
          h.partition.block_of[static_cast<std::size_t>(fwd_obj[static_cast<std::size_t>(B)])];
      if (same_src != same_img)
        throw StructuralError("roundtrip_groupoid: blocks do not correspond");
    }
  for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
    int t = p.tops[bi];
    if (t < 0) continue;
    int img = fwd_obj[static_cast<std::size_t>(t)];
    int hb = h.partition.block_of[static_cast<std::size_t>(img)];
    if (h.partition.tops[static_cast<std::size_t>(hb)] != img)
      throw StructuralError("roundtrip_groupoid: tops do not correspond");
  }
  wit.partition_matches = true;
  wit.restriction_preserved = true;
  return wit;
}

IsoWitness roundtrip_category(const InverseCert& x, bool semicategory) {
  const FinCategory& c = x.cat();
  GImage gx = g_of_inverse_category(x, semicategory);
  InverseCert y = i_of_groupoid(gx.groupoid, gx.partition, semicategory);
  const FinCategory& yc = y.cat();

  if (yc.object_count() != c.object_count())
    throw StructuralError(semicategory
                              ? "roundtrip_category: an object has an empty idempotent set"
                              : "roundtrip_category: object counts differ");

  // A -> the block holding E_A. Blocks are objects of Y in matching index
  // order, which require_same ids below pins down.
  std::vector<int> fwd_obj(static_cast<std::size_t>(c.object_count()), -1);
  std::vector<int> bwd_obj(static_cast<std::size_t>(yc.object_count()), -1);
  for (int A = 0; A < c.object_count(); ++A) {
    int witness_idem = -1;
    for (int f = 0; f < c.arrow_count(); ++f)
      if (c.dom(x.rd.rb(f)) == A) {
        witness_idem = x.rd.rb(f);
        break;
      }
    if (witness_idem < 0)
      throw StructuralError("roundtrip_category: isolated object " + c.object_id(A) +
                            " (empty idempotent set)");
    int block = gx.partition.block_of[static_cast<std::size_t>(
        gx.base_arrow_to_object[static_cast<std::size_t>(witness_idem)])];
    if (bwd_obj[static_cast<std::size_t>(block)] >= 0)
      throw StructuralError("roundtrip_category: two objects share a block");
    fwd_obj[static_cast<std::size_t>(A)] = block;
    bwd_obj[static_cast<std::size_t>(block)] = A;
  }

  require_same_arrow_ids(c, yc, "roundtrip_category");
  std::vector<int> ident_arr(static_cast<std::size_t>(c.arrow_count()));
  for (int f = 0; f < c.arrow_count(); ++f) ident_arr[static_cast<std::size_t>(f)] = f;

  IsoWitness wit;
  wit.forward = make_functor(x.rd.base, y.rd.base, fwd_obj, ident_arr);
  wit.backward = make_functor(y.rd.base, x.rd.base, bwd_obj, ident_arr);

  require_clean(validate_functor(wit.forward, Exec::parallel, !semicategory),
                "roundtrip_category: forward functor");
  require_clean(validate_functor(wit.backward, Exec::parallel, !semicategory),
                "roundtrip_category: backward functor");
  wit.composites_identity = is_identity_map(compose_functors(wit.backward, wit.forward)) &&
                            is_identity_map(compose_functors(wit.forward, wit.backward));
  if (!wit.composites_identity)
    throw StructuralError("roundtrip_category: composites are not identities");

  for (int f = 0; f < c.arrow_count(); ++f) {
    if (y.rd.rb(f) != x.rd.rb(f))
      throw StructuralError("roundtrip_category: restrictions disagree at " + c.arrow_id(f));
    if (y.iv(f) != x.iv(f))
      throw StructuralError("roundtrip_category: inverses disagree at " + c.arrow_id(f));
  }
  wit.restriction_preserved = true;
  wit.partition_matches = true;
  wit.order_preserved = true;
  return wit;
}

FunctorData reconstruct_functor(const FunctorData& f, const InverseCert& x, const GImage& gx,
                                const InverseCert& y, const GImage& gy, bool semicategory) {
  const FinCategory& xc = x.cat();
  const FinCategory& yc = y.cat();

  FunctorData out;
  out.source = x.rd.base;
  out.target = y.rd.base;
  out.obj_map.assign(static_cast<std::size_t>(xc.object_count()), -1);
  for (int A = 0; A < xc.object_count(); ++A) {
    int target_obj = -1;
    for (std::size_t o = 0; o < gx.object_to_base_arrow.size(); ++o) {
      if (xc.dom(gx.object_to_base_arrow[o]) != A) continue;
      int img_obj = f.obj_map[o];
      int img_idem = gy.object_to_base_arrow[static_cast<std::size_t>(img_obj)];
      int B = yc.dom(img_idem);
      if (target_obj < 0) target_obj = B;
      if (B != target_obj)
        throw InputError("not locally inductive: image of E_" + xc.object_id(A) +
                         " spans two idempotent sets");
    }
    if (target_obj < 0)
      throw InputError("reconstruct_functor: object " + xc.object_id(A) +
                       " has an empty idempotent set");
    out.obj_map[static_cast<std::size_t>(A)] = target_obj;
  }
  out.arr_map = f.arr_map;  // arrow indices shared between X and its image

  require_clean(validate_functor(out, Exec::parallel, !semicategory),
                "reconstruct_functor: functor laws");

  // Fullness: applying the groupoid construction to the lift returns f.
  FunctorData gf = g_of_functor(out, x, gx, y, gy, semicategory);
  if (!(gf == f)) throw StructuralError("reconstruct_functor: lift does not reproduce the input");
  return out;
}

OrderedGroupoid classical_g(const InverseSemigroupTable& s) {
  const int n = s.size();
  std::vector<int> idems;
  for (int e = 0; e < n; ++e)
    if (s.idempotent(e)) idems.push_back(e);

  std::vector<int> elem_to_obj(static_cast<std::size_t>(n), -1);
  std::vector<Id> objects;
  for (std::size_t i = 0; i < idems.size(); ++i) {
    elem_to_obj[static_cast<std::size_t>(idems[i])] = static_cast<int>(i);
    objects.push_back(s.elements[static_cast<std::size_t>(idems[i])]);
  }

  std::vector<FinCategory::Arrow> arrows;
  for (int a = 0; a < n; ++a) {
    int d = elem_to_obj[static_cast<std::size_t>(s.product(s.pinv(a), a))];
    int cd = elem_to_obj[static_cast<std::size_t>(s.product(a, s.pinv(a)))];
    if (d < 0 || cd < 0) throw StructuralError("classical_g: s•s is not idempotent");
    arrows.push_back({s.elements[static_cast<std::size_t>(a)], d, cd});
  }

  std::vector<int> comp(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int t = 0; t < n; ++t)
    for (int a = 0; a < n; ++a)
      if (arrows[static_cast<std::size_t>(t)].dom == arrows[static_cast<std::size_t>(a)].cod)
        comp[static_cast<std::size_t>(t) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(a)] = s.product(t, a);

  std::vector<int> ident(idems.size());
  for (std::size_t i = 0; i < idems.size(); ++i) ident[i] = idems[i];

  std::vector<std::pair<int, int>> order;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (natural_leq(s, a, b)) order.emplace_back(a, b);

  CatPtr cat = FinCategory::from_tables(std::move(objects), std::move(arrows), std::move(comp),
                                        std::move(ident));
  OrderedGroupoid g(std::move(cat), s.inv, std::move(order));
  require_clean(check_ordered_groupoid(g), "classical_g: ordered-groupoid laws");
  PartitionResult pr = canonical_partition(g);
  require_clean(pr.report, "classical_g: object meets");
  if (pr.partition->block_count() != 1)
    throw StructuralError("classical_g: the idempotents split into several blocks");
  return g;
}

InverseSemigroupTable classical_s(const OrderedGroupoid& g) {
  if (g.cat().arrow_count() == 0) return {};
  ClassifyFlags flags = classify(g);
  if (!flags.inductive)
    throw InputError("tensor not total: the groupoid is not inductive");

  const FinCategory& c = g.cat();
  const int n = c.arrow_count();
  InverseSemigroupTable table;
  for (int a = 0; a < n; ++a) table.elements.push_back(c.arrow_id(a));
  table.mul.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  table.inv.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    table.inv[static_cast<std::size_t>(a)] = g.ginv(a);
    for (int b = 0; b < n; ++b) {
      auto t = tensor(g, a, b);
      if (!t) throw StructuralError("classical_s: tensor undefined on an inductive groupoid");
      table.mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)] = *t;
    }
  }
  require_clean(validate_semigroup(table), "classical_s: inverse-semigroup laws");
  return table;
}

OplaxCheckResult check_oplax_functor(const FunctorData& f, const InverseCert& x,
                                     const InverseCert& y) {
  OplaxCheckResult out;
  const FinCategory& xc = x.cat();
  const FinCategory& yc = y.cat();

  bool shape_ok = true;
  for (int a = 0; a < xc.arrow_count(); ++a) {
    int fa = f.arr_map[static_cast<std::size_t>(a)];
    if (yc.dom(fa) != f.obj_map[static_cast<std::size_t>(xc.dom(a))] ||
        yc.cod(fa) != f.obj_map[static_cast<std::size_t>(xc.cod(a))]) {
      out.report.add("oplax-endpoints", "f=" + xc.arrow_id(a));
      shape_ok = false;
    }
  }
  if (!shape_ok) {
    out.report.sort_canonical();
    return out;
  }

  for (int g = 0; g < xc.arrow_count(); ++g) {
    for (int a = 0; a < xc.arrow_count(); ++a) {
      if (!xc.composable(g, a)) continue;
      int ga = xc.comp(g, a);
      if (ga < 0) continue;
      int lhs = f.arr_map[static_cast<std::size_t>(ga)];
      int rhs = yc.comp(f.arr_map[static_cast<std::size_t>(g)],
                        f.arr_map[static_cast<std::size_t>(a)]);
      if (rhs < 0 || !leq(y.rd, lhs, rhs)) {
        out.report.add("oplax-composite", "g=" + xc.arrow_id(g) + " f=" + xc.arrow_id(a));
      } else if (lhs != rhs) {
        out.strict_composites.emplace_back(g, a);
      }
    }
  }

  for (int A = 0; A < xc.object_count(); ++A) {
    int e = xc.ident(A);
    if (e < 0) continue;
    int te = yc.ident(f.obj_map[static_cast<std::size_t>(A)]);
    int img = f.arr_map[static_cast<std::size_t>(e)];
    if (te < 0 || !leq(y.rd, img, te)) {
      out.report.add("oplax-identity", "object=" + xc.object_id(A));
    } else if (img != te) {
      out.strict_identities.push_back(A);
    }
  }

  out.report.sort_canonical();
  std::sort(out.strict_composites.begin(), out.strict_composites.end());
  std::sort(out.strict_identities.begin(), out.strict_identities.end());
  return out;
}

OplaxToOrdered oplax_to_ordered(const FunctorData& f, const InverseCert& x, const GImage& gx,
                                const InverseCert& y, const GImage& gy) {
  (void)y;
  OplaxToOrdered out;
  out.groupoid_functor.source = gx.groupoid.base();
  out.groupoid_functor.target = gy.groupoid.base();
  out.groupoid_functor.arr_map = f.arr_map;
  out.groupoid_functor.obj_map.assign(gx.object_to_base_arrow.size(), -1);
  for (std::size_t o = 0; o < gx.object_to_base_arrow.size(); ++o) {
    int img = f.arr_map[static_cast<std::size_t>(gx.object_to_base_arrow[o])];
    int obj = gy.base_arrow_to_object[static_cast<std::size_t>(img)];
    if (obj < 0) {
      out.report.add("g-oplax-object",
                     "idempotent=" + x.cat().arrow_id(gx.object_to_base_arrow[o]) +
                         " image is not a restriction idempotent");
      continue;
    }
    out.groupoid_functor.obj_map[o] = obj;
  }
  if (!out.report.ok()) {
    out.report.sort_canonical();
    return out;
  }

  out.report.merge(validate_functor(out.groupoid_functor));
  out.report.merge(check_ordered_functor(out.groupoid_functor, gx.groupoid, gy.groupoid));
  out.report.sort_canonical();
  return out;
}

OrderedToOplax ordered_to_oplax(const FunctorData& f, const OrderedGroupoid& g,
                                const SemilatticePartition& pg, const InverseCert& ig,
                                const OrderedGroupoid& h, const SemilatticePartition& ph,
                                const InverseCert& ih) {
  (void)g;
  (void)h;
  OrderedToOplax out;
  out.category_map = i_of_functor(f, pg, ig, ph, ih);
  out.oplax = check_oplax_functor(out.category_map, ig, ih);

  out.identities_strict = true;
  const FinCategory& sc = ig.cat();
  const FinCategory& tc = ih.cat();
  for (int o = 0; o < sc.object_count(); ++o) {
    int e = sc.ident(o);
    if (e < 0) continue;
    int te = tc.ident(out.category_map.obj_map[static_cast<std::size_t>(o)]);
    if (te < 0 || out.category_map.arr_map[static_cast<std::size_t>(e)] != te)
      out.identities_strict = false;
  }
  return out;
}

}  // namespace invcat
