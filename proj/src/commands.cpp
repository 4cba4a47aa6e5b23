#include "invcat/commands.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "invcat/esn.hpp"
#include "invcat/generators.hpp"
#include "invcat/textio.hpp"

namespace invcat::cli {

namespace {

std::vector<int> parse_set(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("malformed set element: " + item);
    }
  }
  if (out.empty()) throw InputError("empty set: " + text);
  return out;
}

int print_report(const std::string& heading, const ValidationReport& rep, std::ostream& out) {
  if (rep.ok()) {
    out << heading << ": ok\n";
    return exit_ok;
  }
  out << heading << ": " << rep.size() << " violation(s)\n";
  for (const Violation& v : rep.violations) out << "  " << v.law << ": " << v.detail << "\n";
  return exit_validation;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  } catch (const StructuralError& e) {
    err << "structural bug: " << e.what() << "\n";
    return exit_structural;
  }
}

// Validation pipeline per kind; returns the worst exit code seen.
int check_structure(const Structure& s, std::ostream& out, Exec exec) {
  int rc = exit_ok;
  auto run = [&](const std::string& name, const ValidationReport& rep) {
    rc = std::max(rc, print_report(name, rep, out));
  };

  switch (s.kind) {
    case Kind::category:
      run("category laws", validate_category(*s.cat, exec, !s.semicategory));
      break;

    case Kind::restriction:
    case Kind::inverse: {
      ValidationReport cat_rep = validate_category(*s.cat, exec, !s.semicategory);
      run("category laws", cat_rep);
      if (!cat_rep.ok()) break;
      RestrictionData rd = restriction_of(s);
      ValidationReport ax = check_restriction_axioms(rd, exec);
      run("restriction axioms", ax);
      if (!ax.ok()) break;
      run("derived identities", check_derived_identities(rd, exec));
      run("natural order laws", check_leq_partial_order(rd, exec));
      run("order compatibility", check_order_compatibility(rd, exec));
      run("total maps", check_total_maps_subcategory(rd));
      if (s.kind == Kind::inverse) {
        CertifyResult cr = certify_inverse_category(rd);
        run("inverse certification", cr.report);
        if (cr.ok()) {
          run("inverse laws", check_inverse_laws(*cr.cert));
          if (!s.inv.empty() && s.inv != cr.cert->inv) {
            ValidationReport stored;
            stored.add("stored-inv", "stored inverses differ from the restricted inverses");
            run("stored inverses", stored);
          }
        }
      }
      break;
    }

    case Kind::ordered_groupoid: {
      OrderedGroupoid g = groupoid_of(s);
      ValidationReport og = check_ordered_groupoid(g, exec);
      run("ordered-groupoid laws", og);
      if (!og.ok()) break;
      PartitionResult pr = canonical_partition(g);
      run("canonical partition", pr.report);
      run("tensor associativity", check_tensor_associativity(g, exec));
      if (!s.blocks.empty()) run("stored partition", validate_stored_partition(g, s.blocks, s.tops));
      break;
    }

    case Kind::semigroup:
      run("inverse-semigroup laws", validate_semigroup(*s.semigroup, exec));
      break;

    case Kind::functor: {
      int src_rc = check_structure(*s.source, out, exec);
      int tgt_rc = check_structure(*s.target, out, exec);
      rc = std::max({rc, src_rc, tgt_rc});
      if (rc != exit_ok) break;
      FunctorData f = functor_of(s);
      bool semis = s.source->semicategory || s.target->semicategory;
      ValidationReport fr = validate_functor(f, exec, !semis);
      run("functor laws", fr);
      if (!fr.ok()) break;
      if (s.source->kind == Kind::inverse && s.target->kind == Kind::inverse) {
        // Functors between inverse categories are restriction functors; a
        // counterexample would be a bug-level finding, not bad input.
        ValidationReport rf =
            check_restriction_functor(f, restriction_of(*s.source), restriction_of(*s.target));
        if (!rf.ok()) {
          print_report("restriction functor", rf, out);
          throw StructuralError("a functor of inverse categories failed F(rbar f) = rbar(F f)");
        }
        run("restriction functor", rf);
      }
      break;
    }
  }
  return rc;
}

InverseCert certified_or_throw(const Structure& s, Exec exec, std::ostream& out) {
  RestrictionData rd = restriction_of(s);
  ValidationReport cat_rep = validate_category(*s.cat, exec, !s.semicategory);
  if (!cat_rep.ok()) {
    print_report("category laws", cat_rep, out);
    throw InputError("the input is not a category");
  }
  ValidationReport ax = check_restriction_axioms(rd, exec);
  if (!ax.ok()) {
    print_report("restriction axioms", ax, out);
    throw InputError("the input is not a restriction category");
  }
  CertifyResult cr = certify_inverse_category(rd);
  if (!cr.ok()) {
    print_report("inverse certification", cr.report, out);
    throw InputError("the input is not an inverse category");
  }
  return std::move(*cr.cert);
}

// Groupoid + partition from a file, validated.
std::pair<OrderedGroupoid, SemilatticePartition> groupoid_with_partition(const Structure& s,
                                                                         Exec exec,
                                                                         std::ostream& out) {
  OrderedGroupoid g = groupoid_of(s);
  ValidationReport og = check_ordered_groupoid(g, exec);
  if (!og.ok()) {
    print_report("ordered-groupoid laws", og, out);
    throw InputError("the input is not an ordered groupoid");
  }
  PartitionResult pr = canonical_partition(g);
  if (!pr.ok()) {
    print_report("canonical partition", pr.report, out);
    throw InputError("the input is not locally inductive");
  }
  if (!s.blocks.empty()) {
    ValidationReport stored = validate_stored_partition(g, s.blocks, s.tops);
    if (!stored.ok()) {
      print_report("stored partition", stored, out);
      throw InputError("the stored partition is not the canonical one");
    }
  }
  return {std::move(g), std::move(*pr.partition)};
}

}  // namespace

int run_generate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (args.empty()) throw InputError("generate needs a family name");
    const std::string& family = args[0];

    if (family == "symmetric-inverse") {
      if (args.size() != 2) throw InputError("usage: generate symmetric-inverse <n>");
      InverseCert cert = symmetric_inverse_monoid(std::stoi(args[1]));
      serialize_structure(make_inverse_structure(cert, false), out);
      return exit_ok;
    }
    if (family == "partial-bijection" || family == "partial-function") {
      if (args.size() < 2)
        throw InputError("usage: generate " + family + " <set> [<set>...], sets like 1,2,3");
      std::vector<std::vector<int>> sets;
      for (std::size_t i = 1; i < args.size(); ++i) sets.push_back(parse_set(args[i]));
      if (family == "partial-bijection") {
        serialize_structure(make_inverse_structure(partial_bijection_category(sets), false), out);
      } else {
        serialize_structure(make_restriction_structure(partial_function_category(sets), false),
                            out);
      }
      return exit_ok;
    }
    if (family == "closure") {
      if (args.size() < 3)
        throw InputError("usage: generate closure <n> <seed-id> [<seed-id>...]");
      std::vector<std::string> seeds(args.begin() + 2, args.end());
      serialize_structure(
          make_semigroup_structure(closure_subsemigroup(std::stoi(args[1]), seeds)), out);
      return exit_ok;
    }
    throw InputError("unknown family " + family +
                     " (families: symmetric-inverse, partial-bijection, partial-function, "
                     "closure)");
  });
}

int run_check(std::istream& in, std::ostream& out, std::ostream& err, Exec exec) {
  return guarded(err, [&]() {
    Structure s = parse_structure(in);
    return check_structure(s, out, exec);
  });
}

int run_construct(const std::string& what, bool semicategory, std::istream& in, std::ostream& out,
                  std::ostream& err, Exec exec) {
  return guarded(err, [&]() {
    Structure s = parse_structure(in);

    if (what == "g") {
      if (s.kind == Kind::semigroup) {
        ValidationReport rep = validate_semigroup(*s.semigroup, exec);
        if (!rep.ok()) {
          print_report("inverse-semigroup laws", rep, err);
          throw InputError("the input is not an inverse semigroup");
        }
        OrderedGroupoid g = classical_g(*s.semigroup);
        PartitionResult pr = canonical_partition(g);
        serialize_structure(make_groupoid_structure(g, &*pr.partition, false), out);
        return exit_ok;
      }
      InverseCert cert = certified_or_throw(s, exec, err);
      GImage img = g_of_inverse_category(cert, semicategory || s.semicategory);
      serialize_structure(make_groupoid_structure(img.groupoid, &img.partition,
                                                  semicategory || s.semicategory),
                          out);
      return exit_ok;
    }

    if (what == "cg") {
      if (s.kind != Kind::semigroup) throw InputError("construct cg expects a semigroup file");
      ValidationReport rep = validate_semigroup(*s.semigroup, exec);
      if (!rep.ok()) {
        print_report("inverse-semigroup laws", rep, err);
        throw InputError("the input is not an inverse semigroup");
      }
      OrderedGroupoid g = classical_g(*s.semigroup);
      PartitionResult pr = canonical_partition(g);
      serialize_structure(make_groupoid_structure(g, &*pr.partition, false), out);
      return exit_ok;
    }

    if (what == "i") {
      bool semi = semicategory || s.semicategory;
      auto [g, p] = groupoid_with_partition(s, exec, err);
      if (!semi && !p.top_heavy()) throw InputError("not top-heavy: construct i needs tops");
      InverseCert cert = i_of_groupoid(g, p, semi);
      serialize_structure(make_inverse_structure(cert, semi), out);
      return exit_ok;
    }

    if (what == "s") {
      auto [g, p] = groupoid_with_partition(s, exec, err);
      (void)p;  // classical_s re-derives inductivity via classify
      InverseSemigroupTable table = classical_s(g);
      serialize_structure(make_semigroup_structure(table), out);
      return exit_ok;
    }

    throw InputError("unknown construction " + what + " (one of: g, i, s, cg)");
  });
}

int run_roundtrip(bool semicategory, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    Structure s = parse_structure(in);
    const Exec exec = Exec::parallel;

    if (s.kind == Kind::inverse) {
      bool semi = semicategory || s.semicategory;
      InverseCert cert = certified_or_throw(s, exec, err);
      IsoWitness wit = roundtrip_category(cert, semi);
      out << "roundtrip: category ~ I(G(category)) verified; objects=" << s.cat->object_count()
          << " arrows=" << s.cat->arrow_count()
          << (wit.composites_identity ? "" : " (composites not identity)") << "\n";
      return exit_ok;
    }
    if (s.kind == Kind::ordered_groupoid) {
      bool semi = semicategory || s.semicategory;
      auto [g, p] = groupoid_with_partition(s, exec, err);
      if (semi) std::fill(p.tops.begin(), p.tops.end(), -1);
      if (!semi && !p.top_heavy()) throw InputError("not top-heavy: roundtrip needs tops");
      IsoWitness wit = roundtrip_groupoid(g, p, semi);
      out << "roundtrip: groupoid ~ G(I(groupoid)) verified; objects="
          << s.cat->object_count() << " arrows=" << s.cat->arrow_count()
          << " blocks=" << p.block_count()
          << (wit.partition_matches ? "" : " (partition mismatch)") << "\n";
      return exit_ok;
    }
    if (s.kind == Kind::semigroup) {
      ValidationReport rep = validate_semigroup(*s.semigroup, exec);
      if (!rep.ok()) {
        print_report("inverse-semigroup laws", rep, err);
        throw InputError("the input is not an inverse semigroup");
      }
      InverseSemigroupTable back = classical_s(classical_g(*s.semigroup));
      if (back.elements != s.semigroup->elements || back.mul != s.semigroup->mul ||
          back.inv != s.semigroup->inv)
        throw StructuralError("classical round trip changed the multiplication table");
      out << "roundtrip: S = S(G(S)) verified; elements=" << s.semigroup->size() << "\n";
      return exit_ok;
    }
    throw InputError("roundtrip expects an inverse, ordered-groupoid or semigroup file");
  });
}

int run_info(std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    Structure s = parse_structure(in);
    out << "kind: " << kind_name(s.kind) << (s.semicategory ? " semicategory" : "") << "\n";

    if (s.kind == Kind::semigroup) {
      const InverseSemigroupTable& t = *s.semigroup;
      int idems = 0, pairs = 0;
      for (int a = 0; a < t.size(); ++a) {
        if (t.idempotent(a)) ++idems;
        for (int b = 0; b < t.size(); ++b)
          if (natural_leq(t, a, b)) ++pairs;
      }
      out << "elements: " << t.size() << "\nidempotents: " << idems
          << "\nnatural order pairs: " << pairs << "\n";
      return exit_ok;
    }
    if (s.kind == Kind::functor) {
      out << "source objects: " << s.source->cat->object_count()
          << " arrows: " << s.source->cat->arrow_count() << "\n";
      out << "target objects: " << s.target->cat->object_count()
          << " arrows: " << s.target->cat->arrow_count() << "\n";
      return exit_ok;
    }

    out << "objects: " << s.cat->object_count() << "\narrows: " << s.cat->arrow_count() << "\n";
    if (s.kind == Kind::restriction || s.kind == Kind::inverse) {
      RestrictionData rd = restriction_of(s);
      out << "idempotents per object:";
      for (int o = 0; o < s.cat->object_count(); ++o)
        out << " " << s.cat->object_id(o) << "=" << idempotent_set(rd, o).elements.size();
      out << "\n";
      int totals = 0;
      for (int f = 0; f < s.cat->arrow_count(); ++f)
        if (is_total(rd, f)) ++totals;
      out << "total maps: " << totals << "\n";
      out << "natural order pairs: " << natural_order_pairs(rd).size() << "\n";
    }
    if (s.kind == Kind::ordered_groupoid) {
      OrderedGroupoid g = groupoid_of(s);
      out << "order pairs: " << g.order_pairs().size() << "\n";
      ClassifyFlags flags = classify(g);
      out << "ordered: " << (flags.ordered ? "yes" : "no") << "\n";
      out << "locally inductive: " << (flags.locally_inductive ? "yes" : "no") << "\n";
      out << "top-heavy: " << (flags.top_heavy ? "yes" : "no") << "\n";
      out << "inductive: " << (flags.inductive ? "yes" : "no") << "\n";
      if (flags.locally_inductive) {
        PartitionResult pr = canonical_partition(g);
        out << "blocks: " << pr.partition->block_count() << "\n";
        for (std::size_t bi = 0; bi < pr.partition->blocks.size(); ++bi) {
          out << "  block " << bi << " size " << pr.partition->blocks[bi].size();
          int t = pr.partition->tops[bi];
          if (t >= 0) out << " top " << s.cat->object_id(t);
          out << "\n";
        }
      }
    }
    return exit_ok;
  });
}

}  // namespace invcat::cli
