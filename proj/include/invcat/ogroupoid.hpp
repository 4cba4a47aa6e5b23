#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "invcat/fincat.hpp"
#include "invcat/report.hpp"

namespace invcat {

// A groupoid with an explicit partial order on arrows. The order is stored on
// arrows only; the object order is derived through identity arrows. The pair
// list is reflexively closed and sorted at construction, with a dense matrix
// for O(1) queries.
class OrderedGroupoid {
 public:
  OrderedGroupoid() = default;
  OrderedGroupoid(CatPtr base, std::vector<int> ginv, std::vector<std::pair<int, int>> order);

  const FinCategory& cat() const { return *base_; }
  const CatPtr& base() const { return base_; }
  int ginv(int f) const { return ginv_[static_cast<std::size_t>(f)]; }
  const std::vector<int>& ginv_table() const { return ginv_; }

  bool leq(int f, int g) const {
    return matrix_[static_cast<std::size_t>(f) * static_cast<std::size_t>(cat().arrow_count()) +
                   static_cast<std::size_t>(g)] != 0;
  }
  bool object_leq(int A, int B) const;
  const std::vector<std::pair<int, int>>& order_pairs() const { return order_; }

 private:
  CatPtr base_;
  std::vector<int> ginv_;
  std::vector<std::pair<int, int>> order_;
  std::vector<std::uint8_t> matrix_;
};

// The {M_i} data: disjoint blocks of objects covering the object set, each a
// meet-semilattice under the induced order, with per-block meet tables and an
// optional top. Blocks are sorted by least member, members sorted.
struct SemilatticePartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;          // object index -> block index
  std::vector<std::vector<int>> meet; // per block, dense local x local -> object index
  std::vector<int> tops;              // per block, object index or -1

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool top_heavy() const;
  int local_index(int block, int object) const;
  // Meet of two objects, when both lie in one block; nullopt otherwise.
  std::optional<int> meet_of(int A, int B) const;
};

// Derived object order: A <= B iff ident(A) <= ident(B). Throws InputError on
// an unknown object index.
bool object_order(const OrderedGroupoid& g, int A, int B);

// Groupoid laws, partial-order laws, axioms (i) and (ii) exhaustively, and
// axioms (iii)/(iv) by existence-and-uniqueness search. Base category
// violations are reported first; the remaining checks need a valid category.
ValidationReport check_ordered_groupoid(const OrderedGroupoid& g, Exec exec = Exec::parallel);

// The unique f' <= f with dom f' = A. Requires A <= dom f (InputError "not <=");
// zero or multiple candidates mean the input was not an ordered groupoid.
int restrict_to(const OrderedGroupoid& g, int f, int A);

// The unique f' <= f with cod f' = B, cross-checked against
// ginv(restrict_to(ginv f, B)).
int corestrict_to(const OrderedGroupoid& g, int B, int f);

// Greatest lower bound in the derived object order, if any.
std::optional<int> object_meet(const OrderedGroupoid& g, int A, int B);

// alpha (x) beta = comp(restrict(alpha, m), corestrict(m, beta)) at
// m = dom(alpha) /\ cod(beta); nullopt when the meet does not exist.
std::optional<int> tensor(const OrderedGroupoid& g, int alpha, int beta);

struct PartitionResult {
  std::optional<SemilatticePartition> partition;
  ValidationReport report;  // names blocks and pairs lacking meets

  bool ok() const { return partition.has_value(); }
};

// Blocks are the connected components of the comparability graph; meets by
// greatest-lower-bound search within each block; tops where a maximum exists.
PartitionResult canonical_partition(const OrderedGroupoid& g);

// A stored partition must equal the canonical one (same blocks and tops).
ValidationReport validate_stored_partition(const OrderedGroupoid& g,
                                           const std::vector<std::vector<int>>& blocks,
                                           const std::vector<int>& tops);

struct ClassifyFlags {
  bool ordered = false;
  bool locally_inductive = false;
  bool top_heavy = false;  // every block has a maximum (its empty meet)
  bool inductive = false;  // locally inductive with exactly one block
};

ClassifyFlags classify(const OrderedGroupoid& g);

// f <= g implies F(f) <= F(g).
ValidationReport check_ordered_functor(const FunctorData& f, const OrderedGroupoid& src,
                                       const OrderedGroupoid& tgt, Exec exec = Exec::parallel);

// objMap(A /\ B) = objMap(A) /\ objMap(B) whenever the left meet exists,
// including empty meets (tops map to tops), plus the tensor-preservation
// consequence F(a (x) b) = F(a) (x) F(b) over all pairs.
ValidationReport check_locally_inductive_functor(const FunctorData& f, const OrderedGroupoid& src,
                                                 const SemilatticePartition& src_part,
                                                 const OrderedGroupoid& tgt,
                                                 const SemilatticePartition& tgt_part);

// Both sides agree on every triple where both are defined, and their
// existence patterns match.
ValidationReport check_tensor_associativity(const OrderedGroupoid& g, Exec exec = Exec::parallel);

// Tensor with ginv pseudoinverses: a (x) a° (x) a = a over all arrows of an
// inductive groupoid.
ValidationReport check_tensor_pseudoinverses(const OrderedGroupoid& g);

// True when every source-block top maps onto the top of its image block.
bool preserves_tops(const FunctorData& f, const SemilatticePartition& src_part,
                    const SemilatticePartition& tgt_part);

// Side-by-side union with relabelled ids ("<prefix>id"); orders and inverses
// carried over, no cross arrows.
OrderedGroupoid disjoint_union(const OrderedGroupoid& a, const OrderedGroupoid& b,
                               std::string_view prefix_a, std::string_view prefix_b);

}  // namespace invcat
