#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gerbe/errors.hpp"

namespace gerbe {

inline constexpr int kDefaultOrderBound = 5000;

// A finite group materialized as a full Cayley table.
// Conventions: elements are 0..n-1, element 0 is the two-sided identity.
// Immutable after construction; safe to share across threads.
class FiniteGroup {
public:
  // Empty placeholder; every populated instance comes from a factory below.
  FiniteGroup() = default;

  // Full invariant check: identity at 0, Latin square, associativity.
  // O(n^3); intended entry point for untrusted tables.
  static FiniteGroup validate(std::vector<std::vector<int>> table, std::string name = "");

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  // x g x^{-1}
  int conj(int x, int g) const { return table_[table_[x][g]][inverse_[x]]; }

  bool is_abelian() const;
  int element_order(int g) const;

  bool same_table(const FiniteGroup& other) const;

private:
  friend FiniteGroup trusted_group(std::vector<std::vector<int>>, std::string);
  void build_inverses();

  int order_ = 0;
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Cheap checks only (identity row/column, Latin square); for tables that are
// associative by construction, e.g. permutation closures and coset tables.
FiniteGroup trusted_group(std::vector<std::vector<int>> table, std::string name = "");

// ---- standard constructions ----------------------------------------------

FiniteGroup cyclic_group(int n);

// Index (a, b) -> a*|B| + b, so (0, 0) = identity = 0.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const std::string& name = "");

// Breadth-first closure of a set of permutations of 0..degree-1.
// The identity is discovered first; element order = discovery order.
// Composition convention: (p*q)(x) = p(q(x)).
struct PermGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> elements;  // permutation of each element, index order
  int element_index(const std::vector<int>& perm) const;  // -1 if absent
};

PermGroup perm_group_closure(int degree, const std::vector<std::vector<int>>& generators,
                             int order_bound = kDefaultOrderBound);

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    int order_bound = kDefaultOrderBound);

// Quotient H/N for a normal subgroup N (indices into H, must contain 0).
// Cosets are labeled 0..k-1 ordered by minimal element, so the identity
// coset is 0. proj maps each H element to its coset label.
struct QuotientResult {
  FiniteGroup quotient;
  std::vector<int> proj;
};

QuotientResult quotient_by_normal(const FiniteGroup& h, const std::vector<int>& normal);

// Classes sorted by minimal element; class of the identity first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// ---- homomorphisms and extensions -----------------------------------------

class GroupHom {
public:
  // Verifies map[0] = 0 and map[a.b] = map[a].map[b] for all a, b.
  static GroupHom validate(GroupPtr source, GroupPtr target, std::vector<int> map);

  const FiniteGroup& source() const { return *source_; }
  const FiniteGroup& target() const { return *target_; }
  GroupPtr source_ptr() const { return source_; }
  GroupPtr target_ptr() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int a) const { return map_[a]; }

  bool injective() const;
  bool surjective() const;

private:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  GroupPtr source_;
  GroupPtr target_;
  std::vector<int> map_;
};

// Short exact sequence 1 -> G -> H -> Q -> 1 with a chosen set-theoretic
// section of proj. The section is deterministic: section[q] is the smallest
// H index mapping to q (which gives section[0] = 0).
struct Extension {
  GroupPtr kernel;    // G
  GroupPtr total;     // H
  GroupPtr quotient;  // Q
  GroupHom incl;      // iota: G -> H
  GroupHom proj;      // pi: H -> Q
  std::vector<int> section;       // |Q| entries, H indices
  std::vector<int> incl_inverse;  // H index -> G index, -1 off the image

  const FiniteGroup& g() const { return *kernel; }
  const FiniteGroup& h() const { return *total; }
  const FiniteGroup& q() const { return *quotient; }
};

Extension build_extension(GroupPtr g, GroupPtr h, GroupPtr q, std::vector<int> iota,
                          std::vector<int> pi);

// The conjugation action of q on G: g -> iota^{-1}(s(q) iota(g) s(q)^{-1}).
// Verified to be an automorphism of G.
std::vector<int> conj_action(const Extension& ext, int q);

// All inner automorphisms of g as permutations (deduplicated, sorted).
std::vector<std::vector<int>> inner_automorphisms(const FiniteGroup& g);

// True iff every conj_action(ext, q) is inner on G, i.e. the induced map
// Q -> Out(G) is trivial.
bool is_banded(const Extension& ext);

}  // namespace gerbe
