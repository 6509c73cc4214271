#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "weuler/config.hpp"
#include "weuler/error.hpp"

namespace weuler {

/// Dense element index into a multiplication table.
using Elem = std::uint32_t;
/// Permutation stored as images: p[i] is where i goes.
using Perm = std::vector<Elem>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group materialized as a dense multiplication table over element
/// indices 0..order-1.  Immutable after construction; share via GroupPtr.
/// Groups are compared by pointer identity throughout the library.
class FiniteGroup {
 public:
  /// Validates the table: dense indices, two-sided identity and inverses,
  /// associativity (full triple loop up to order 256, sampled beyond).
  /// Throws NotAGroup with a witness on failure.
  static GroupPtr from_table(const std::vector<std::vector<Elem>>& table,
                             std::string label = {},
                             const Limits& limits = default_limits());

  /// Closes the generators under composition.  The identity gets index 0,
  /// remaining elements are indexed in breadth-first discovery order.
  static GroupPtr from_permutations(Elem degree, const std::vector<Perm>& generators,
                                    std::string label = {},
                                    const Limits& limits = default_limits());

  /// For groups associative by construction (products, wreath products,
  /// materialized subgroups): skips the associativity loop, still derives
  /// identity and inverses.  flat table is row-major order*order.
  static GroupPtr trusted(std::vector<Elem> flat_table, Elem order, std::string label,
                          const Limits& limits = default_limits());

  Elem order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem identity() const { return identity_; }
  /// h g h^{-1}
  Elem conj(Elem h, Elem g) const { return mul(mul(h, g), inv_[h]); }
  unsigned element_order(Elem g) const;
  bool is_abelian() const;
  const std::string& label() const { return label_; }

 private:
  FiniteGroup() = default;
  void finish(const Limits& limits, bool check_associativity);

  Elem order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::string label_;
};

/// Subgroup in canonical form: the sorted list of its element indices.
/// Equality of subgroups is equality of these lists.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> elements;  // sorted

  Elem order() const { return static_cast<Elem>(elements.size()); }
  bool contains(Elem g) const;
  bool contains_all(const Subgroup& other) const;
  bool is_abelian() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements == b.elements;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  }
};

struct ConjugacyTable {
  std::vector<std::vector<Elem>> classes;   // each sorted; ordered by representative
  std::vector<Elem> representative;          // minimal element of each class
  std::vector<std::uint32_t> class_of;       // element -> class id
  std::size_t size() const { return classes.size(); }
};

ConjugacyTable conjugacy_classes(const FiniteGroup& G);

/// {h : hs = sh for all s in S}.
Subgroup centralizer(const GroupPtr& G, std::span<const Elem> S);

/// Closure of S + identity under multiplication (inverses come for free in a
/// finite group).
Subgroup subgroup_generated(const GroupPtr& G, std::span<const Elem> S);

/// Every subgroup of G exactly once, sorted by order then lexicographically.
/// Seeds with the cyclic subgroups and closes under joins.
/// Requires |G| <= limits.lattice_cap.
std::vector<Subgroup> all_subgroups(const GroupPtr& G, const Limits& limits = default_limits());

/// Componentwise product; pair (a, b) gets index a*|H| + b.
GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H,
                        const Limits& limits = default_limits());

/// Ids of the conjugacy classes whose elements have order a power of p
/// (the identity class included).  Throws NotPrime.
std::vector<std::uint32_t> p_power_classes(const FiniteGroup& G, const ConjugacyTable& classes,
                                           unsigned p);

/// A subgroup rebuilt as a standalone group.  lift[i] is the parent element
/// behind new index i (lift is sorted, so new indices follow parent order).
struct MaterializedSubgroup {
  GroupPtr group;
  std::vector<Elem> lift;
};
MaterializedSubgroup materialize(const Subgroup& H);

bool is_prime(unsigned n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, unsigned p);
bool is_p_power(std::uint64_t n, unsigned p);

// Stock groups used by the CLI corpus and the test suites.
GroupPtr trivial_group();
GroupPtr cyclic_group(unsigned n);
GroupPtr quaternion_group();

/// Permutation group that remembers how each element acts; feeds natural
/// G-set constructions.
struct PermGroup {
  GroupPtr group;
  Elem degree = 0;
  std::vector<Perm> element_perms;  // indexed like the group
};
PermGroup perm_group(Elem degree, const std::vector<Perm>& generators, std::string label = {},
                     const Limits& limits = default_limits());
PermGroup symmetric_group(unsigned n, const Limits& limits = default_limits());
PermGroup dihedral_group(unsigned n, const Limits& limits = default_limits());

}  // namespace weuler
