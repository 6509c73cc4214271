#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "weuler/bigint.hpp"
#include "weuler/group.hpp"

namespace weuler {

/// Element (g, s) of G wr S_n: a vector of n group elements and a coordinate
/// permutation.  Any pair of matching length is structurally valid.
struct WreathElement {
  std::vector<Elem> g;
  Perm s;

  std::size_t n() const { return g.size(); }
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

WreathElement wreath_identity(const FiniteGroup& G, std::size_t n);
/// (g,s)(h,t) = (g * s(h), st) with s(h)_i = h_{s^{-1}(i)} and (st)(i) = s(t(i)).
WreathElement wreath_mul(const FiniteGroup& G, const WreathElement& a, const WreathElement& b);
/// (g,s)^{-1} = (s^{-1}(g^{-1}), s^{-1}).
WreathElement wreath_inv(const FiniteGroup& G, const WreathElement& a);

/// G wr S_n materialized as a table group of order |G|^n * n!.
/// Index encoding (stable; golden tests depend on it):
///   index = perm_rank(s) * |G|^n + sum_k g[k] * |G|^k
/// with lexicographic permutation ranking and coordinate 0 least significant.
struct WreathGroup {
  GroupPtr group;
  GroupPtr base;
  std::size_t n = 0;

  Elem encode(const WreathElement& w) const;
  WreathElement decode(Elem index) const;
};
WreathGroup wreath_group(const GroupPtr& G, std::size_t n,
                         const Limits& limits = default_limits());

std::uint64_t perm_rank(const Perm& s);
Perm perm_unrank(std::size_t n, std::uint64_t rank);

/// Cycles of s, each written starting with its smallest position, listed in
/// increasing order of that position.  Fixed points appear as 1-cycles.
std::vector<std::vector<Elem>> cycles_of(const Perm& s);

/// Conjugacy class of the ordered product g_{i_r} ... g_{i_2} g_{i_1} over a
/// cycle (i_1 ... i_r) of w.s.  The class does not depend on where the cycle
/// is cut (asserted).  Throws NotACycle if the positions are not a cycle of s.
std::uint32_t cycle_product_class(const FiniteGroup& G, const ConjugacyTable& classes,
                                  const WreathElement& w, std::span<const Elem> cycle);

/// The complete conjugacy invariant of an element of G wr S_n: for each class
/// c of G and cycle length r, how many r-cycles of s have cycle product in c.
struct ElementType {
  std::size_t n = 0;
  /// (class id, r, multiplicity), sorted by (class id, r); multiplicity > 0.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> entries;

  friend bool operator==(const ElementType&, const ElementType&) = default;
  friend auto operator<=>(const ElementType&, const ElementType&) = default;
};

ElementType element_type(const FiniteGroup& G, const ConjugacyTable& classes,
                         const WreathElement& w);

/// All types with sum r*m_r(c) = n, exactly once, in a deterministic order.
/// Their number equals the number of conjugacy classes of G wr S_n.
std::vector<ElementType> enumerate_types(const ConjugacyTable& classes, std::size_t n);

/// prod_{c,r} (r * |C_G(c)|)^{m_r(c)} * m_r(c)!
BigInt centralizer_order(const ElementType& t, const FiniteGroup& G,
                         const ConjugacyTable& classes);

/// Structure of the centralizer: one wreath factor per (c, r) with
/// m_r(c) > 0, of base order r * |C_G(c)| and symmetric degree m_r(c).
struct CentralizerShape {
  struct Factor {
    std::uint32_t class_id;
    std::uint32_t r;
    BigInt base_order;      // r * |C_G(c)|
    std::uint32_t degree;   // m_r(c)
  };
  std::vector<Factor> factors;
  BigInt total_order;
};
CentralizerShape centralizer_shape(const ElementType& t, const FiniteGroup& G,
                                   const ConjugacyTable& classes);

/// |G|^n * n! / centralizer_order(t).
BigInt class_size(const ElementType& t, const FiniteGroup& G, const ConjugacyTable& classes);

/// w = conjugator * standard * conjugator^{-1}, exactly.  The conjugator has
/// trivial permutation part; the standard element keeps w's permutation and
/// carries the class representative of each cycle product in the smallest
/// slot of its cycle, identities elsewhere.
struct NormalForm {
  WreathElement conjugator;
  WreathElement standard;
};
NormalForm normal_form(const FiniteGroup& G, const ConjugacyTable& classes,
                       const WreathElement& w);

}  // namespace weuler
