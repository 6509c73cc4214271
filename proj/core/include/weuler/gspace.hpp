#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "weuler/group.hpp"
#include "weuler/wreath.hpp"

namespace weuler {

/// A finite model of a G-space, presented through the Euler characteristics
/// of its fixed-point sets: chi_fixed(S) = chi(M^{<S>}).  Implementations are
/// immutable after construction; all queries are pure.
class Space {
 public:
  virtual ~Space() = default;
  const GroupPtr& group() const { return group_; }

  /// chi of the fixed set of the subgroup generated by gens.
  virtual std::int64_t chi_fixed(std::span<const Elem> gens) const = 0;

  /// Honest finite G-set (true) or formal chi table (false).
  virtual bool is_set() const = 0;

  /// M^{<pinned>} as an H-space, for H inside the centralizer of pinned.
  /// The result may reference *this; keep the parent alive while using it.
  virtual std::unique_ptr<Space> restricted(const Subgroup& H,
                                            std::span<const Elem> pinned) const = 0;

 protected:
  explicit Space(GroupPtr g) : group_(std::move(g)) {}
  GroupPtr group_;
};

/// An honest finite G-set given by a full action table.
class GSet final : public Space {
 public:
  /// rows[g][x] = g . x; checks the identity row and the mixed associativity
  /// law act(g, act(h, x)) == act(gh, x) in full.  Throws NotAnAction with a
  /// witness pair.
  static GSet from_action(GroupPtr G, const std::vector<std::vector<Elem>>& rows);

  /// Action given on a generating set only; the rest is derived by closure.
  /// generator_images maps element index -> point permutation.
  static GSet from_generator_action(GroupPtr G, std::size_t size,
                                    const std::map<Elem, Perm>& generator_images);

  /// The natural action of a permutation group on its points.
  static GSet from_permutations(const PermGroup& P);

  /// G acting on itself by left translation.
  static GSet regular(GroupPtr G);
  /// Trivial action on the given number of points.
  static GSet trivial(GroupPtr G, std::size_t points);
  static GSet point(GroupPtr G) { return trivial(std::move(G), 1); }

  std::size_t size() const { return size_; }
  Elem act(Elem g, Elem x) const { return rows_[std::size_t(g) * size_ + x]; }

  /// |{x : h.x = x for all h in H}|.  Throws GroupMismatch if H lives in a
  /// different materialized group.
  std::int64_t fixed_count(const Subgroup& H) const;

  /// Number of orbits, computed both by union-find and by the averaged
  /// fixed-point count; the two must agree.
  std::int64_t orbit_count() const;

  std::int64_t chi_fixed(std::span<const Elem> gens) const override;
  bool is_set() const override { return true; }
  std::unique_ptr<Space> restricted(const Subgroup& H,
                                    std::span<const Elem> pinned) const override;

 private:
  GSet(GroupPtr G, std::size_t size, std::vector<Elem> rows);
  std::size_t size_ = 0;
  std::vector<Elem> rows_;
  friend GSet product_gset(const GSet&, const GSet&, const Limits&);
  friend GSet wreath_power(const WreathGroup&, const GSet&, const Limits&);
};

/// A formal G-space: a conjugation-invariant integer table H -> chi(M^H)
/// over the full subgroup lattice.  Not every such table arises from an
/// actual space; operations that would need one fail loudly (NonIntegral).
class VirtualSpace final : public Space {
 public:
  /// Keys are canonical subgroup element lists.  Checks that the table
  /// covers all_subgroups(G) exactly and is conjugation-invariant.
  VirtualSpace(GroupPtr G, std::map<std::vector<Elem>, std::int64_t> chi,
               const Limits& limits = default_limits());

  std::int64_t chi_fixed(std::span<const Elem> gens) const override;
  bool is_set() const override { return false; }
  std::unique_ptr<Space> restricted(const Subgroup& H,
                                    std::span<const Elem> pinned) const override;

  const std::map<std::vector<Elem>, std::int64_t>& table() const { return *chi_; }

 private:
  std::shared_ptr<const std::map<std::vector<Elem>, std::int64_t>> chi_;
};

/// Tabulates chi(X^H) over the full lattice of G.
VirtualSpace tabulate(const GSet& X, const Limits& limits = default_limits());

/// View of a parent space through an elementwise group map plus pinned
/// generators: chi'(S) = chi_parent(map(S) + pinned).  The view references
/// the parent; keep it alive.
std::unique_ptr<Space> lifted_view(GroupPtr H, const Space& parent, std::vector<Elem> map,
                                   std::vector<Elem> pinned);

/// The product space over G1 x G2.  For two G-sets this is the honest
/// product set.  If either side is virtual, values exist only at product
/// subgroups H1 x H2 (VirtualProductUnsupported elsewhere), and the result
/// references both inputs.
std::unique_ptr<Space> space_product(const Space& a, const Space& b,
                                     const Limits& limits = default_limits());

/// X^n with the wreath action ((g,s).x)_i = g_i . x_{s^{-1}(i)}.
/// Points are encoded base |X|, coordinate 0 least significant.
GSet wreath_power(const WreathGroup& W, const GSet& X,
                  const Limits& limits = default_limits());
GSet wreath_power(const GSet& X, std::size_t n, const Limits& limits = default_limits());

/// Orbit count of G wr S_n on X^n by union-find over generator moves; never
/// materializes the wreath group, so it scales to n well past the table cap.
std::int64_t wreath_orbit_count(const GSet& X, std::size_t n,
                                const Limits& limits = default_limits());

}  // namespace weuler
