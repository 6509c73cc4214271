#include "weuler/gspace.hpp"

#include <algorithm>
#include <numeric>

namespace weuler {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
  std::int64_t components() {
    std::int64_t count = 0;
    for (std::uint32_t i = 0; i < parent.size(); ++i)
      if (find(i) == i) ++count;
    return count;
  }
};

/// View of a parent space through an elementwise map plus pinned generators:
/// chi'(S) = chi_parent(map(S) + pinned).  Backs every virtual restriction.
class LiftedSpace final : public Space {
 public:
  LiftedSpace(GroupPtr g, const Space* parent, std::vector<Elem> map, std::vector<Elem> pinned)
      : Space(std::move(g)), parent_(parent), map_(std::move(map)), pinned_(std::move(pinned)) {}

  std::int64_t chi_fixed(std::span<const Elem> gens) const override {
    std::vector<Elem> root;
    root.reserve(gens.size() + pinned_.size());
    for (Elem g : gens) {
      if (g >= map_.size()) throw IndexOutOfRange("element index out of range in lifted view");
      root.push_back(map_[g]);
    }
    root.insert(root.end(), pinned_.begin(), pinned_.end());
    return parent_->chi_fixed(root);
  }

  bool is_set() const override { return false; }

  std::unique_ptr<Space> restricted(const Subgroup& H,
                                    std::span<const Elem> pinned) const override {
    if (H.parent != group_) throw GroupMismatch("subgroup belongs to a different group");
    std::vector<Elem> map2;
    map2.reserve(H.elements.size());
    for (Elem h : H.elements) map2.push_back(map_[h]);
    std::vector<Elem> pinned2 = pinned_;
    for (Elem p : pinned) pinned2.push_back(map_[p]);
    return std::make_unique<LiftedSpace>(materialize(H).group, parent_, std::move(map2),
                                         std::move(pinned2));
  }

 private:
  const Space* parent_;
  std::vector<Elem> map_;
  std::vector<Elem> pinned_;
};

}  // namespace

std::unique_ptr<Space> lifted_view(GroupPtr H, const Space& parent, std::vector<Elem> map,
                                   std::vector<Elem> pinned) {
  return std::make_unique<LiftedSpace>(std::move(H), &parent, std::move(map), std::move(pinned));
}

GSet::GSet(GroupPtr G, std::size_t size, std::vector<Elem> rows)
    : Space(std::move(G)), size_(size), rows_(std::move(rows)) {}

GSet GSet::from_action(GroupPtr G, const std::vector<std::vector<Elem>>& rows) {
  const Elem n = G->order();
  if (rows.size() != n) throw NotAnAction("need one action row per group element");
  const std::size_t size = rows.empty() ? 0 : rows.front().size();
  std::vector<Elem> flat;
  flat.reserve(std::size_t(n) * size);
  for (const auto& row : rows) {
    if (row.size() != size) throw NotAnAction("action rows of unequal size");
    for (Elem x : row) {
      if (x >= size) throw NotAnAction("action image out of range");
      flat.push_back(x);
    }
  }
  GSet X(std::move(G), size, std::move(flat));
  const auto& group = *X.group();
  for (std::size_t x = 0; x < size; ++x) {
    if (X.act(group.identity(), static_cast<Elem>(x)) != x)
      throw NotAnAction("identity moves point " + std::to_string(x));
  }
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      const Elem gh = group.mul(g, h);
      for (std::size_t x = 0; x < size; ++x) {
        if (X.act(g, X.act(h, static_cast<Elem>(x))) != X.act(gh, static_cast<Elem>(x))) {
          throw NotAnAction("action is not compatible with multiplication at (g,h)=(" +
                            std::to_string(g) + "," + std::to_string(h) + "), x=" +
                            std::to_string(x));
        }
      }
    }
  }
  return X;
}

GSet GSet::from_generator_action(GroupPtr G, std::size_t size,
                                 const std::map<Elem, Perm>& generator_images) {
  const Elem n = G->order();
  for (const auto& [g, img] : generator_images) {
    if (g >= n) throw IndexOutOfRange("generator index out of range");
    if (img.size() != size) throw NotAnAction("generator image has wrong size");
  }
  // Walk the group from the identity, composing the generator images.
  std::vector<std::vector<Elem>> rows(n);
  Perm id(size);
  for (std::size_t i = 0; i < size; ++i) id[i] = static_cast<Elem>(i);
  rows[G->identity()] = id;
  std::vector<Elem> frontier{G->identity()};
  while (!frontier.empty()) {
    std::vector<Elem> next_frontier;
    for (Elem e : frontier) {
      for (const auto& [s, img] : generator_images) {
        const Elem t = G->mul(s, e);
        if (!rows[t].empty()) continue;
        Perm composed(size);
        for (std::size_t x = 0; x < size; ++x) composed[x] = img[rows[e][x]];
        rows[t] = std::move(composed);
        next_frontier.push_back(t);
      }
    }
    frontier = std::move(next_frontier);
  }
  for (Elem e = 0; e < n; ++e) {
    if (rows[e].empty())
      throw NotAnAction("the given elements do not generate the group (element " +
                        std::to_string(e) + " unreached)");
  }
  return from_action(std::move(G), rows);
}

GSet GSet::from_permutations(const PermGroup& P) {
  std::vector<std::vector<Elem>> rows(P.element_perms.begin(), P.element_perms.end());
  return from_action(P.group, rows);
}

GSet GSet::regular(GroupPtr G) {
  const Elem n = G->order();
  std::vector<Elem> flat(std::size_t(n) * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem x = 0; x < n; ++x) flat[std::size_t(g) * n + x] = G->mul(g, x);
  return GSet(std::move(G), n, std::move(flat));
}

GSet GSet::trivial(GroupPtr G, std::size_t points) {
  const Elem n = G->order();
  std::vector<Elem> flat(std::size_t(n) * points);
  for (Elem g = 0; g < n; ++g)
    for (std::size_t x = 0; x < points; ++x) flat[std::size_t(g) * points + x] = static_cast<Elem>(x);
  return GSet(std::move(G), points, std::move(flat));
}

std::int64_t GSet::fixed_count(const Subgroup& H) const {
  if (H.parent != group_) throw GroupMismatch("subgroup belongs to a different group");
  return chi_fixed(H.elements);
}

std::int64_t GSet::chi_fixed(std::span<const Elem> gens) const {
  for (Elem g : gens)
    if (g >= group_->order()) throw IndexOutOfRange("group element out of range");
  // A point fixed by every generator is fixed by the generated subgroup.
  std::int64_t count = 0;
  for (std::size_t x = 0; x < size_; ++x) {
    bool fixed = true;
    for (Elem g : gens) {
      if (act(g, static_cast<Elem>(x)) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

std::int64_t GSet::orbit_count() const {
  UnionFind uf(size_);
  for (Elem g = 0; g < group_->order(); ++g)
    for (std::size_t x = 0; x < size_; ++x) uf.unite(static_cast<std::uint32_t>(x), act(g, static_cast<Elem>(x)));
  const std::int64_t via_orbits = uf.components();

  std::int64_t fixed_total = 0;
  for (Elem g = 0; g < group_->order(); ++g)
    fixed_total += chi_fixed(std::span<const Elem>{&g, 1});
  if (fixed_total % group_->order() != 0 || fixed_total / group_->order() != via_orbits) {
    throw InternalMismatch("orbit count disagrees with the averaged fixed-point count");
  }
  return via_orbits;
}

std::unique_ptr<Space> GSet::restricted(const Subgroup& H, std::span<const Elem> pinned) const {
  if (H.parent != group_) throw GroupMismatch("subgroup belongs to a different group");
  for (Elem p : pinned)
    if (p >= group_->order()) throw IndexOutOfRange("pinned element out of range");

  std::vector<Elem> old_points;
  std::vector<Elem> new_index(size_, UINT32_MAX);
  for (std::size_t x = 0; x < size_; ++x) {
    bool fixed = true;
    for (Elem p : pinned) {
      if (act(p, static_cast<Elem>(x)) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      new_index[x] = static_cast<Elem>(old_points.size());
      old_points.push_back(static_cast<Elem>(x));
    }
  }

  auto mat = materialize(H);
  const std::size_t msize = old_points.size();
  std::vector<Elem> flat(std::size_t(mat.group->order()) * msize);
  for (Elem i = 0; i < mat.group->order(); ++i) {
    for (std::size_t k = 0; k < msize; ++k) {
      const Elem target = act(mat.lift[i], old_points[k]);
      if (new_index[target] == UINT32_MAX)
        throw InvalidInput("subgroup does not preserve the pinned fixed set");
      flat[std::size_t(i) * msize + k] = new_index[target];
    }
  }
  return std::unique_ptr<Space>(new GSet(mat.group, msize, std::move(flat)));
}

VirtualSpace::VirtualSpace(GroupPtr G, std::map<std::vector<Elem>, std::int64_t> chi,
                           const Limits& limits)
    : Space(std::move(G)),
      chi_(std::make_shared<const std::map<std::vector<Elem>, std::int64_t>>(std::move(chi))) {
  const auto lattice = all_subgroups(group_, limits);
  if (lattice.size() != chi_->size())
    throw InvalidInput("chi table must cover the subgroup lattice exactly (" +
                       std::to_string(lattice.size()) + " subgroups, " +
                       std::to_string(chi_->size()) + " entries)");
  for (const auto& H : lattice) {
    if (!chi_->count(H.elements)) throw InvalidInput("chi table is missing a subgroup");
  }
  // Conjugation invariance of the table.
  for (const auto& H : lattice) {
    const std::int64_t value = chi_->at(H.elements);
    for (Elem g = 0; g < group_->order(); ++g) {
      std::vector<Elem> conj;
      conj.reserve(H.elements.size());
      for (Elem h : H.elements) conj.push_back(group_->conj(g, h));
      std::sort(conj.begin(), conj.end());
      if (chi_->at(conj) != value)
        throw InvalidInput("chi table is not conjugation invariant");
    }
  }
}

std::int64_t VirtualSpace::chi_fixed(std::span<const Elem> gens) const {
  const Subgroup H = subgroup_generated(group_, gens);
  auto it = chi_->find(H.elements);
  if (it == chi_->end()) throw Error("chi table lookup failed for a generated subgroup");
  return it->second;
}

std::unique_ptr<Space> VirtualSpace::restricted(const Subgroup& H,
                                                std::span<const Elem> pinned) const {
  if (H.parent != group_) throw GroupMismatch("subgroup belongs to a different group");
  return lifted_view(materialize(H).group, *this, H.elements,
                     std::vector<Elem>(pinned.begin(), pinned.end()));
}

VirtualSpace tabulate(const GSet& X, const Limits& limits) {
  std::map<std::vector<Elem>, std::int64_t> chi;
  for (const auto& H : all_subgroups(X.group(), limits)) chi[H.elements] = X.fixed_count(H);
  return VirtualSpace(X.group(), std::move(chi), limits);
}

GSet product_gset(const GSet& A, const GSet& B, const Limits& limits) {
  GroupPtr P = direct_product(A.group(), B.group(), limits);
  const std::size_t sa = A.size(), sb = B.size();
  const Elem hb = B.group()->order();
  std::vector<Elem> flat(std::size_t(P->order()) * sa * sb);
  for (Elem e = 0; e < P->order(); ++e) {
    const Elem a = e / hb, b = e % hb;
    for (std::size_t x = 0; x < sa; ++x)
      for (std::size_t y = 0; y < sb; ++y)
        flat[std::size_t(e) * sa * sb + x * sb + y] =
            static_cast<Elem>(A.act(a, static_cast<Elem>(x)) * sb + B.act(b, static_cast<Elem>(y)));
  }
  return GSet(std::move(P), sa * sb, std::move(flat));
}

namespace {

/// Product of spaces with at least one virtual factor: values exist only at
/// product subgroups H1 x H2.
class VirtualProduct final : public Space {
 public:
  VirtualProduct(GroupPtr P, const Space* a, const Space* b)
      : Space(std::move(P)), a_(a), b_(b) {}

  std::int64_t chi_fixed(std::span<const Elem> gens) const override {
    const Subgroup H = subgroup_generated(group_, gens);
    const Elem hb = b_->group()->order();
    std::vector<Elem> pa, pb;
    for (Elem e : H.elements) {
      pa.push_back(e / hb);
      pb.push_back(e % hb);
    }
    std::sort(pa.begin(), pa.end());
    pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
    std::sort(pb.begin(), pb.end());
    pb.erase(std::unique(pb.begin(), pb.end()), pb.end());
    if (pa.size() * pb.size() != H.elements.size()) {
      throw VirtualProductUnsupported(
          "virtual product is defined only at product subgroups");
    }
    return a_->chi_fixed(pa) * b_->chi_fixed(pb);
  }

  bool is_set() const override { return false; }

  std::unique_ptr<Space> restricted(const Subgroup& H,
                                    std::span<const Elem> pinned) const override {
    if (H.parent != group_) throw GroupMismatch("subgroup belongs to a different group");
    return lifted_view(materialize(H).group, *this, H.elements,
                       std::vector<Elem>(pinned.begin(), pinned.end()));
  }

 private:
  const Space* a_;
  const Space* b_;
};

}  // namespace

std::unique_ptr<Space> space_product(const Space& a, const Space& b, const Limits& limits) {
  const auto* ga = dynamic_cast<const GSet*>(&a);
  const auto* gb = dynamic_cast<const GSet*>(&b);
  if (ga && gb) return std::make_unique<GSet>(product_gset(*ga, *gb, limits));
  return std::make_unique<VirtualProduct>(direct_product(a.group(), b.group(), limits), &a, &b);
}

GSet wreath_power(const WreathGroup& W, const GSet& X, const Limits& limits) {
  if (W.base != X.group()) throw GroupMismatch("wreath group base differs from the G-set group");
  const std::size_t n = W.n;
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= X.size();
    if (points > limits.max_group_order)
      throw SizeGuardExceeded("point count of the power set exceeds the cap");
  }
  const Elem m = W.group->order();
  if (std::uint64_t(m) * points * sizeof(Elem) > limits.max_table_bytes)
    throw SizeGuardExceeded("action table of the power set exceeds the byte cap");

  const std::size_t sz = X.size();
  std::vector<Elem> flat(std::size_t(m) * points);
  std::vector<Elem> digits(n), moved(n);
  for (Elem e = 0; e < m; ++e) {
    const WreathElement w = W.decode(e);
    std::vector<Elem> sinv(n);
    for (std::size_t i = 0; i < n; ++i) sinv[w.s[i]] = static_cast<Elem>(i);
    for (std::uint64_t x = 0; x < points; ++x) {
      std::uint64_t rest = x;
      for (std::size_t i = 0; i < n; ++i) {
        digits[i] = static_cast<Elem>(rest % sz);
        rest /= sz;
      }
      // ((g,s).x)_i = g_i . x_{s^{-1}(i)}
      for (std::size_t i = 0; i < n; ++i) moved[i] = X.act(w.g[i], digits[sinv[i]]);
      std::uint64_t enc = 0;
      for (std::size_t i = n; i-- > 0;) enc = enc * sz + moved[i];
      flat[std::size_t(e) * points + x] = static_cast<Elem>(enc);
    }
  }
  return GSet(W.group, points, std::move(flat));
}

GSet wreath_power(const GSet& X, std::size_t n, const Limits& limits) {
  return wreath_power(wreath_group(X.group(), n, limits), X, limits);
}

std::int64_t wreath_orbit_count(const GSet& X, std::size_t n, const Limits& limits) {
  const std::size_t sz = X.size();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= sz;
    if (points > limits.max_group_order)
      throw SizeGuardExceeded("point count of the power set exceeds the cap");
  }
  if (points == 0) return 0;

  UnionFind uf(points);
  std::vector<Elem> digits(n);
  auto decode = [&](std::uint64_t x) {
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = static_cast<Elem>(x % sz);
      x /= sz;
    }
  };
  auto encode = [&]() {
    std::uint64_t enc = 0;
    for (std::size_t i = n; i-- > 0;) enc = enc * sz + digits[i];
    return enc;
  };

  for (std::uint64_t x = 0; x < points; ++x) {
    // Base-group moves in coordinate 0.
    if (n >= 1) {
      for (Elem g = 0; g < X.group()->order(); ++g) {
        decode(x);
        digits[0] = X.act(g, digits[0]);
        uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(encode()));
      }
    }
    // Coordinate swap (0 1) and rotation (0 1 ... n-1) generate S_n.
    if (n >= 2) {
      decode(x);
      std::swap(digits[0], digits[1]);
      uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(encode()));
      decode(x);
      std::rotate(digits.begin(), digits.begin() + 1, digits.end());
      uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(encode()));
    }
  }
  return uf.components();
}

}  // namespace weuler
