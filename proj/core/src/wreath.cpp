#include "weuler/wreath.hpp"

#include <algorithm>
#include <map>

namespace weuler {

WreathElement wreath_identity(const FiniteGroup& G, std::size_t n) {
  WreathElement w;
  w.g.assign(n, G.identity());
  w.s.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.s[i] = static_cast<Elem>(i);
  return w;
}

WreathElement wreath_mul(const FiniteGroup& G, const WreathElement& a, const WreathElement& b) {
  const std::size_t n = a.n();
  if (b.n() != n) throw SizeMismatch("wreath elements of different degree");
  WreathElement r;
  r.g.resize(n);
  r.s.resize(n);
  // s^{-1} of a.s
  std::vector<Elem> sinv(n);
  for (std::size_t i = 0; i < n; ++i) sinv[a.s[i]] = static_cast<Elem>(i);
  for (std::size_t i = 0; i < n; ++i) {
    r.g[i] = G.mul(a.g[i], b.g[sinv[i]]);
    r.s[i] = a.s[b.s[i]];
  }
  return r;
}

WreathElement wreath_inv(const FiniteGroup& G, const WreathElement& a) {
  const std::size_t n = a.n();
  WreathElement r;
  r.g.resize(n);
  r.s.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.s[a.s[i]] = static_cast<Elem>(i);
  // (s^{-1}(g^{-1}))_i = (g^{-1})_{s(i)}
  for (std::size_t i = 0; i < n; ++i) r.g[i] = G.inv(a.g[a.s[i]]);
  return r;
}

std::uint64_t perm_rank(const Perm& s) {
  const std::size_t n = s.size();
  std::uint64_t rank = 0;
  std::vector<std::uint64_t> factorials(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) factorials[i] = factorials[i - 1] * i;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = k + 1; j < n; ++j)
      if (s[j] < s[k]) ++smaller_later;
    rank += smaller_later * factorials[n - 1 - k];
  }
  return rank;
}

Perm perm_unrank(std::size_t n, std::uint64_t rank) {
  std::vector<std::uint64_t> factorials(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) factorials[i] = factorials[i - 1] * i;
  std::vector<Elem> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Elem>(i);
  Perm s(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t f = factorials[n - 1 - k];
    const std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    s[k] = pool[idx];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return s;
}

Elem WreathGroup::encode(const WreathElement& w) const {
  const std::size_t len = n;
  if (w.n() != len) throw SizeMismatch("wreath element degree mismatch");
  const std::uint64_t gorder = base->order();
  std::uint64_t gpart = 0;
  std::uint64_t weight = 1;
  for (std::size_t k = 0; k < len; ++k) {
    gpart += w.g[k] * weight;
    weight *= gorder;
  }
  return static_cast<Elem>(perm_rank(w.s) * weight + gpart);
}

WreathElement WreathGroup::decode(Elem index) const {
  const std::uint64_t gorder = base->order();
  std::uint64_t weight = 1;
  for (std::size_t k = 0; k < n; ++k) weight *= gorder;
  WreathElement w;
  w.g.resize(n);
  std::uint64_t gpart = index % weight;
  for (std::size_t k = 0; k < n; ++k) {
    w.g[k] = static_cast<Elem>(gpart % gorder);
    gpart /= gorder;
  }
  w.s = perm_unrank(n, index / weight);
  return w;
}

WreathGroup wreath_group(const GroupPtr& G, std::size_t n, const Limits& limits) {
  BigInt order = big_pow(BigInt(G->order()), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
  if (order > limits.max_group_order) {
    throw SizeGuardExceeded("wreath product order " + order.str() + " exceeds cap " +
                            std::to_string(limits.max_group_order));
  }
  if (order * order * BigInt(sizeof(Elem)) > limits.max_table_bytes) {
    throw SizeGuardExceeded("wreath product table for order " + order.str() +
                            " exceeds table byte cap");
  }

  WreathGroup W;
  W.base = G;
  W.n = n;

  const Elem m = static_cast<Elem>(order.convert_to<std::uint64_t>());
  std::vector<WreathElement> decoded(m);
  {
    WreathGroup scratch = W;  // decode needs base and n only
    for (Elem i = 0; i < m; ++i) decoded[i] = scratch.decode(i);
  }
  std::vector<Elem> flat(std::size_t(m) * m);
  {
    WreathGroup scratch = W;
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j)
        flat[std::size_t(i) * m + j] = scratch.encode(wreath_mul(*G, decoded[i], decoded[j]));
  }
  std::string label = G->label().empty() ? std::string{} : G->label() + "wrS" + std::to_string(n);
  W.group = FiniteGroup::trusted(std::move(flat), m, std::move(label), limits);
  return W;
}

std::vector<std::vector<Elem>> cycles_of(const Perm& s) {
  const std::size_t n = s.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Elem>> cycles;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<Elem> cycle;
    Elem j = static_cast<Elem>(i);
    do {
      seen[j] = 1;
      cycle.push_back(j);
      j = s[j];
    } while (j != i);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

Elem ordered_cycle_product(const FiniteGroup& G, const WreathElement& w,
                           std::span<const Elem> cycle, std::size_t start) {
  Elem acc = G.identity();
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    acc = G.mul(w.g[cycle[(start + k) % cycle.size()]], acc);
  }
  return acc;
}

}  // namespace

std::uint32_t cycle_product_class(const FiniteGroup& G, const ConjugacyTable& classes,
                                  const WreathElement& w, std::span<const Elem> cycle) {
  if (cycle.empty()) throw NotACycle("empty cycle");
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (cycle[k] >= w.n()) throw NotACycle("cycle position out of range");
    Elem next = cycle[(k + 1) % cycle.size()];
    if (w.s[cycle[k]] != next) throw NotACycle("positions do not form a cycle of s");
  }
  const std::uint32_t id = classes.class_of[ordered_cycle_product(G, w, cycle, 0)];
  // The class cannot depend on where the cycle is cut.
  for (std::size_t start = 1; start < cycle.size(); ++start) {
    if (classes.class_of[ordered_cycle_product(G, w, cycle, start)] != id)
      throw InternalMismatch("cycle product class depends on the cycle cut");
  }
  return id;
}

ElementType element_type(const FiniteGroup& G, const ConjugacyTable& classes,
                         const WreathElement& w) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> counts;
  for (const auto& cycle : cycles_of(w.s)) {
    const std::uint32_t cid = cycle_product_class(G, classes, w, cycle);
    ++counts[{cid, static_cast<std::uint32_t>(cycle.size())}];
  }
  ElementType t;
  t.n = w.n();
  for (const auto& [key, m] : counts) t.entries.emplace_back(key.first, key.second, m);
  return t;
}

namespace {

// Partitions of m as descending part lists, generated in a fixed order.
void partitions_rec(std::uint32_t m, std::uint32_t max_part, std::vector<std::uint32_t>& current,
                    std::vector<std::vector<std::uint32_t>>& out) {
  if (m == 0) {
    out.push_back(current);
    return;
  }
  for (std::uint32_t part = std::min(m, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(m - part, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  partitions_rec(m, m == 0 ? 1 : m, current, out);
  return out;
}

void append_partition_entries(ElementType& t, std::uint32_t class_id,
                              const std::vector<std::uint32_t>& parts) {
  std::map<std::uint32_t, std::uint32_t> mult;
  for (std::uint32_t r : parts) ++mult[r];
  for (const auto& [r, m] : mult) t.entries.emplace_back(class_id, r, m);
}

}  // namespace

std::vector<ElementType> enumerate_types(const ConjugacyTable& classes, std::size_t n) {
  const std::uint32_t k = static_cast<std::uint32_t>(classes.size());
  std::vector<ElementType> out;
  // Assign to each class a partition; the sizes sum to n.
  ElementType current;
  current.n = n;
  auto rec = [&](auto&& self, std::uint32_t class_id, std::uint32_t remaining) -> void {
    if (class_id + 1 == k) {
      const std::size_t mark = current.entries.size();
      for (const auto& parts : partitions_of(remaining)) {
        append_partition_entries(current, class_id, parts);
        out.push_back(current);
        current.entries.resize(mark);
      }
      return;
    }
    for (std::uint32_t take = 0; take <= remaining; ++take) {
      const std::size_t mark = current.entries.size();
      for (const auto& parts : partitions_of(take)) {
        append_partition_entries(current, class_id, parts);
        self(self, class_id + 1, remaining - take);
        current.entries.resize(mark);
      }
    }
  };
  if (k == 0) throw InvalidInput("conjugacy table is empty");
  rec(rec, 0, static_cast<std::uint32_t>(n));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BigInt base_centralizer_order(const FiniteGroup& G, const ConjugacyTable& classes,
                              std::uint32_t class_id) {
  // |C_G(c)| = |G| / |class of c|
  return exact_div(BigInt(G.order()), BigInt(classes.classes[class_id].size()),
                   "centralizer order");
}

}  // namespace

BigInt centralizer_order(const ElementType& t, const FiniteGroup& G,
                         const ConjugacyTable& classes) {
  BigInt total = 1;
  for (const auto& [cid, r, m] : t.entries) {
    total *= big_pow(BigInt(r) * base_centralizer_order(G, classes, cid), m);
    total *= factorial(m);
  }
  return total;
}

CentralizerShape centralizer_shape(const ElementType& t, const FiniteGroup& G,
                                   const ConjugacyTable& classes) {
  CentralizerShape shape;
  shape.total_order = 1;
  for (const auto& [cid, r, m] : t.entries) {
    CentralizerShape::Factor f;
    f.class_id = cid;
    f.r = r;
    f.base_order = BigInt(r) * base_centralizer_order(G, classes, cid);
    f.degree = m;
    shape.total_order *= big_pow(f.base_order, m) * factorial(m);
    shape.factors.push_back(std::move(f));
  }
  return shape;
}

BigInt class_size(const ElementType& t, const FiniteGroup& G, const ConjugacyTable& classes) {
  const BigInt group_order =
      big_pow(BigInt(G.order()), static_cast<unsigned>(t.n)) * factorial(static_cast<unsigned>(t.n));
  return exact_div(group_order, centralizer_order(t, G, classes), "class size");
}

NormalForm normal_form(const FiniteGroup& G, const ConjugacyTable& classes,
                       const WreathElement& w) {
  const std::size_t n = w.n();
  NormalForm nf;
  nf.conjugator = wreath_identity(G, n);
  nf.standard = wreath_identity(G, n);
  nf.standard.s = w.s;

  for (const auto& cycle : cycles_of(w.s)) {
    // Running products g_{i_k} ... g_{i_1} along the cycle.
    std::vector<Elem> partial(cycle.size());
    Elem acc = G.identity();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      acc = G.mul(w.g[cycle[k]], acc);
      partial[k] = acc;
    }
    const Elem pi = acc;
    const Elem c = classes.representative[classes.class_of[pi]];
    // Minimal-index conjugator from the representative to the cycle product.
    Elem p = UINT32_MAX;
    for (Elem h = 0; h < G.order(); ++h) {
      if (G.mul(pi, h) == G.mul(h, c)) {
        p = h;
        break;
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      nf.conjugator.g[cycle[k]] = G.mul(partial[k], p);
    nf.standard.g[cycle.front()] = c;
  }
  return nf;
}

}  // namespace weuler
