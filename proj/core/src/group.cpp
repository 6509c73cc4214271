#include "weuler/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>

namespace weuler {

const Limits& default_limits() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("WREATH_EULER_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.hom_budget = v;
    }
    return l;
  }();
  return limits;
}

namespace {

void check_order_caps(std::uint64_t order, const Limits& limits) {
  if (order == 0) throw InvalidInput("group order must be positive");
  if (order > limits.max_group_order) {
    throw SizeGuardExceeded("materialized order " + std::to_string(order) +
                            " exceeds cap " + std::to_string(limits.max_group_order));
  }
  if (order * order * sizeof(Elem) > limits.max_table_bytes) {
    throw SizeGuardExceeded("multiplication table for order " + std::to_string(order) +
                            " exceeds table byte cap");
  }
}

std::string triple_witness(Elem a, Elem b, Elem c) {
  return "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

void FiniteGroup::finish(const Limits& limits, bool check_associativity) {
  check_order_caps(order_, limits);
  const Elem n = order_;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n) {
      throw NotAGroup("table entry " + std::to_string(table_[i]) + " out of range at flat index " +
                      std::to_string(i));
    }
  }

  if (check_associativity) {
    if (n <= 256) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw NotAGroup("associativity fails at " + triple_witness(a, b, c));
    } else {
      // Deterministic sample of order^2 triples.
      std::uint64_t state = 0x9e3779b97f4a7c15ull;
      auto next = [&state, n]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<Elem>((state >> 33) % n);
      };
      for (std::uint64_t k = 0; k < std::uint64_t(n) * n; ++k) {
        Elem a = next(), b = next(), c = next();
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw NotAGroup("associativity fails at " + triple_witness(a, b, c));
      }
    }
  }

  bool found_identity = false;
  for (Elem e = 0; e < n && !found_identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (mul(e, a) != a || mul(a, e) != a) ok = false;
    }
    if (ok) {
      identity_ = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw NotAGroup("no two-sided identity");

  inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");
  }
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::string label,
                                 const Limits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("empty multiplication table");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = static_cast<Elem>(n);
  g->label_ = std::move(label);
  g->table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidInput("multiplication table is not square");
    g->table_.insert(g->table_.end(), row.begin(), row.end());
  }
  g->finish(limits, /*check_associativity=*/true);
  return g;
}

GroupPtr FiniteGroup::trusted(std::vector<Elem> flat_table, Elem order, std::string label,
                              const Limits& limits) {
  if (flat_table.size() != std::size_t(order) * order)
    throw InvalidInput("flat table size does not match order");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->label_ = std::move(label);
  g->table_ = std::move(flat_table);
  g->finish(limits, /*check_associativity=*/false);
  return g;
}

namespace {

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

void check_permutation(const Perm& p, Elem degree) {
  if (p.size() != degree) throw NotAPermutation("generator has wrong degree");
  std::vector<char> seen(degree, 0);
  for (Elem v : p) {
    if (v >= degree || seen[v]) throw NotAPermutation("generator is not a bijection");
    seen[v] = 1;
  }
}

}  // namespace

PermGroup perm_group(Elem degree, const std::vector<Perm>& generators, std::string label,
                     const Limits& limits) {
  if (degree == 0) throw InvalidInput("permutation degree must be positive");
  for (const auto& g : generators) check_permutation(g, degree);

  Perm id(degree);
  for (Elem i = 0; i < degree; ++i) id[i] = i;

  std::vector<Perm> elements{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Perm current = elements[head];  // copy: elements may reallocate
    for (const auto& gen : generators) {
      Perm next = compose(current, gen);
      if (index.emplace(next, static_cast<Elem>(elements.size())).second) {
        if (elements.size() >= limits.max_group_order)
          throw SizeGuardExceeded("permutation closure exceeds the element cap");
        elements.push_back(std::move(next));
      }
    }
  }

  const Elem n = static_cast<Elem>(elements.size());
  check_order_caps(n, limits);
  std::vector<Elem> flat(std::size_t(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) flat[std::size_t(i) * n + j] = index.at(compose(elements[i], elements[j]));

  PermGroup result;
  result.group = FiniteGroup::trusted(std::move(flat), n, std::move(label), limits);
  result.degree = degree;
  result.element_perms = std::move(elements);
  return result;
}

GroupPtr FiniteGroup::from_permutations(Elem degree, const std::vector<Perm>& generators,
                                        std::string label, const Limits& limits) {
  return perm_group(degree, generators, std::move(label), limits).group;
}

unsigned FiniteGroup::element_order(Elem g) const {
  Elem acc = g;
  unsigned k = 1;
  while (acc != identity_) {
    acc = mul(acc, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end());
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (parent->mul(elements[i], elements[j]) != parent->mul(elements[j], elements[i]))
        return false;
  return true;
}

ConjugacyTable conjugacy_classes(const FiniteGroup& G) {
  const Elem n = G.order();
  ConjugacyTable table;
  table.class_of.assign(n, UINT32_MAX);
  for (Elem g = 0; g < n; ++g) {
    if (table.class_of[g] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(table.classes.size());
    std::set<Elem> members;
    for (Elem h = 0; h < n; ++h) members.insert(G.conj(h, g));
    std::vector<Elem> cls(members.begin(), members.end());
    for (Elem m : cls) table.class_of[m] = id;
    table.representative.push_back(g);  // g is minimal: smaller members were assigned earlier
    table.classes.push_back(std::move(cls));
  }
  return table;
}

namespace {

void check_elements_in_range(const FiniteGroup& G, std::span<const Elem> S) {
  for (Elem s : S)
    if (s >= G.order())
      throw IndexOutOfRange("element index " + std::to_string(s) + " out of range");
}

}  // namespace

Subgroup centralizer(const GroupPtr& G, std::span<const Elem> S) {
  check_elements_in_range(*G, S);
  Subgroup result{G, {}};
  for (Elem h = 0; h < G->order(); ++h) {
    bool commutes = true;
    for (Elem s : S) {
      if (G->mul(h, s) != G->mul(s, h)) {
        commutes = false;
        break;
      }
    }
    if (commutes) result.elements.push_back(h);
  }
  return result;
}

Subgroup subgroup_generated(const GroupPtr& G, std::span<const Elem> S) {
  check_elements_in_range(*G, S);
  std::vector<char> member(G->order(), 0);
  std::vector<Elem> closure{G->identity()};
  member[G->identity()] = 1;
  for (Elem s : S) {
    if (!member[s]) {
      member[s] = 1;
      closure.push_back(s);
    }
  }
  // In a finite group, closure under multiplication by the generators
  // reaches inverses as well.
  for (std::size_t head = 0; head < closure.size(); ++head) {
    for (Elem s : S) {
      Elem next = G->mul(closure[head], s);
      if (!member[next]) {
        member[next] = 1;
        closure.push_back(next);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return Subgroup{G, std::move(closure)};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G, const Limits& limits) {
  if (G->order() > limits.lattice_cap) {
    throw SizeGuardExceeded("subgroup lattice enumeration capped at order " +
                            std::to_string(limits.lattice_cap));
  }

  std::set<std::vector<Elem>> known;
  std::vector<std::vector<Elem>> work;
  auto add = [&](std::vector<Elem> elems) {
    if (known.insert(elems).second) work.push_back(std::move(elems));
  };

  for (Elem g = 0; g < G->order(); ++g) add(subgroup_generated(G, std::span<const Elem>{&g, 1}).elements);

  // Close under joins <A u {g}>; every subgroup arises by adjoining one
  // generator at a time to a cyclic seed.
  for (std::size_t head = 0; head < work.size(); ++head) {
    const std::vector<Elem> current = work[head];
    if (current.size() == G->order()) continue;
    for (Elem g = 0; g < G->order(); ++g) {
      if (std::binary_search(current.begin(), current.end(), g)) continue;
      std::vector<Elem> gens = current;
      gens.push_back(g);
      add(subgroup_generated(G, gens).elements);
    }
  }

  std::vector<Subgroup> result;
  result.reserve(known.size());
  for (const auto& elems : known) result.push_back(Subgroup{G, elems});
  std::sort(result.begin(), result.end());
  return result;
}

GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H, const Limits& limits) {
  const std::uint64_t order = std::uint64_t(G->order()) * H->order();
  check_order_caps(order, limits);
  const Elem n = static_cast<Elem>(order);
  const Elem hn = H->order();
  std::vector<Elem> flat(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a) {
    const Elem a1 = a / hn, a2 = a % hn;
    for (Elem b = 0; b < n; ++b) {
      const Elem b1 = b / hn, b2 = b % hn;
      flat[std::size_t(a) * n + b] = G->mul(a1, b1) * hn + H->mul(a2, b2);
    }
  }
  std::string label = G->label().empty() || H->label().empty()
                          ? std::string{}
                          : G->label() + "x" + H->label();
  return FiniteGroup::trusted(std::move(flat), n, std::move(label), limits);
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  if (n == 0) throw InvalidInput("p-part of zero");
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_p_power(std::uint64_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::uint32_t> p_power_classes(const FiniteGroup& G, const ConjugacyTable& classes,
                                           unsigned p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::vector<std::uint32_t> result;
  for (std::uint32_t id = 0; id < classes.size(); ++id) {
    if (is_p_power(G.element_order(classes.representative[id]), p)) result.push_back(id);
  }
  return result;
}

MaterializedSubgroup materialize(const Subgroup& H) {
  const auto& G = *H.parent;
  const Elem m = H.order();
  std::vector<Elem> pos(G.order(), UINT32_MAX);
  for (Elem i = 0; i < m; ++i) pos[H.elements[i]] = i;
  std::vector<Elem> flat(std::size_t(m) * m);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      Elem prod = G.mul(H.elements[i], H.elements[j]);
      if (pos[prod] == UINT32_MAX) throw NotAGroup("subgroup element set is not closed");
      flat[std::size_t(i) * m + j] = pos[prod];
    }
  }
  MaterializedSubgroup result;
  result.group = FiniteGroup::trusted(std::move(flat), m, {}, default_limits());
  result.lift = H.elements;
  return result;
}

GroupPtr trivial_group() {
  return FiniteGroup::trusted({0}, 1, "1");
}

GroupPtr cyclic_group(unsigned n) {
  if (n == 0) throw InvalidInput("cyclic group order must be positive");
  std::vector<Elem> flat(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[std::size_t(a) * n + b] = (a + b) % n;
  return FiniteGroup::trusted(std::move(flat), n, "Z" + std::to_string(n));
}

GroupPtr quaternion_group() {
  // Units {1, -1, i, -i, j, -j, k, -k}; index = 2*axis + (negative ? 1 : 0).
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int extra_neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int neg = (a & 1) ^ (b & 1) ^ extra_neg[ax][bx];
      table[a][b] = static_cast<Elem>(2 * axis[ax][bx] + neg);
    }
  }
  return FiniteGroup::from_table(table, "Q8");
}

PermGroup symmetric_group(unsigned n, const Limits& limits) {
  if (n <= 1) return perm_group(1, {}, "S" + std::to_string(n), limits);
  Perm swap01(n), cycle(n);
  for (Elem i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return perm_group(n, {swap01, cycle}, "S" + std::to_string(n), limits);
}

PermGroup dihedral_group(unsigned n, const Limits& limits) {
  if (n < 3) throw InvalidInput("dihedral group needs n >= 3");
  Perm rot(n), flip(n);
  for (Elem i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return perm_group(n, {rot, flip}, "D" + std::to_string(n), limits);
}

}  // namespace weuler
