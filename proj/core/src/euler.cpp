#include "weuler/euler.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace weuler {

Presentation Presentation::trivial() {
  Presentation p;
  p.abelian = true;
  return p;
}

Presentation Presentation::free_abelian(std::size_t d) {
  Presentation p;
  p.gens = d;
  p.gen_p.assign(d, 0);
  p.abelian = true;
  return p;
}

Presentation Presentation::profinite_abelian(std::size_t d, unsigned pr) {
  if (!is_prime(pr)) throw NotPrime(std::to_string(pr) + " is not prime");
  Presentation p;
  p.gens = d;
  p.gen_p.assign(d, pr);
  p.abelian = true;
  return p;
}

Presentation Presentation::presented(std::size_t k, std::vector<std::vector<int>> relators) {
  for (const auto& word : relators) {
    for (int idx : word) {
      if (idx == 0 || std::size_t(idx > 0 ? idx : -idx) > k)
        throw InvalidInput("relator index out of range");
    }
  }
  Presentation p;
  p.gens = k;
  p.gen_p.assign(k, 0);
  p.relators = std::move(relators);
  return p;
}

namespace {

// Commutator relators making an abelian presentation explicit.
std::vector<std::vector<int>> explicit_relators(const Presentation& p) {
  std::vector<std::vector<int>> rel = p.relators;
  if (p.abelian) {
    for (std::size_t i = 0; i < p.gens; ++i)
      for (std::size_t j = i + 1; j < p.gens; ++j)
        rel.push_back({int(i + 1), int(j + 1), -int(i + 1), -int(j + 1)});
  }
  return rel;
}

}  // namespace

Presentation Presentation::product(const Presentation& a, const Presentation& b) {
  Presentation p;
  p.gens = a.gens + b.gens;
  p.gen_p = a.gen_p;
  p.gen_p.insert(p.gen_p.end(), b.gen_p.begin(), b.gen_p.end());
  auto shift = [&](const std::vector<std::vector<int>>& rels) {
    std::vector<std::vector<int>> out;
    for (const auto& word : rels) {
      std::vector<int> shifted;
      for (int idx : word) shifted.push_back(idx > 0 ? idx + int(a.gens) : idx - int(a.gens));
      out.push_back(std::move(shifted));
    }
    return out;
  };
  if (a.abelian && b.abelian) {
    p.abelian = true;
    p.relators = a.relators;
    for (auto& w : shift(b.relators)) p.relators.push_back(std::move(w));
    return p;
  }
  // General case: spell out every commutation the product structure needs.
  p.relators = explicit_relators(a);
  for (auto& w : shift(explicit_relators(b))) p.relators.push_back(std::move(w));
  for (std::size_t i = 0; i < a.gens; ++i)
    for (std::size_t j = 0; j < b.gens; ++j)
      p.relators.push_back(
          {int(i + 1), int(a.gens + j + 1), -int(i + 1), -int(a.gens + j + 1)});
  return p;
}

bool Presentation::is_free_abelian() const {
  if (!abelian || !relators.empty()) return false;
  for (unsigned p : gen_p)
    if (p != 0) return false;
  return true;
}

std::optional<unsigned> Presentation::uniform_p() const {
  if (!abelian || !relators.empty() || gens == 0) return std::nullopt;
  const unsigned p = gen_p.front();
  if (p == 0) return std::nullopt;
  for (unsigned q : gen_p)
    if (q != p) return std::nullopt;
  return p;
}

std::string Presentation::describe() const {
  if (gens == 0) return "1";
  if (is_free_abelian()) return "Z^" + std::to_string(gens);
  if (auto p = uniform_p()) return "Z_" + std::to_string(*p) + "^" + std::to_string(gens);
  return "presented(" + std::to_string(gens) + " gens, " + std::to_string(relators.size()) +
         " relators)";
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Elem eval_word(const FiniteGroup& G, const std::vector<int>& word, const std::vector<Elem>& images) {
  Elem acc = G.identity();
  for (int idx : word) {
    const Elem img = images[std::size_t(idx > 0 ? idx : -idx) - 1];
    acc = G.mul(acc, idx > 0 ? img : G.inv(img));
  }
  return acc;
}

}  // namespace

HomSet hom_set(const Presentation& K, const FiniteGroup& G, const Limits& limits) {
  HomSet result;
  const Elem n = G.order();

  // Which generators may take which images.
  std::vector<std::vector<char>> allowed(K.gens, std::vector<char>(n, 1));
  for (std::size_t i = 0; i < K.gens; ++i) {
    if (K.gen_p[i] != 0) {
      if (!is_prime(K.gen_p[i])) throw NotPrime("generator constraint is not prime");
      for (Elem g = 0; g < n; ++g)
        allowed[i][g] = is_p_power(G.element_order(g), K.gen_p[i]) ? 1 : 0;
    }
  }

  // Relators checked as soon as their last generator is placed.
  std::vector<std::vector<const std::vector<int>*>> due(K.gens);
  for (const auto& word : K.relators) {
    std::size_t last = 0;
    for (int idx : word) last = std::max(last, std::size_t(idx > 0 ? idx : -idx));
    if (last > 0) due[last - 1].push_back(&word);
  }

  std::vector<Elem> images;
  images.reserve(K.gens);
  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (level == K.gens) {
      result.homs.push_back(images);
      return;
    }
    for (Elem g = 0; g < n; ++g) {
      if (++result.scanned > limits.hom_budget)
        throw BudgetExceeded("homomorphism enumeration exceeded the scan budget of " +
                             std::to_string(limits.hom_budget));
      if (!allowed[level][g]) continue;
      if (K.abelian) {
        bool commutes = true;
        for (Elem prev : images) {
          if (G.mul(prev, g) != G.mul(g, prev)) {
            commutes = false;
            break;
          }
        }
        if (!commutes) continue;
      }
      images.push_back(g);
      bool ok = true;
      for (const auto* word : due[level]) {
        if (eval_word(G, *word, images) != G.identity()) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, level + 1);
      images.pop_back();
    }
  };
  rec(rec, 0);
  return result;
}

std::vector<HomClass> hom_classes(const Presentation& K, const FiniteGroup& G,
                                  const Limits& limits) {
  const HomSet all = hom_set(K, G, limits);
  std::vector<HomClass> classes;
  std::unordered_set<Hom, VecHash> seen;
  for (const Hom& phi : all.homs) {
    if (seen.count(phi)) continue;
    // phi is the lexicographic minimum of its orbit: hom_set enumerates in
    // lex order and every orbit member is in the list.
    std::unordered_set<Hom, VecHash> orbit;
    Hom conj(phi.size());
    for (Elem h = 0; h < G.order(); ++h) {
      for (std::size_t i = 0; i < phi.size(); ++i) conj[i] = G.conj(h, phi[i]);
      orbit.insert(conj);
    }
    const std::uint64_t size = orbit.size();
    for (auto& member : orbit) seen.insert(member);
    classes.push_back(HomClass{phi, size});
  }
  return classes;
}

namespace {

/// Per-computation memo of chi(M^{<S>}) keyed by the sorted generator set.
class ChiCache {
 public:
  explicit ChiCache(const Space& M) : M_(M) {}

  std::int64_t get(std::vector<Elem> key) {
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const std::int64_t value = M_.chi_fixed(key);
    memo_.emplace(std::move(key), value);
    return value;
  }

  std::int64_t get_with(const std::vector<Elem>& base, Elem extra) {
    scratch_ = base;
    scratch_.push_back(extra);
    return get(scratch_);
  }

 private:
  const Space& M_;
  std::unordered_map<std::vector<Elem>, std::int64_t, VecHash> memo_;
  std::vector<Elem> scratch_;
};

std::vector<Elem> sorted_unique(const Hom& phi) {
  std::vector<Elem> s = phi;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

struct RouteAccounting {
  std::uint64_t scanned = 0;
};

BigInt chi_by_definition(const Space& M, const std::vector<Hom>& homs, ChiCache& cache,
                         RouteAccounting& acct) {
  const GroupPtr& G = M.group();
  BigInt total = 0;
  for (const Hom& phi : homs) {
    const std::vector<Elem> base = sorted_unique(phi);
    const Subgroup c = centralizer(G, base);
    for (Elem g : c.elements) {
      ++acct.scanned;
      total += cache.get_with(base, g);
    }
  }
  return exact_div(total, BigInt(G->order()), "chi definition average");
}

BigInt chi_by_classes(const Space& M, const std::vector<HomClass>& classes, ChiCache& cache,
                      RouteAccounting& acct) {
  const GroupPtr& G = M.group();
  BigInt total = 0;
  for (const HomClass& cls : classes) {
    const std::vector<Elem> base = sorted_unique(cls.representative);
    const Subgroup c = centralizer(G, base);
    if (cls.orbit_size * c.elements.size() != G->order())
      throw InternalMismatch("orbit size times centralizer order must be the group order");
    BigInt inner = 0;
    for (Elem g : c.elements) {
      ++acct.scanned;
      inner += cache.get_with(base, g);
    }
    // chi of the centralizer quotient of the fixed set, by averaging.
    total += exact_div(inner, BigInt(c.elements.size()), "quotient chi average");
  }
  return total;
}

EulerOptions recursion_opts(const EulerOptions& opts) {
  EulerOptions inner = opts;
  inner.check_mobius = false;  // lattices of centralizers may exceed the cap
  return inner;
}

std::optional<BigInt> chi_by_recursion(const Space& M, const Presentation& K,
                                       const EulerOptions& opts, std::uint64_t& scanned);

ChiResult chi_k_routes_impl(const Space& M, const Presentation& K, const EulerOptions& opts) {
  const GroupPtr& G = M.group();
  ChiResult result;
  const HomSet homs = hom_set(K, *G, opts.limits);
  result.scanned = homs.scanned;

  ChiCache cache(M);
  RouteAccounting acct;
  result.via_definition = chi_by_definition(M, homs.homs, cache, acct);

  const std::vector<HomClass> classes = hom_classes(K, *G, opts.limits);
  result.via_classes = chi_by_classes(M, classes, cache, acct);
  result.scanned += acct.scanned;

  if (result.via_definition != result.via_classes) {
    throw InternalMismatch("the two defining expressions disagree: " +
                           result.via_definition.str() + " vs " + result.via_classes.str() +
                           " for K = " + K.describe());
  }

  if (opts.check_recursion) {
    result.via_recursion = chi_by_recursion(M, K, opts, result.scanned);
    if (result.via_recursion && *result.via_recursion != result.via_definition) {
      throw InternalMismatch("class recursion disagrees with the definition: " +
                             result.via_recursion->str() + " vs " +
                             result.via_definition.str() + " for K = " + K.describe());
    }
  }

  result.value = result.via_definition;
  return result;
}

std::optional<BigInt> chi_by_recursion(const Space& M, const Presentation& K,
                                       const EulerOptions& opts, std::uint64_t& scanned) {
  if (K.gens == 0) return std::nullopt;
  const bool free_ab = K.is_free_abelian();
  const auto up = K.uniform_p();
  if (!free_ab && !up) return std::nullopt;

  const GroupPtr& G = M.group();
  const ConjugacyTable table = conjugacy_classes(*G);
  std::vector<std::uint32_t> ids;
  if (free_ab) {
    ids.resize(table.size());
    for (std::uint32_t i = 0; i < table.size(); ++i) ids[i] = i;
  } else {
    ids = p_power_classes(*G, table, *up);
  }

  const Presentation inner = free_ab ? Presentation::free_abelian(K.gens - 1)
                                     : Presentation::profinite_abelian(K.gens - 1, *up);
  const EulerOptions inner_opts = recursion_opts(opts);
  BigInt total = 0;
  for (std::uint32_t id : ids) {
    const Elem g = table.representative[id];
    const Subgroup c = centralizer(G, std::span<const Elem>{&g, 1});
    const auto restricted = M.restricted(c, std::span<const Elem>{&g, 1});
    const ChiResult sub = chi_k_routes_impl(*restricted, inner, inner_opts);
    scanned += sub.scanned;
    total += sub.value;
  }
  return total;
}

}  // namespace

ChiResult chi_k_routes(const Space& M, const Presentation& K, const EulerOptions& opts) {
  ChiResult result = chi_k_routes_impl(M, K, opts);
  if (opts.check_mobius) {
    result.via_mobius = chi_mobius_subgroup(M, K, opts.limits);
    if (*result.via_mobius != result.value) {
      throw InternalMismatch("subgroup-Moebius expansion disagrees with the definition: " +
                             result.via_mobius->str() + " vs " + result.value.str());
    }
  }
  return result;
}

BigInt chi_k(const Space& M, const Presentation& K, const EulerOptions& opts) {
  return chi_k_routes(M, K, opts).value;
}

BigInt chi_d(const Space& M, unsigned d, const EulerOptions& opts) {
  return chi_k(M, Presentation::free_abelian(d), opts);
}

BigInt chi_p_d(const Space& M, unsigned d, unsigned p, const EulerOptions& opts) {
  return chi_k(M, Presentation::profinite_abelian(d, p), opts);
}

BigInt chi_product_reduction(const Space& M, const Presentation& K, const Presentation& L,
                             const EulerOptions& opts) {
  const GroupPtr& G = M.group();
  const EulerOptions inner_opts = recursion_opts(opts);
  BigInt total = 0;
  for (const HomClass& cls : hom_classes(K, *G, opts.limits)) {
    const std::vector<Elem> base = sorted_unique(cls.representative);
    const Subgroup c = centralizer(G, base);
    const auto restricted = M.restricted(c, base);
    total += chi_k(*restricted, L, inner_opts);
  }
  const BigInt direct = chi_k(M, Presentation::product(K, L), opts);
  if (total != direct) {
    throw InternalMismatch("product reduction disagrees with the direct value: " + total.str() +
                           " vs " + direct.str());
  }
  return total;
}

const BigInt& MobiusTable::at(const Subgroup& H) const {
  const auto it = std::lower_bound(subgroups.begin(), subgroups.end(), H);
  if (it == subgroups.end() || !(*it == H)) throw Error("subgroup missing from Moebius table");
  return values[std::size_t(it - subgroups.begin())];
}

MobiusTable mobius_mu(const Space& M, MobiusKind kind, const Limits& limits) {
  const GroupPtr& G = M.group();
  MobiusTable table;
  table.kind = kind;
  for (auto& H : all_subgroups(G, limits)) {
    if (kind == MobiusKind::Subgroup || H.is_abelian()) table.subgroups.push_back(std::move(H));
  }
  const std::size_t count = table.subgroups.size();
  table.values.assign(count, 0);

  auto rhs = [&](const Subgroup& H) -> BigInt {
    return kind == MobiusKind::AbelianOne ? BigInt(1) : BigInt(M.chi_fixed(H.elements));
  };

  // Downward induction: subgroups are sorted by order, so walk backwards.
  for (std::size_t i = count; i-- > 0;) {
    BigInt value = rhs(table.subgroups[i]);
    for (std::size_t j = i + 1; j < count; ++j) {
      if (table.subgroups[j].order() > table.subgroups[i].order() &&
          table.subgroups[j].contains_all(table.subgroups[i]))
        value -= table.values[j];
    }
    table.values[i] = value;
  }

  // The defining resummation must hold exactly.
  for (std::size_t i = 0; i < count; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < count; ++j)
      if (table.subgroups[j].contains_all(table.subgroups[i])) sum += table.values[j];
    if (sum != rhs(table.subgroups[i]))
      throw InternalMismatch("Moebius table fails its defining resummation");
  }

  // Conjugation invariance is a consequence; check rather than assume.
  for (std::size_t i = 0; i < count; ++i) {
    for (Elem g = 0; g < G->order(); ++g) {
      std::vector<Elem> conj;
      conj.reserve(table.subgroups[i].elements.size());
      for (Elem h : table.subgroups[i].elements) conj.push_back(G->conj(g, h));
      std::sort(conj.begin(), conj.end());
      if (table.at(Subgroup{G, std::move(conj)}) != table.values[i])
        throw InternalMismatch("Moebius table is not conjugation invariant");
    }
  }
  return table;
}

namespace {

/// |Hom(K x Z, H)| = sum over Hom(K, H) of the centralizer order of the image.
BigInt hom_kz_count(const Presentation& K, const MaterializedSubgroup& H, const Limits& limits) {
  BigInt total = 0;
  for (const Hom& phi : hom_set(K, *H.group, limits).homs) {
    const std::vector<Elem> base = sorted_unique(phi);
    total += centralizer(H.group, base).elements.size();
  }
  return total;
}

void require_abelian(const Presentation& K) {
  if (!K.abelian)
    throw NonAbelianK("the abelian expansions require a structurally abelian K, got " +
                      K.describe());
}

}  // namespace

BigInt chi_mobius_subgroup(const Space& M, const Presentation& K, const Limits& limits) {
  const GroupPtr& G = M.group();
  const MobiusTable mu = mobius_mu(M, MobiusKind::Subgroup, limits);
  BigInt total = 0;
  for (std::size_t i = 0; i < mu.subgroups.size(); ++i) {
    const auto mat = materialize(mu.subgroups[i]);
    const BigInt kz = hom_kz_count(K, mat, limits);
    // Cross-check against the point formula |Hom(K x Z, H)| = |H| |Hom(K,H)/H|.
    const BigInt class_count = BigInt(hom_classes(K, *mat.group, limits).size());
    if (kz != BigInt(mat.group->order()) * class_count)
      throw InternalMismatch("hom pair count disagrees with the class count in a subgroup");
    total += kz * mu.values[i];
  }
  return exact_div(total, BigInt(G->order()), "subgroup expansion");
}

BigInt chi_mobius_abelian_complex(const Space& M, const Presentation& K, const Limits& limits) {
  require_abelian(K);
  const GroupPtr& G = M.group();
  const MobiusTable mu = mobius_mu(M, MobiusKind::AbelianComplex, limits);
  BigInt total = 0;
  for (std::size_t i = 0; i < mu.subgroups.size(); ++i) {
    const auto mat = materialize(mu.subgroups[i]);
    const BigInt homs = BigInt(hom_set(K, *mat.group, limits).homs.size());
    total += BigInt(mat.group->order()) * homs * mu.values[i];
  }
  return exact_div(total, BigInt(G->order()), "abelian complex expansion");
}

BigInt chi_mobius_abelian_classes(const Space& M, const Presentation& K,
                                  const EulerOptions& opts) {
  require_abelian(K);
  const GroupPtr& G = M.group();
  const MobiusTable mu = mobius_mu(M, MobiusKind::AbelianOne, opts.limits);
  const EulerOptions inner_opts = recursion_opts(opts);
  BigInt total = 0;
  for (std::size_t i = 0; i < mu.subgroups.size(); ++i) {
    if (mu.values[i] == 0) continue;
    const auto restricted = M.restricted(mu.subgroups[i], {});
    total += BigInt(mu.subgroups[i].order()) * mu.values[i] * chi_k(*restricted, K, inner_opts);
  }
  return exact_div(total, BigInt(G->order()), "abelian class expansion");
}

BigInt chi_via_mobius(const Space& M, const Presentation& K, const EulerOptions& opts) {
  const BigInt base = chi_k(M, K, opts);
  const BigInt via_subgroups = chi_mobius_subgroup(M, K, opts.limits);
  if (via_subgroups != base)
    throw InternalMismatch("subgroup expansion disagrees: " + via_subgroups.str() + " vs " +
                           base.str());
  if (K.abelian) {
    const BigInt via_complex = chi_mobius_abelian_complex(M, K, opts.limits);
    const BigInt via_classes = chi_mobius_abelian_classes(M, K, opts);
    if (via_complex != base || via_classes != base)
      throw InternalMismatch("abelian expansions disagree: " + via_complex.str() + ", " +
                             via_classes.str() + " vs " + base.str());
  }
  return base;
}

BigInt morava_euler(const Space& M, unsigned d, unsigned p, const EulerOptions& opts) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const GroupPtr& G = M.group();
  const MobiusTable mu = mobius_mu(M, MobiusKind::AbelianComplex, opts.limits);
  BigInt total = 0;
  for (std::size_t i = 0; i < mu.subgroups.size(); ++i) {
    const BigInt p_primary = BigInt(p_part(mu.subgroups[i].order(), p));
    total += BigInt(mu.subgroups[i].order()) * big_pow(p_primary, d) * mu.values[i];
  }
  const BigInt value = exact_div(total, BigInt(G->order()), "additive function formula");

  const BigInt direct = chi_p_d(M, d, p, opts);
  const BigInt via_classes =
      chi_mobius_abelian_classes(M, Presentation::profinite_abelian(d, p), opts);
  if (value != direct || value != via_classes) {
    throw InternalMismatch("additive function formula disagrees: " + value.str() + " vs " +
                           direct.str() + " vs " + via_classes.str());
  }
  return value;
}

ScalingPair scaling_check(const Space& M, unsigned r, unsigned d, std::optional<unsigned> p,
                          const EulerOptions& opts) {
  if (r == 0) throw InvalidInput("scaling factor must be positive");
  if (p && !is_p_power(r, *p))
    throw InvalidInput("the p-typical scaling law needs r to be a power of p");
  const GroupPtr& G = M.group();
  const GroupPtr extended = direct_product(G, cyclic_group(r), opts.limits);

  std::unique_ptr<Space> extended_space;
  if (const auto* X = dynamic_cast<const GSet*>(&M)) {
    // Honest extension: the cyclic factor acts trivially.
    std::vector<std::vector<Elem>> rows(extended->order());
    for (Elem e = 0; e < extended->order(); ++e) {
      const Elem a = e / r;
      rows[e].resize(X->size());
      for (std::size_t x = 0; x < X->size(); ++x) rows[e][x] = X->act(a, static_cast<Elem>(x));
    }
    extended_space = std::make_unique<GSet>(GSet::from_action(extended, rows));
  } else {
    std::vector<Elem> projection(extended->order());
    for (Elem e = 0; e < extended->order(); ++e) projection[e] = e / r;
    extended_space = lifted_view(extended, M, std::move(projection), {});
  }

  ScalingPair pair;
  pair.extended = p ? chi_p_d(*extended_space, d, *p, opts) : chi_d(*extended_space, d, opts);
  const BigInt base = p ? chi_p_d(M, d, *p, opts) : chi_d(M, d, opts);
  pair.scaled = big_pow(BigInt(r), d) * base;
  return pair;
}

}  // namespace weuler
