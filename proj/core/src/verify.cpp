#include "weuler/verify.hpp"

#include <algorithm>
#include <functional>

namespace weuler {

Check make_check(std::string name, const BigInt& lhs, const BigInt& rhs) {
  Check c;
  c.name = std::move(name);
  c.pass = lhs == rhs;
  c.lhs = lhs.str();
  c.rhs = rhs.str();
  return c;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

Check guarded(const std::string& name, const std::function<Check()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return Check{name, false, "error", e.what()};
  }
}

std::string tag(const std::string& base, const std::string& params) {
  return base + "[" + params + "]";
}

}  // namespace

std::vector<Check> chi_identity_suite(const Space& M, unsigned max_d,
                                      const std::vector<unsigned>& primes,
                                      const EulerOptions& opts) {
  std::vector<Check> checks;
  const std::string space_tag = M.group()->label().empty()
                                    ? "order" + std::to_string(M.group()->order())
                                    : M.group()->label();

  auto run_presentation = [&](const Presentation& K, const std::string& ptag) {
    EulerOptions route_opts = opts;
    route_opts.check_recursion = true;
    const std::string base = ptag + "," + space_tag;

    checks.push_back(guarded(tag("chi-definition-vs-classes", base), [&] {
      const ChiResult r = chi_k_routes(M, K, route_opts);
      return make_check(tag("chi-definition-vs-classes", base), r.via_definition, r.via_classes);
    }));
    if (K.gens >= 1) {
      checks.push_back(guarded(tag("chi-class-recursion", base), [&] {
        const ChiResult r = chi_k_routes(M, K, route_opts);
        return make_check(tag("chi-class-recursion", base), r.via_recursion.value(), r.value);
      }));
    }
    checks.push_back(guarded(tag("chi-subgroup-expansion", base), [&] {
      return make_check(tag("chi-subgroup-expansion", base),
                        chi_mobius_subgroup(M, K, opts.limits), chi_k(M, K, opts));
    }));
    checks.push_back(guarded(tag("chi-abelian-expansion-complex", base), [&] {
      return make_check(tag("chi-abelian-expansion-complex", base),
                        chi_mobius_abelian_complex(M, K, opts.limits), chi_k(M, K, opts));
    }));
    checks.push_back(guarded(tag("chi-abelian-expansion-classes", base), [&] {
      return make_check(tag("chi-abelian-expansion-classes", base),
                        chi_mobius_abelian_classes(M, K, opts), chi_k(M, K, opts));
    }));
  };

  for (unsigned d = 0; d <= max_d; ++d) {
    const Presentation K = Presentation::free_abelian(d);
    run_presentation(K, "d=" + std::to_string(d));

    // Power-moment form of the complex expansion: |Hom(Z^d, B)| = |B|^d.
    checks.push_back(guarded(tag("power-moment-expansion", "d=" + std::to_string(d)), [&] {
      const MobiusTable mu = mobius_mu(M, MobiusKind::AbelianComplex, opts.limits);
      BigInt total = 0;
      for (std::size_t i = 0; i < mu.subgroups.size(); ++i)
        total += big_pow(BigInt(mu.subgroups[i].order()), d + 1) * mu.values[i];
      return make_check(tag("power-moment-expansion", "d=" + std::to_string(d)), total,
                        BigInt(M.group()->order()) * chi_d(M, d, opts));
    }));

    for (unsigned p : primes) {
      const std::string ptag = "d=" + std::to_string(d) + ",p=" + std::to_string(p);
      run_presentation(Presentation::profinite_abelian(d, p), ptag);

      // |Hom(Z_p^d, B)| = |B_(p)|^d for abelian B.
      checks.push_back(guarded(tag("p-power-moment-expansion", ptag), [&] {
        const MobiusTable mu = mobius_mu(M, MobiusKind::AbelianComplex, opts.limits);
        BigInt total = 0;
        for (std::size_t i = 0; i < mu.subgroups.size(); ++i) {
          total += BigInt(mu.subgroups[i].order()) *
                   big_pow(BigInt(p_part(mu.subgroups[i].order(), p)), d) * mu.values[i];
        }
        return make_check(tag("p-power-moment-expansion", ptag), total,
                          BigInt(M.group()->order()) * chi_p_d(M, d, p, opts));
      }));
    }
  }

  // Product reductions.
  struct ReductionCase {
    Presentation K, L;
    std::string name;
  };
  std::vector<ReductionCase> cases;
  cases.push_back({Presentation::free_abelian(1), Presentation::free_abelian(1), "K=Z,L=Z"});
  cases.push_back({Presentation::trivial(), Presentation::free_abelian(std::min(max_d, 2u)),
                   "K=1,L=Z^" + std::to_string(std::min(max_d, 2u))});
  for (unsigned p : primes) {
    cases.push_back({Presentation::profinite_abelian(1, p), Presentation::profinite_abelian(1, p),
                     "K=Z_" + std::to_string(p) + ",L=Z_" + std::to_string(p)});
  }
  for (const auto& rc : cases) {
    const std::string name = tag("product-reduction", rc.name + "," + space_tag);
    checks.push_back(guarded(name, [&] {
      const BigInt reduced = chi_product_reduction(M, rc.K, rc.L, opts);
      return make_check(name, reduced, chi_k(M, Presentation::product(rc.K, rc.L), opts));
    }));
  }

  return checks;
}

Check multiplicativity_check(const Space& M1, const Space& M2, const Presentation& K,
                             const EulerOptions& opts) {
  const std::string name =
      tag("chi-multiplicative", K.describe() + "," + std::to_string(M1.group()->order()) + "x" +
                                    std::to_string(M2.group()->order()));
  return guarded(name, [&] {
    const auto product = space_product(M1, M2, opts.limits);
    EulerOptions product_opts = opts;
    product_opts.check_mobius = false;  // product lattices can exceed the cap
    return make_check(name, chi_k(*product, K, product_opts),
                      chi_k(M1, K, opts) * chi_k(M2, K, opts));
  });
}

std::vector<Check> wreath_structure_suite(const GroupPtr& G, std::size_t n, const GSet* X,
                                          const Limits& limits) {
  std::vector<Check> checks;
  const std::string base = (G->label().empty() ? "order" + std::to_string(G->order()) : G->label()) +
                           ",n=" + std::to_string(n);

  const ConjugacyTable base_classes = conjugacy_classes(*G);
  const WreathGroup W = wreath_group(G, n, limits);
  const Elem m = W.group->order();

  std::vector<WreathElement> elements(m);
  std::vector<ElementType> types(m);
  for (Elem i = 0; i < m; ++i) {
    elements[i] = W.decode(i);
    types[i] = element_type(*G, base_classes, elements[i]);
  }

  const ConjugacyTable wreath_classes = conjugacy_classes(*W.group);
  const std::vector<ElementType> all_types = enumerate_types(base_classes, n);

  checks.push_back(make_check(tag("type-count-vs-classes", base), BigInt(all_types.size()),
                              BigInt(wreath_classes.size())));

  {
    // Same brute-force class iff same type.
    bool ok = true;
    std::vector<ElementType> class_types;
    for (const auto& cls : wreath_classes.classes) {
      const ElementType& t = types[cls.front()];
      for (Elem member : cls)
        if (!(types[member] == t)) ok = false;
      class_types.push_back(t);
    }
    std::sort(class_types.begin(), class_types.end());
    const auto distinct = std::unique(class_types.begin(), class_types.end());
    const std::size_t distinct_count = std::size_t(distinct - class_types.begin());
    Check c;
    c.name = tag("conjugacy-iff-type", base);
    c.pass = ok && distinct_count == wreath_classes.size();
    c.lhs = ok ? std::to_string(distinct_count) : "mixed types inside a class";
    c.rhs = std::to_string(wreath_classes.size());
    checks.push_back(std::move(c));
  }

  {
    bool orders_ok = true, sizes_ok = true;
    std::string witness_lhs, witness_rhs;
    for (std::size_t id = 0; id < wreath_classes.size(); ++id) {
      const Elem rep = wreath_classes.representative[id];
      std::uint64_t brute = 0;
      for (Elem h = 0; h < m; ++h)
        if (W.group->mul(h, rep) == W.group->mul(rep, h)) ++brute;
      const BigInt predicted = centralizer_order(types[rep], *G, base_classes);
      if (predicted != brute) {
        orders_ok = false;
        witness_lhs = predicted.str();
        witness_rhs = std::to_string(brute);
      }
      if (class_size(types[rep], *G, base_classes) != BigInt(wreath_classes.classes[id].size()))
        sizes_ok = false;
    }
    checks.push_back(Check{tag("centralizer-order-vs-bruteforce", base), orders_ok,
                           orders_ok ? "all classes" : witness_lhs,
                           orders_ok ? "all classes" : witness_rhs});
    checks.push_back(Check{tag("class-size-vs-bruteforce", base), sizes_ok,
                           sizes_ok ? "all classes" : "mismatch", "all classes"});
  }

  checks.push_back(guarded(tag("class-sizes-sum-to-order", base), [&] {
    BigInt total = 0;
    for (const auto& t : all_types) total += class_size(t, *G, base_classes);
    return make_check(tag("class-sizes-sum-to-order", base), total, BigInt(m));
  }));

  {
    bool ok = true;
    for (Elem i = 0; i < m && ok; ++i) {
      const NormalForm nf = normal_form(*G, base_classes, elements[i]);
      for (std::size_t k = 0; k < n; ++k)
        if (nf.conjugator.s[k] != k) ok = false;
      const WreathElement rebuilt = wreath_mul(
          *G, wreath_mul(*G, nf.conjugator, nf.standard), wreath_inv(*G, nf.conjugator));
      if (!(rebuilt == elements[i])) ok = false;
    }
    checks.push_back(Check{tag("normal-form-identity", base), ok, ok ? "all elements" : "mismatch",
                           "all elements"});
  }

  {
    // a = ((c,1,...,1), r-cycle) satisfies a^r = diagonal(c) and centralizes
    // the diagonal copy of the centralizer of c.
    bool ok = true;
    for (std::size_t r = 1; r <= n && ok; ++r) {
      for (std::size_t id = 0; id < base_classes.size() && ok; ++id) {
        const Elem c = base_classes.representative[id];
        WreathElement a;
        a.g.assign(r, G->identity());
        a.g[0] = c;
        a.s.resize(r);
        for (std::size_t k = 0; k < r; ++k) a.s[k] = static_cast<Elem>((k + 1) % r);
        WreathElement power = wreath_identity(*G, r);
        for (std::size_t k = 0; k < r; ++k) power = wreath_mul(*G, power, a);
        WreathElement diag = wreath_identity(*G, r);
        diag.g.assign(r, c);
        if (!(power == diag)) ok = false;
        const Subgroup cz = centralizer(G, std::span<const Elem>{&c, 1});
        for (Elem h : cz.elements) {
          WreathElement dh = wreath_identity(*G, r);
          dh.g.assign(r, h);
          if (!(wreath_mul(*G, dh, a) == wreath_mul(*G, a, dh))) ok = false;
        }
      }
    }
    checks.push_back(Check{tag("cycle-root-centralizes", base), ok, ok ? "all (r,c)" : "mismatch",
                           "all (r,c)"});
  }

  if (X != nullptr) {
    checks.push_back(guarded(tag("fixed-point-product-law", base), [&] {
      const GSet Xn = wreath_power(W, *X, limits);
      bool ok = true;
      for (Elem i = 0; i < m && ok; ++i) {
        const std::int64_t direct = Xn.chi_fixed(std::span<const Elem>{&i, 1});
        // Group the type entries by class: exponent is the total cycle count.
        BigInt predicted = 1;
        std::map<std::uint32_t, std::uint32_t> per_class;
        for (const auto& [cid, r, mult] : types[i].entries) per_class[cid] += mult;
        for (const auto& [cid, count] : per_class) {
          const Elem rep = base_classes.representative[cid];
          predicted *= big_pow(BigInt(X->chi_fixed(std::span<const Elem>{&rep, 1})), count);
        }
        if (predicted != direct) ok = false;
      }
      Check c;
      c.name = tag("fixed-point-product-law", base);
      c.pass = ok;
      c.lhs = ok ? "all elements" : "mismatch";
      c.rhs = "all elements";
      return c;
    }));
  }

  return checks;
}

namespace {

/// Literal Hermite-normal-form enumeration: d x d upper-triangular matrices,
/// positive diagonal with product r, entry (i,j) in [0, diag_j) for i < j.
BigInt hnf_matrix_count(std::uint64_t r, unsigned d) {
  if (d == 0) return r == 1 ? 1 : 0;
  BigInt count = 0;
  std::vector<std::uint64_t> diag(d, 1);
  auto fill_offdiag = [&](auto&& self, unsigned i, unsigned j,
                          std::vector<std::vector<std::uint64_t>>& matrix) -> void {
    if (i == d) {
      count += 1;  // one admissible matrix materialized
      return;
    }
    if (j == d) {
      self(self, i + 1, i + 2 <= d ? i + 2 : d, matrix);
      return;
    }
    for (std::uint64_t v = 0; v < diag[j]; ++v) {
      matrix[i][j] = v;
      self(self, i, j + 1, matrix);
    }
  };
  auto choose_diag = [&](auto&& self, unsigned pos, std::uint64_t rest) -> void {
    if (pos == d) {
      if (rest != 1) return;
      std::vector<std::vector<std::uint64_t>> matrix(d, std::vector<std::uint64_t>(d, 0));
      for (unsigned k = 0; k < d; ++k) matrix[k][k] = diag[k];
      fill_offdiag(fill_offdiag, 0, 1, matrix);
      return;
    }
    for (std::uint64_t v = 1; v <= rest; ++v) {
      if (rest % v != 0) continue;
      diag[pos] = v;
      self(self, pos + 1, rest / v);
    }
  };
  choose_diag(choose_diag, 0, r);
  return count;
}

std::string joined(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].str();
  }
  return out;
}

}  // namespace

std::vector<Check> arithmetic_suite(std::uint64_t max_r, unsigned max_d,
                                    const std::vector<unsigned>& primes) {
  std::vector<Check> checks;

  for (unsigned d = 0; d <= max_d; ++d) {
    const std::string dtag = "d=" + std::to_string(d);
    std::vector<BigInt> counts;
    for (std::uint64_t r = 1; r <= max_r; ++r) counts.push_back(lattice_subgroup_count(r, d));

    checks.push_back(guarded(tag("zeta-convolution-equals-subgroup-count", dtag), [&] {
      const ArithmeticFunction zp = zeta_product_coeffs(d, max_r);
      return Check{tag("zeta-convolution-equals-subgroup-count", dtag), zp.values == counts,
                   joined(zp.values), joined(counts)};
    }));

    checks.push_back(guarded(tag("subgroup-count-multiplicative", dtag), [&] {
      ArithmeticFunction f{counts};
      return Check{tag("subgroup-count-multiplicative", dtag), f.is_multiplicative(),
                   "multiplicative", f.is_multiplicative() ? "multiplicative" : "not"};
    }));

    if (d <= 3) {
      const std::uint64_t hnf_max = std::min<std::uint64_t>(max_r, 30);
      checks.push_back(guarded(tag("hnf-enumeration-matches", dtag), [&] {
        std::vector<BigInt> brute, fast;
        for (std::uint64_t r = 1; r <= hnf_max; ++r) {
          brute.push_back(hnf_matrix_count(r, d));
          fast.push_back(counts[r - 1]);
        }
        return Check{tag("hnf-enumeration-matches", dtag), brute == fast, joined(fast),
                     joined(brute)};
      }));
    }

    for (unsigned p : primes) {
      const std::string ptag = dtag + ",p=" + std::to_string(p);
      checks.push_back(guarded(tag("p-support-vanishes", ptag), [&] {
        std::vector<BigInt> off;
        for (std::uint64_t ell = 2; ell <= max_r; ++ell)
          if (!is_p_power(ell, p)) off.push_back(lattice_subgroup_count_p(p, ell, d));
        const std::vector<BigInt> zeros(off.size(), 0);
        return Check{tag("p-support-vanishes", ptag), off == zeros, joined(off), joined(zeros)};
      }));
      checks.push_back(guarded(tag("p-local-factor-matches", ptag), [&] {
        std::vector<BigInt> local, global;
        for (std::uint64_t q = 1; q <= max_r; q *= p) {
          local.push_back(lattice_subgroup_count_p(p, q, d));
          global.push_back(counts[q - 1]);
          if (q > max_r / p) break;
        }
        return Check{tag("p-local-factor-matches", ptag), local == global, joined(local),
                     joined(global)};
      }));
    }

    checks.push_back(guarded(tag("euler-factorization", dtag), [&] {
      // j(n) must be the product of its prime-power local values.
      std::vector<BigInt> factored;
      for (std::uint64_t nv = 1; nv <= max_r; ++nv) {
        BigInt product = 1;
        std::uint64_t rest = nv;
        for (std::uint64_t q = 2; q <= rest; ++q) {
          if (rest % q != 0) continue;
          std::uint64_t power = 1;
          while (rest % q == 0) {
            rest /= q;
            power *= q;
          }
          product *= lattice_subgroup_count_p(static_cast<unsigned>(q), power, d);
        }
        factored.push_back(product);
      }
      return Check{tag("euler-factorization", dtag), factored == counts, joined(factored),
                   joined(counts)};
    }));
  }

  return checks;
}

std::vector<Check> scaling_suite(const Space& M, const std::vector<unsigned>& rs, unsigned max_d,
                                 const std::vector<unsigned>& primes, const EulerOptions& opts) {
  std::vector<Check> checks;
  const std::string space_tag = M.group()->label().empty()
                                    ? "order" + std::to_string(M.group()->order())
                                    : M.group()->label();
  for (unsigned r : rs) {
    for (unsigned d = 0; d <= max_d; ++d) {
      const std::string name = tag("central-scaling",
                                   space_tag + ",r=" + std::to_string(r) + ",d=" + std::to_string(d));
      checks.push_back(guarded(name, [&] {
        const ScalingPair pair = scaling_check(M, r, d, std::nullopt, opts);
        return make_check(name, pair.extended, pair.scaled);
      }));
      for (unsigned p : primes) {
        if (!is_p_power(r, p) || r == 1) continue;
        const std::string pname = tag("central-scaling-p", space_tag + ",p=" + std::to_string(p) +
                                                               ",r=" + std::to_string(r) +
                                                               ",d=" + std::to_string(d));
        checks.push_back(guarded(pname, [&] {
          const ScalingPair pair = scaling_check(M, r, d, p, opts);
          return make_check(pname, pair.extended, pair.scaled);
        }));
      }
    }
  }
  return checks;
}

std::vector<Check> morava_suite(const Space& M, unsigned max_d, const std::vector<unsigned>& primes,
                                const EulerOptions& opts) {
  std::vector<Check> checks;
  const std::string space_tag = M.group()->label().empty()
                                    ? "order" + std::to_string(M.group()->order())
                                    : M.group()->label();
  for (unsigned d = 0; d <= max_d; ++d) {
    for (unsigned p : primes) {
      const std::string name =
          tag("morava-additive-formula", space_tag + ",d=" + std::to_string(d) + ",p=" + std::to_string(p));
      checks.push_back(guarded(name, [&] {
        return make_check(name, morava_euler(M, d, p, opts), chi_p_d(M, d, p, opts));
      }));
    }
  }
  return checks;
}

std::vector<Check> series_suite(const GSet& X, unsigned d, std::size_t max_n,
                                std::optional<unsigned> p, const EulerOptions& opts) {
  std::vector<Check> checks;
  const std::string gtag = X.group()->label().empty()
                               ? "order" + std::to_string(X.group()->order())
                               : X.group()->label();
  std::string base = gtag + ",|X|=" + std::to_string(X.size()) + ",d=" + std::to_string(d);
  if (p) base += ",p=" + std::to_string(*p);

  try {
    const BigInt exponent = p ? chi_p_d(X, d, *p, opts) : chi_d(X, d, opts);
    const PowerSeries closed = p ? symmetric_series_product_p(exponent, d, *p, max_n)
                                 : symmetric_series_product(exponent, d, max_n);
    const BruteSeries brute = symmetric_series_bruteforce(X, d, max_n, p, opts);
    for (std::size_t n = 0; n <= brute.max_n; ++n) {
      checks.push_back(
          make_check(tag("series-coefficient", base + ",n=" + std::to_string(n)),
                     brute.series[n], closed[n]));
    }
    if (brute.max_n < max_n) {
      checks.push_back(Check{tag("series-bruteforce-reach", base), false,
                             std::to_string(brute.max_n), std::to_string(max_n)});
    }
  } catch (const Error& e) {
    checks.push_back(Check{tag("series-suite", base), false, "error", e.what()});
  }
  return checks;
}

}  // namespace weuler
