// Acceptance gate: every verification criterion is exact-integer equality
// (tolerance zero).  One pass/fail line per criterion; the exit code is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "oracles.hpp"
#include "weuler/json_io.hpp"
#include "weuler/verify.hpp"

using namespace weuler;

namespace {

struct Criterion {
  std::string name;
  std::function<std::vector<Check>()> run;
};

GSet s3_natural() { return GSet::from_permutations(symmetric_group(3)); }

void append(std::vector<Check>& into, std::vector<Check> more) {
  for (auto& c : more) into.push_back(std::move(c));
}

Check direct_check(std::string name, const BigInt& lhs, const BigInt& rhs) {
  return make_check(std::move(name), lhs, rhs);
}

// --- criterion bodies -------------------------------------------------------

// The five (group, set) instances behind the main generating-function checks.
struct SeriesInstance {
  std::string name;
  GSet set;
  std::size_t max_n;     // brute-force reach at d <= 1
  std::size_t max_n_d2;  // reach at d = 2
};

std::vector<SeriesInstance> series_corpus() {
  auto z2 = cyclic_group(2);
  auto s3 = symmetric_group(3);
  std::vector<SeriesInstance> out;
  out.push_back({"trivial-pt", GSet::point(trivial_group()), 3, 3});
  out.push_back({"Z2-pt", GSet::point(z2), 3, 3});
  out.push_back({"Z2-regular", GSet::regular(z2), 3, 3});
  out.push_back({"S3-pt", GSet::point(s3.group), 3, 2});
  out.push_back({"S3-natural", GSet::from_permutations(s3), 3, 2});
  return out;
}

std::vector<Check> criterion_series() {
  std::vector<Check> checks;
  for (const SeriesInstance& inst : series_corpus()) {
    for (unsigned d = 0; d <= 2; ++d) {
      const std::size_t max_n = d == 2 ? inst.max_n_d2 : inst.max_n;
      append(checks, series_suite(inst.set, d, max_n));
    }
  }
  return checks;
}

std::vector<Check> criterion_commuting_pairs() {
  std::vector<Check> checks;

  // Z2 base, two commuting directions: class counts of the wreath groups
  // against the closed product with exponent 4.
  {
    auto z2 = cyclic_group(2);
    const PowerSeries closed = symmetric_series_product(BigInt(4), 2, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
      const WreathGroup W = wreath_group(z2, n);
      const BigInt brute = BigInt(hom_classes(Presentation::free_abelian(2), *W.group).size());
      checks.push_back(direct_check("commuting-pair-classes[Z2,n=" + std::to_string(n) + "]",
                                    brute, closed[n]));
    }
  }

  // Trivial base: coefficients 1, 1, 4, 8, with the n = 3 value confirmed as
  // the number of commuting-pair classes of the symmetric group on 3 letters.
  {
    const PowerSeries closed = symmetric_series_product(BigInt(1), 2, 3);
    const std::vector<BigInt> pinned{1, 1, 4, 8};
    for (std::size_t n = 0; n <= 3; ++n)
      checks.push_back(direct_check("divisor-sum-series[trivial,n=" + std::to_string(n) + "]",
                                    closed[n], pinned[n]));
    for (std::size_t n = 0; n <= 3; ++n) {
      const WreathGroup W = wreath_group(trivial_group(), n);
      const BigInt brute = BigInt(hom_classes(Presentation::free_abelian(2), *W.group).size());
      checks.push_back(direct_check("commuting-pair-classes[trivial,n=" + std::to_string(n) + "]",
                                    brute, closed[n]));
    }
  }
  return checks;
}

std::vector<Check> criterion_orbit_series() {
  std::vector<Check> checks;
  std::vector<std::pair<std::string, GSet>> corpus;
  corpus.emplace_back("trivial-pt", GSet::point(trivial_group()));
  corpus.emplace_back("trivial-2pt", GSet::trivial(trivial_group(), 2));
  corpus.emplace_back("trivial-3pt", GSet::trivial(trivial_group(), 3));
  corpus.emplace_back("Z2-pt", GSet::point(cyclic_group(2)));
  corpus.emplace_back("Z2-regular", GSet::regular(cyclic_group(2)));
  corpus.emplace_back("S3-pt", GSet::point(symmetric_group(3).group));
  corpus.emplace_back("S3-natural", s3_natural());
  corpus.emplace_back("S3-regular", GSet::regular(symmetric_group(3).group));

  for (const auto& [name, X] : corpus) {
    const BigInt quotient_chi = chi_d(X, 0);
    const PowerSeries closed = binomial_expand(1, -quotient_chi, 5);
    for (std::size_t n = 0; n <= 5; ++n) {
      const BigInt orbits = n == 0 ? BigInt(1) : BigInt(wreath_orbit_count(X, n));
      checks.push_back(
          direct_check("orbit-count-series[" + name + ",n=" + std::to_string(n) + "]", orbits,
                       closed[n]));
    }
    // The union-find route agrees with the materialized invariant while the
    // group still fits.
    const BruteSeries brute = symmetric_series_bruteforce(X, 0, 2);
    for (std::size_t n = 1; n <= brute.max_n; ++n)
      checks.push_back(direct_check(
          "orbit-count-cross-route[" + name + ",n=" + std::to_string(n) + "]",
          BigInt(wreath_orbit_count(X, n)), brute.series[n]));
  }

  // Rank-one series over the trivial group: partition numbers.
  const auto partitions = oracles::partition_numbers(5);
  const BruteSeries brute = symmetric_series_bruteforce(GSet::point(trivial_group()), 1, 5);
  const PowerSeries closed = symmetric_series_product(BigInt(1), 1, 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    checks.push_back(direct_check("partition-series-brute[n=" + std::to_string(n) + "]",
                                  brute.series[n], BigInt(partitions[n])));
    checks.push_back(direct_check("partition-series-closed[n=" + std::to_string(n) + "]",
                                  closed[n], BigInt(partitions[n])));
  }
  return checks;
}

std::vector<Check> criterion_p_typical_series() {
  std::vector<Check> checks;
  std::vector<std::pair<std::string, GSet>> corpus;
  corpus.emplace_back("trivial-pt", GSet::point(trivial_group()));
  corpus.emplace_back("Z2-pt", GSet::point(cyclic_group(2)));
  corpus.emplace_back("Z2-regular", GSet::regular(cyclic_group(2)));
  corpus.emplace_back("S3-pt", GSet::point(symmetric_group(3).group));
  corpus.emplace_back("S3-regular", GSet::regular(symmetric_group(3).group));

  for (const auto& [name, X] : corpus) {
    const bool is_s3 = X.group()->order() == 6;
    const std::size_t max_n = is_s3 ? 2 : 3;
    for (unsigned p : {2u, 3u})
      for (unsigned d = 0; d <= 2; ++d) append(checks, series_suite(X, d, max_n, p));
  }

  // Binary partitions by direct class counting in the symmetric groups.
  const auto binary = oracles::p_power_partition_numbers(5, 2);
  const PowerSeries closed = symmetric_series_product_p(BigInt(1), 1, 2, 5);
  const BruteSeries brute = symmetric_series_bruteforce(GSet::point(trivial_group()), 1, 5, 2u);
  for (std::size_t n = 0; n <= 5; ++n) {
    BigInt direct = 1;
    if (n >= 1) {
      const GroupPtr sn = symmetric_group(static_cast<unsigned>(n)).group;
      const ConjugacyTable t = conjugacy_classes(*sn);
      direct = BigInt(p_power_classes(*sn, t, 2).size());
    }
    checks.push_back(direct_check("binary-partition-direct[n=" + std::to_string(n) + "]", direct,
                                  BigInt(binary[n])));
    checks.push_back(direct_check("binary-partition-closed[n=" + std::to_string(n) + "]",
                                  closed[n], BigInt(binary[n])));
    checks.push_back(direct_check("binary-partition-brute[n=" + std::to_string(n) + "]",
                                  brute.series[n], BigInt(binary[n])));
  }
  return checks;
}

struct IdentityInstance {
  std::string name;
  std::shared_ptr<GSet> space;
};

std::vector<IdentityInstance> identity_corpus() {
  std::vector<std::pair<std::string, GroupPtr>> groups = {
      {"Z2", cyclic_group(2)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
      {"S3", symmetric_group(3).group},
      {"D4", dihedral_group(4).group},
      {"Q8", quaternion_group()},
      {"S3xZ2", direct_product(symmetric_group(3).group, cyclic_group(2))},
  };
  std::vector<IdentityInstance> out;
  for (const auto& [name, G] : groups) {
    out.push_back({name + "-pt", std::make_shared<GSet>(GSet::point(G))});
    out.push_back({name + "-regular", std::make_shared<GSet>(GSet::regular(G))});
  }
  out.push_back({"S3-natural", std::make_shared<GSet>(s3_natural())});
  return out;
}

std::vector<Check> criterion_identities() {
  std::vector<Check> checks;
  const std::vector<unsigned> primes{2, 3};
  const auto corpus = identity_corpus();
  for (const auto& inst : corpus) append(checks, chi_identity_suite(*inst.space, 2, primes));

  // Multiplicativity across products with |G1||G2| <= 36.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j)
      if (corpus[i].space->group()->order() * corpus[j].space->group()->order() <= 36)
        pairs.emplace_back(i, j);
  for (const auto& [i, j] : pairs)
    for (unsigned d = 0; d <= 2; ++d)
      checks.push_back(multiplicativity_check(*corpus[i].space, *corpus[j].space,
                                              Presentation::free_abelian(d)));
  return checks;
}

std::vector<Check> criterion_wreath_structure() {
  std::vector<Check> checks;
  std::vector<GSet> corpus;
  {
    const GroupPtr t = trivial_group();
    corpus.push_back(GSet::trivial(t, 2));
  }
  corpus.push_back(GSet::regular(cyclic_group(2)));
  corpus.push_back(GSet::regular(cyclic_group(3)));
  corpus.push_back(s3_natural());
  for (const GSet& X : corpus)
    for (std::size_t n = 2; n <= 3; ++n)
      append(checks, wreath_structure_suite(X.group(), n, &X));
  return checks;
}

std::vector<Check> criterion_arithmetic() { return arithmetic_suite(60, 4, {2, 3}); }

std::vector<Check> criterion_scaling() {
  std::vector<Check> checks;
  std::vector<std::shared_ptr<GSet>> spaces;
  for (const GroupPtr& G : {trivial_group(), cyclic_group(2), symmetric_group(3).group}) {
    spaces.push_back(std::make_shared<GSet>(GSet::point(G)));
    if (G->order() > 1) spaces.push_back(std::make_shared<GSet>(GSet::regular(G)));
  }
  for (const auto& M : spaces) append(checks, scaling_suite(*M, {2, 3, 4}, 2, {2, 3}));
  return checks;
}

std::vector<Check> criterion_morava() {
  std::vector<Check> checks;
  for (const auto& inst : identity_corpus()) append(checks, morava_suite(*inst.space, 2, {2, 3}));
  return checks;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"symmetric-product series, d <= 2, five instances", criterion_series},
      {"commuting-pair class counts vs the divisor-sum product", criterion_commuting_pairs},
      {"orbit-count series to n = 5 and partition numbers", criterion_orbit_series},
      {"p-typical series, p in {2,3}, with binary partitions", criterion_p_typical_series},
      {"Euler-characteristic identity suite on the small-group corpus", criterion_identities},
      {"wreath structure: conjugacy, centralizers, normal forms, fixed points",
       criterion_wreath_structure},
      {"subgroup-count arithmetic to index 60, rank 4", criterion_arithmetic},
      {"central cyclic scaling laws", criterion_scaling},
      {"additive-function formula vs the p-typical invariant", criterion_morava},
  };

  int failed_criteria = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
      checks = criteria[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t failures = 0;
    for (const Check& c : checks)
      if (!c.pass) ++failures;
    const bool pass = error.empty() && failures == 0 && !checks.empty();
    if (!pass) ++failed_criteria;

    std::printf("[%s] %zu. %s (%zu checks, %.2fs)\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), checks.size(), seconds);
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    for (const Check& c : checks) {
      if (!c.pass)
        std::printf("       %s: %s != %s\n", c.name.c_str(), c.lhs.c_str(), c.rhs.c_str());
    }
  }
  return failed_criteria;
}
