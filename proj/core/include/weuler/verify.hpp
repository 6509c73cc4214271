#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weuler/qseries.hpp"

namespace weuler {

/// One verified identity instance.  pass is exactly lhs == rhs (every check
/// in the library is exact-integer).
struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

Check make_check(std::string name, const BigInt& lhs, const BigInt& rhs);
bool all_pass(const std::vector<Check>& checks);

/// Euler-characteristic identities for one (G, M) instance: both defining
/// expressions, class recursions, product reduction, the three Moebius
/// expansions, and the power-sum forms (whose d = 0 case is the abelian
/// orbit-average identity), for d <= max_d and the given primes.
std::vector<Check> chi_identity_suite(const Space& M, unsigned max_d,
                                      const std::vector<unsigned>& primes,
                                      const EulerOptions& opts = {});

/// Multiplicativity across a product of two instances.
Check multiplicativity_check(const Space& M1, const Space& M2, const Presentation& K,
                             const EulerOptions& opts = {});

/// Wreath structure for (G, n): conjugacy = type, centralizer orders and
/// class sizes against brute force, normal forms, cycle-product invariance,
/// and the fixed-point product law on X^n (when X is given).
std::vector<Check> wreath_structure_suite(const GroupPtr& G, std::size_t n, const GSet* X,
                                          const Limits& limits = default_limits());

/// Subgroup-count arithmetic: recursions, the zeta-product convolution
/// identity, multiplicativity on coprime pairs, the matrix-enumeration
/// cross-check, and vanishing off p-powers.
std::vector<Check> arithmetic_suite(std::uint64_t max_r, unsigned max_d,
                                    const std::vector<unsigned>& primes);

/// Central cyclic extensions acting trivially: the r^d / p^{rd} scaling laws.
std::vector<Check> scaling_suite(const Space& M, const std::vector<unsigned>& rs,
                                 unsigned max_d, const std::vector<unsigned>& primes,
                                 const EulerOptions& opts = {});

/// morava_euler against chi_p_d and the abelian class expansion.
std::vector<Check> morava_suite(const Space& M, unsigned max_d,
                                const std::vector<unsigned>& primes,
                                const EulerOptions& opts = {});

/// Brute-force symmetric-product series against the closed product formula,
/// coefficient by coefficient up to max_n.
std::vector<Check> series_suite(const GSet& X, unsigned d, std::size_t max_n,
                                std::optional<unsigned> p = std::nullopt,
                                const EulerOptions& opts = {});

}  // namespace weuler
