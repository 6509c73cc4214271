#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weuler/bigint.hpp"
#include "weuler/gspace.hpp"

namespace weuler {

/// The coefficient group K of an invariant chi_K, given by generators and
/// relations plus structural constraints the relator language cannot express
/// (pairwise commuting, p-power-order images).
struct Presentation {
  std::size_t gens = 0;
  /// Per-generator constraint: 0 = none, p = image must have p-power order.
  std::vector<unsigned> gen_p;
  /// Relator words as signed 1-based generator indices, evaluated left to
  /// right (negative = inverse).
  std::vector<std::vector<int>> relators;
  /// All generator images must pairwise commute (structural, in addition to
  /// any relators).
  bool abelian = false;

  static Presentation trivial();
  static Presentation free_abelian(std::size_t d);
  static Presentation profinite_abelian(std::size_t d, unsigned p);  // throws NotPrime
  static Presentation presented(std::size_t k, std::vector<std::vector<int>> relators);
  static Presentation product(const Presentation& a, const Presentation& b);

  /// All generators unconstrained and commuting (K = Z^d).
  bool is_free_abelian() const;
  /// All generators p-power constrained with one prime and commuting.
  std::optional<unsigned> uniform_p() const;
  std::string describe() const;
};

/// Generator images in G.
using Hom = std::vector<Elem>;

struct HomSet {
  std::vector<Hom> homs;     // deterministic lexicographic order
  std::uint64_t scanned = 0;  // candidates examined (budget accounting)
};
/// All homomorphisms K -> G.  Throws BudgetExceeded past limits.hom_budget.
HomSet hom_set(const Presentation& K, const FiniteGroup& G,
               const Limits& limits = default_limits());

struct HomClass {
  Hom representative;       // lexicographically minimal member
  std::uint64_t orbit_size = 0;
};
/// Orbits of hom_set under simultaneous conjugation.
std::vector<HomClass> hom_classes(const Presentation& K, const FiniteGroup& G,
                                  const Limits& limits = default_limits());

struct EulerOptions {
  /// Cross-check the class recursion (for Z^d / Z_p^d coefficients).
  bool check_recursion = true;
  /// Cross-check the Moebius expansions (needs the full subgroup lattice).
  bool check_mobius = false;
  Limits limits = default_limits();
};

struct ChiResult {
  BigInt value;
  BigInt via_definition;               // averaged Hom(K x Z, G) sum
  BigInt via_classes;                  // sum of quotient chis over hom classes
  std::optional<BigInt> via_recursion; // class recursion, when applicable
  std::optional<BigInt> via_mobius;    // subgroup-Moebius expansion
  std::uint64_t scanned = 0;
};

/// chi_K(M; G) by both defining expressions, which must agree
/// (InternalMismatch otherwise); optional recursion / Moebius routes are
/// compared too when computed.
ChiResult chi_k_routes(const Space& M, const Presentation& K, const EulerOptions& opts = {});
BigInt chi_k(const Space& M, const Presentation& K, const EulerOptions& opts = {});

/// K = Z^d and K = Z_p^d.  d = 0 is the orbit-space Euler characteristic.
BigInt chi_d(const Space& M, unsigned d, const EulerOptions& opts = {});
BigInt chi_p_d(const Space& M, unsigned d, unsigned p, const EulerOptions& opts = {});

/// Right side of the product reduction: sum over classes of Hom(K, G) of
/// chi_L(M^{<phi>}; C_G(phi)).  Asserts equality with the direct
/// chi_{K x L}(M; G) and returns the value.
BigInt chi_product_reduction(const Space& M, const Presentation& K, const Presentation& L,
                             const EulerOptions& opts = {});

enum class MobiusKind {
  Subgroup,         // over all subgroups; resums to chi(X^P)
  AbelianComplex,   // over abelian subgroups; resums to chi(X^A)
  AbelianOne,       // over abelian subgroups; resums to 1 (ignores X)
};

struct MobiusTable {
  MobiusKind kind;
  std::vector<Subgroup> subgroups;  // sorted canonically
  std::vector<BigInt> values;       // aligned with subgroups
  const BigInt& at(const Subgroup& H) const;
};

/// Downward induction over the (abelian) subgroup lattice; the defining
/// resummation and conjugation-invariance are rechecked exactly before
/// returning.
MobiusTable mobius_mu(const Space& M, MobiusKind kind,
                      const Limits& limits = default_limits());

/// chi_K via the subgroup-Moebius expansion; for abelian K also via both
/// abelian expansions (complex-oriented and class-counting), all of which
/// must agree with chi_k.  Throws NonAbelianK if an abelian-only route is
/// forced on a non-abelian K.
BigInt chi_via_mobius(const Space& M, const Presentation& K, const EulerOptions& opts = {});

/// Individual expansion routes.  The abelian ones require a structurally
/// abelian K (NonAbelianK otherwise).
BigInt chi_mobius_subgroup(const Space& M, const Presentation& K,
                           const Limits& limits = default_limits());
BigInt chi_mobius_abelian_complex(const Space& M, const Presentation& K,
                                  const Limits& limits = default_limits());
BigInt chi_mobius_abelian_classes(const Space& M, const Presentation& K,
                                  const EulerOptions& opts = {});

/// The additive-function formula for the Euler characteristic of the d-th
/// equivariant Morava K-theory:
///   (1/|G|) sum over abelian A of |A| * |A_(p)|^d * mu_A^C(M),
/// asserted equal to chi_p_d and to the abelian class expansion.
BigInt morava_euler(const Space& M, unsigned d, unsigned p, const EulerOptions& opts = {});

/// chi_d (or chi_p_d) over G x Z/r with the cyclic factor acting trivially,
/// paired with the predicted scaling r^d * chi_d(M; G).
struct ScalingPair {
  BigInt extended;  // invariant of (M; G x Z/r)
  BigInt scaled;    // r^d (or p-power) times the invariant of (M; G)
};
ScalingPair scaling_check(const Space& M, unsigned r, unsigned d,
                          std::optional<unsigned> p = std::nullopt,
                          const EulerOptions& opts = {});

}  // namespace weuler
