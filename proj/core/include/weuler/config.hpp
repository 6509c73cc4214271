#pragma once

#include <cstdint>

namespace weuler {

/// Resource limits shared by the enumeration machinery.  Every cap raises
/// SizeGuardExceeded / BudgetExceeded instead of silently truncating.
struct Limits {
  /// Maximum order of a materialized group.
  std::uint64_t max_group_order = 1'000'000;
  /// Maximum bytes for a dense multiplication table.  The order cap alone
  /// would allow tables far beyond memory.
  std::uint64_t max_table_bytes = std::uint64_t(1) << 30;
  /// Maximum |G| for full subgroup-lattice enumeration.
  std::uint32_t lattice_cap = 48;
  /// Maximum candidate tuples scanned per homomorphism enumeration.
  std::uint64_t hom_budget = 10'000'000;
};

/// Default limits; WREATH_EULER_BUDGET in the environment overrides
/// hom_budget.
const Limits& default_limits();

}  // namespace weuler
