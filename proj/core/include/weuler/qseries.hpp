#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weuler/bigint.hpp"
#include "weuler/euler.hpp"

namespace weuler {

/// Formal power series in q truncated at q^N, exact integer coefficients.
/// Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}
  static PowerSeries one(std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  BigInt& operator[](std::size_t i) { return c_[i]; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  PowerSeries truncated(std::size_t order) const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries& operator*=(const PowerSeries& b);
  /// Nonnegative power by repeated squaring.
  PowerSeries pow(unsigned e) const;
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<BigInt> c_;
};

/// (1 - q^r)^e for any integer e (negative allowed), via the generalized
/// binomial series.
PowerSeries binomial_expand(std::size_t r, const BigInt& e, std::size_t order);

/// Number of index-r subgroups of the rank-d lattice:
///   sum over ordered factorizations r_1 ... r_d = r of r_2 r_3^2 ... r_d^{d-1};
/// always cross-checked against the divisor recursion
///   j_r(d) = sum_{m | r} m * j_m(d-1).
BigInt lattice_subgroup_count(std::uint64_t r, unsigned d);

/// Number of index-ell subgroups of the d-fold p-adic module: zero unless
/// ell is a power of p; cross-checked against its recursion.  Throws NotPrime.
BigInt lattice_subgroup_count_p(unsigned p, std::uint64_t ell, unsigned d);

/// prod_{r>=1} (1 - q^r)^{-E * j_r(Z^d)}, the closed form of the symmetric
/// product generating function with exponent E.
PowerSeries symmetric_series_product(const BigInt& exponent, unsigned d, std::size_t order);
/// p-typical version: the product runs over r = p^k only.
PowerSeries symmetric_series_product_p(const BigInt& exponent, unsigned d, unsigned p,
                                       std::size_t order);

/// Brute-force side: coefficient n is chi_d (or chi_p_d) of X^n acted on by
/// the materialized wreath group.  Stops at the first n past the size guard
/// or budget; max_n is the last coefficient actually computed.
struct BruteSeries {
  PowerSeries series;   // coefficients beyond max_n are zero-filled
  std::size_t max_n = 0;
};
BruteSeries symmetric_series_bruteforce(const GSet& X, unsigned d, std::size_t order,
                                        std::optional<unsigned> p = std::nullopt,
                                        const EulerOptions& opts = {});

/// Arithmetic function on 1..N with big integer values.
struct ArithmeticFunction {
  std::vector<BigInt> values;  // values[i] is the value at n = i + 1
  std::size_t size() const { return values.size(); }
  const BigInt& at(std::size_t n) const { return values[n - 1]; }
  /// Checks f(mn) = f(m) f(n) over all coprime pairs in range.
  bool is_multiplicative() const;
  friend bool operator==(const ArithmeticFunction&, const ArithmeticFunction&) = default;
};

ArithmeticFunction dirichlet_convolve(const ArithmeticFunction& f, const ArithmeticFunction& g);
/// n -> n^k.
ArithmeticFunction power_function(unsigned k, std::size_t N);
/// Dirichlet coefficients of zeta(s) zeta(s-1) ... zeta(s-d+1):
/// the d-fold convolution 1 * N * ... * N^{d-1}.  Coincides with
/// lattice_subgroup_count coefficientwise.
ArithmeticFunction zeta_product_coeffs(unsigned d, std::size_t N);

}  // namespace weuler
