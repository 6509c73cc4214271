#include "weuler/qseries.hpp"

#include <algorithm>
#include <numeric>

namespace weuler {

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s.c_[0] = 1;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  PowerSeries s(order);
  for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) s.c_[i] = c_[i];
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.c_[j] == 0) continue;
      s.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return s;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& b) {
  *this = *this * b;
  return *this;
}

PowerSeries PowerSeries::pow(unsigned e) const {
  PowerSeries result = PowerSeries::one(order());
  PowerSeries base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

PowerSeries binomial_expand(std::size_t r, const BigInt& e, std::size_t order) {
  if (r == 0) throw InvalidInput("binomial_expand needs r >= 1");
  PowerSeries s(order);
  BigInt coeff = 1;  // C(e, k), built incrementally
  std::size_t k = 0;
  for (std::size_t power = 0; power <= order; power += r, ++k) {
    if (k > 0) {
      coeff = exact_div(coeff * (e - BigInt(k) + 1), BigInt(k), "binomial coefficient");
    }
    s[power] = (k % 2 == 0) ? coeff : -coeff;
  }
  return s;
}

namespace {

BigInt lattice_count_direct(std::uint64_t r, unsigned d) {
  if (d == 0) return r == 1 ? 1 : 0;
  // Ordered factorizations r_1 ... r_d = r, weight r_2 r_3^2 ... r_d^{d-1}.
  auto rec = [&](auto&& self, unsigned pos, std::uint64_t m) -> BigInt {
    if (pos > d) return m == 1 ? 1 : 0;
    BigInt total = 0;
    for (std::uint64_t v = 1; v <= m; ++v) {
      if (m % v != 0) continue;
      total += big_pow(BigInt(v), pos - 1) * self(self, pos + 1, m / v);
    }
    return total;
  };
  return rec(rec, 1, r);
}

BigInt lattice_count_p_direct(unsigned p, std::uint64_t ell, unsigned d) {
  if (!is_p_power(ell, p)) return 0;
  unsigned rr = 0;
  for (std::uint64_t m = ell; m > 1; m /= p) ++rr;
  if (d == 0) return rr == 0 ? 1 : 0;
  // Exponent vectors (l_1, ..., l_d) summing to rr, weight prod p^{(i-1) l_i}.
  auto rec = [&](auto&& self, unsigned pos, unsigned rem) -> BigInt {
    if (pos > d) return rem == 0 ? 1 : 0;
    BigInt total = 0;
    for (unsigned l = 0; l <= rem; ++l)
      total += big_pow(BigInt(p), (pos - 1) * l) * self(self, pos + 1, rem - l);
    return total;
  };
  return rec(rec, 1, rr);
}

}  // namespace

BigInt lattice_subgroup_count(std::uint64_t r, unsigned d) {
  if (r == 0) throw InvalidInput("index must be positive");
  const BigInt direct = lattice_count_direct(r, d);
  if (d >= 1) {
    BigInt via_recursion = 0;
    for (std::uint64_t m = 1; m <= r; ++m)
      if (r % m == 0) via_recursion += BigInt(m) * lattice_count_direct(m, d - 1);
    if (via_recursion != direct)
      throw InternalMismatch("subgroup count recursion disagrees at r=" + std::to_string(r) +
                             ", d=" + std::to_string(d));
  }
  return direct;
}

BigInt lattice_subgroup_count_p(unsigned p, std::uint64_t ell, unsigned d) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (ell == 0) throw InvalidInput("index must be positive");
  const BigInt direct = lattice_count_p_direct(p, ell, d);
  if (d >= 1 && is_p_power(ell, p)) {
    BigInt via_recursion = 0;
    for (std::uint64_t q = 1; q <= ell; q *= p)
      via_recursion += BigInt(q) * lattice_count_p_direct(p, q, d - 1);
    if (via_recursion != direct)
      throw InternalMismatch("p-typical subgroup count recursion disagrees at ell=" +
                             std::to_string(ell) + ", d=" + std::to_string(d));
  }
  return direct;
}

PowerSeries symmetric_series_product(const BigInt& exponent, unsigned d, std::size_t order) {
  PowerSeries result = PowerSeries::one(order);
  for (std::size_t r = 1; r <= order; ++r) {
    const BigInt e = -exponent * lattice_subgroup_count(r, d);
    if (e == 0) continue;
    result *= binomial_expand(r, e, order);
  }
  return result;
}

PowerSeries symmetric_series_product_p(const BigInt& exponent, unsigned d, unsigned p,
                                       std::size_t order) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  PowerSeries result = PowerSeries::one(order);
  for (std::uint64_t q = 1; q <= order; q *= p) {
    const BigInt e = -exponent * lattice_subgroup_count_p(p, q, d);
    if (e != 0) result *= binomial_expand(q, e, order);
    if (q > order / p) break;  // avoid overflow of q *= p
  }
  return result;
}

BruteSeries symmetric_series_bruteforce(const GSet& X, unsigned d, std::size_t order,
                                        std::optional<unsigned> p, const EulerOptions& opts) {
  BruteSeries out{PowerSeries(order), 0};
  out.series[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    try {
      const WreathGroup W = wreath_group(X.group(), n, opts.limits);
      const GSet Xn = wreath_power(W, X, opts.limits);
      out.series[n] = p ? chi_p_d(Xn, d, *p, opts) : chi_d(Xn, d, opts);
      out.max_n = n;
    } catch (const SizeGuardExceeded&) {
      break;
    } catch (const BudgetExceeded&) {
      break;
    }
  }
  return out;
}

ArithmeticFunction dirichlet_convolve(const ArithmeticFunction& f, const ArithmeticFunction& g) {
  const std::size_t N = std::min(f.size(), g.size());
  ArithmeticFunction h;
  h.values.assign(N, 0);
  for (std::size_t a = 1; a <= N; ++a) {
    if (f.at(a) == 0) continue;
    for (std::size_t b = 1; a * b <= N; ++b) h.values[a * b - 1] += f.at(a) * g.at(b);
  }
  return h;
}

ArithmeticFunction power_function(unsigned k, std::size_t N) {
  ArithmeticFunction f;
  f.values.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) f.values.push_back(big_pow(BigInt(n), k));
  return f;
}

ArithmeticFunction zeta_product_coeffs(unsigned d, std::size_t N) {
  ArithmeticFunction f;
  f.values.assign(N, 0);
  if (N >= 1) f.values[0] = 1;  // Dirichlet unit
  for (unsigned k = 0; k < d; ++k) f = dirichlet_convolve(f, power_function(k, N));
  return f;
}

bool ArithmeticFunction::is_multiplicative() const {
  const std::size_t N = size();
  if (N >= 1 && at(1) != 1) return false;
  for (std::size_t m = 2; m <= N; ++m)
    for (std::size_t n = 2; m * n <= N; ++n)
      if (std::gcd(m, n) == 1 && at(m * n) != at(m) * at(n)) return false;
  return true;
}

}  // namespace weuler
