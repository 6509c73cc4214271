#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "weuler/error.hpp"

namespace weuler {

using BigInt = boost::multiprecision::cpp_int;

/// a / b, throwing NonIntegral unless b divides a exactly.
inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* what = "division") {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw NonIntegral(std::string(what) + ": " + a.str() + " is not divisible by " + b.str());
  }
  return q;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace weuler
