#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "gpgraph/errors.hpp"

namespace gpgraph {

using Int = boost::multiprecision::cpp_int;

inline Int pow_int(const Int& base, std::uint64_t exp) {
  Int r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

inline Int isqrt_floor(const Int& n) {
  require(n >= 0, errc::internal, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// Division that must be exact; anything else signals a derivation bug.
inline Int exact_div(const Int& num, const Int& den, const char* what = "division") {
  require(den != 0, errc::inexact_division, std::string("zero divisor in ") + what);
  Int q = num / den;
  require(q * den == num, errc::inexact_division,
          std::string(what) + " leaves remainder: " + num.str() + " / " + den.str());
  return q;
}

inline bool divides(const Int& d, const Int& n) { return d != 0 && n % d == 0; }

inline std::string dec(const Int& v) { return v.str(); }

}  // namespace gpgraph
