#include "gpgraph/periods.hpp"

#include <quadmath.h>

#include "gpgraph/families.hpp"

namespace gpgraph {

bool PeriodVector::all_exact() const {
  for (const auto& v : values)
    if (!v.exact) return false;
  return true;
}

PeriodVector gaussian_periods(const FieldCtx& ctx, std::uint64_t N) {
  const std::uint64_t q = ctx.q(), p = ctx.p();
  require(N >= 1 && (q - 1) % N == 0, errc::not_a_divisor,
          "N = " + std::to_string(N) + " does not divide q-1");

  // trace residue tallies per coset
  require((unsigned __int128)N * p <= ((unsigned __int128)1 << 28), errc::field_too_large,
          "period tally table for N = " + std::to_string(N) + ", p = " + std::to_string(p) +
              " is too large");
  std::vector<std::uint64_t> tally(N * p, 0);
  for (std::uint64_t j = 0; j < q - 1; j++) {
    tally[(j % N) * p + ctx.trace_of_log(j)]++;
  }

  // zeta_p^a in quad precision, for the values that do not collapse
  std::vector<__float128> re(p), im(p);
  bool trig_ready = false;

  PeriodVector pv;
  pv.N = N;
  pv.p = p;
  pv.m = ctx.m();
  pv.q = q;
  pv.values.reserve(N);
  for (std::uint64_t i = 0; i < N; i++) {
    const std::uint64_t* c = &tally[i * p];
    bool collapses = true;
    for (std::uint64_t a = 2; a < p; a++) {
      if (c[a] != c[1]) {
        collapses = false;
        break;
      }
    }
    if (collapses) {
      pv.values.push_back(PeriodValue::of(Int(c[0]) - Int(c[1])));
      continue;
    }
    if (!trig_ready) {
      const __float128 two_pi = (__float128)2 * acosq((__float128)-1);
      for (std::uint64_t a = 0; a < p; a++) {
        __float128 ang = two_pi * (__float128)a / (__float128)p;
        re[a] = cosq(ang);
        im[a] = sinq(ang);
      }
      trig_ready = true;
    }
    __float128 sr = 0, si = 0;
    for (std::uint64_t a = 0; a < p; a++) {
      sr += (__float128)c[a] * re[a];
      si += (__float128)c[a] * im[a];
    }
    PeriodValue v;
    v.exact = false;
    v.approx = {(long double)sr, (long double)si};
    pv.values.push_back(v);
  }
  return pv;
}

IntPoly period_polynomial(const PeriodVector& pv) {
  require(pv.all_exact(), errc::inexact_periods,
          "period polynomial needs exact integer periods");
  IntPoly psi;
  for (const auto& v : pv.values) psi.mul_linear(v.value);
  return psi;
}

PeriodVector semiprimitive_periods(std::uint64_t k, std::uint64_t p, std::uint32_t m) {
  auto info = classify_semiprimitive(k, p, m);
  require(info.has_value(), errc::not_semiprimitive,
          "(" + std::to_string(k) + ", " + std::to_string(p) + "^" + std::to_string(m) + ")");

  const Int root = pow_int(Int(p), m / 2);  // sqrt(q)
  const int sigma = info->sigma;
  Int distinguished_value = exact_div(sigma * Int(k - 1) * root - 1, Int(k), "(k-1)sqrt(q) term");
  Int other_value = -exact_div(sigma * root + 1, Int(k), "sqrt(q)+1 term");

  const Int alpha = exact_div(pow_int(Int(p), info->t) + 1, Int(k), "alpha = (p^t+1)/k");
  const bool case_a = (p % 2 == 1) && (alpha % 2 == 1) && (info->s % 2 == 1);

  PeriodVector pv;
  pv.N = k;
  pv.p = p;
  pv.m = m;
  pv.q = root * root;
  pv.distinguished = case_a ? k / 2 : 0;
  pv.values.assign(k, PeriodValue::of(other_value));
  pv.values[pv.distinguished] = PeriodValue::of(distinguished_value);
  return pv;
}

}  // namespace gpgraph
