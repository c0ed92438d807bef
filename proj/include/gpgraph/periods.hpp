#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gpgraph/bigint.hpp"
#include "gpgraph/field.hpp"
#include "gpgraph/polynomial.hpp"

namespace gpgraph {

struct PeriodValue {
  bool exact = true;
  Int value = 0;                          // valid when exact
  std::complex<long double> approx{0, 0};  // always filled

  static PeriodValue of(Int v) {
    PeriodValue pv;
    pv.value = std::move(v);
    pv.approx = {pv.value.convert_to<long double>(), 0.0L};
    return pv;
  }
};

struct PeriodVector {
  std::uint64_t N = 1;
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  Int q;
  std::vector<PeriodValue> values;  // indexed by coset index of omega^i

  bool all_exact() const;
  // distinguished coset index for closed-form vectors (see semiprimitive_periods)
  std::uint64_t distinguished = 0;
};

// eta_i = sum over the coset omega^i <omega^N> of zeta_p^Tr(x), by tallying
// trace residues per coset. A value is an exact integer precisely when its
// residue tallies c_1..c_{p-1} agree (the sum collapses to c_0 - c_1);
// otherwise it is evaluated in quad precision and marked inexact.
PeriodVector gaussian_periods(const FieldCtx& ctx, std::uint64_t N);

// prod (X - eta_i); requires every period to be an exact integer.
IntPoly period_polynomial(const PeriodVector& pv);

// Closed form for semiprimitive (k, p^m) without field construction. The
// distinguished index (k/2 when p, (p^t+1)/k and s are all odd, 0 otherwise)
// is canonical: it does not depend on the choice of primitive element.
PeriodVector semiprimitive_periods(std::uint64_t k, std::uint64_t p, std::uint32_t m);

}  // namespace gpgraph
