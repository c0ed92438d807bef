#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gpgraph/bigint.hpp"
#include "gpgraph/codes.hpp"
#include "gpgraph/spectrum.hpp"

namespace gpgraph {

struct SemiprimitiveInfo {
  std::uint64_t k;
  std::uint64_t p;
  std::uint32_t m;
  std::uint32_t t;  // least t with k | p^t + 1
  std::uint32_t s;  // m / (2t)
  int sigma;        // (-1)^(s+1)

  // k = 2 or k = p^l + 1 for some l | m/2; everything else is a "new" graph
  bool standard_form() const;
};

// The pair definition also admits k = 2 with m odd (q = 1 mod 4 forces
// p = 1 mod 4); those Paley graphs have irrational eigenvalues and no
// (t, s, sigma) data, so classify_semiprimitive covers even m only.
bool is_semiprimitive_pair(std::uint64_t k, std::uint64_t p, std::uint32_t m);

std::optional<SemiprimitiveInfo> classify_semiprimitive(std::uint64_t k, std::uint64_t p,
                                                        std::uint32_t m);

// all semiprimitive k for fixed (p, m), ascending; m must be even
std::vector<SemiprimitiveInfo> enumerate_semiprimitive_pairs(std::uint64_t p, std::uint32_t m);

// {[n]^1, [l1]^n, [l2]^((k-1)n)} with l1 = (sigma (k-1) p^(m/2) - 1)/k and
// l2 = -(sigma p^(m/2) + 1)/k, plus the complement spectrum.
std::pair<Spectrum, Spectrum> semiprimitive_spectrum(std::uint64_t k, std::uint64_t p,
                                                     std::uint32_t m);

// Decided purely by the case list (k <= 5 families + classic Paley),
// never by computing eigenvalues.
bool ramanujan_classification(std::uint64_t k, std::uint64_t p, std::uint32_t m);

// The complement of every semiprimitive GP-graph is Ramanujan; verified
// spectrally, so a false return signals a bug.
bool complement_always_ramanujan_check(std::uint64_t k, std::uint64_t p, std::uint32_t m);

// Exact check for classic Paley graphs, valid for odd m too (the eigenvalues
// (+-sqrt(q)-1)/2 are irrational there; the comparison is done on squares).
bool paley_is_ramanujan(std::uint64_t p, std::uint32_t m);

struct DiophantineK3 {
  Int a, b;  // 4 q^(1/3) = a^2 + 27 b^2, a = 1 mod 3, gcd(a,p) = 1, b > 0
};
struct DiophantineK4 {
  Int c, d;  // q^(1/2) = c^2 + 4 d^2, c = 1 mod 4, gcd(c,p) = 1, d > 0
};

DiophantineK3 solve_k3_diophantine(std::uint64_t p, std::uint32_t m);
DiophantineK4 solve_k4_diophantine(std::uint64_t p, std::uint32_t m);

// Gamma(3,q) for 3 | (q-1)/(p-1), q >= 5: four integral eigenvalue classes
// when p = 1 mod 3 (via the a,b representation), three when p = 2 mod 3.
Spectrum spectrum_gamma3(std::uint64_t p, std::uint32_t m);

// Gamma(4,q) for 4 | (q-1)/(p-1), q >= 5, q != 9: five classes when
// p = 1 mod 4 (via c,d), three when p = 3 mod 4.
Spectrum spectrum_gamma4(std::uint64_t p, std::uint32_t m);

struct ExceptionalRecord {
  std::uint64_t k;
  std::uint64_t p;
  std::uint32_t m;
  std::uint32_t theta;
  std::uint32_t t;
  int eps;
};

// the eleven exceptional two-weight pairs of the Schmidt-White list
const std::array<ExceptionalRecord, 11>& exceptional_records();

struct ExceptionalData {
  ExceptionalRecord rec;
  Int q, n;
  Int w1, w2;          // w2 = w1 + eps (p-1) p^(theta-1)
  Int lambda1, lambda2;  // lambda_i = n - p w_i / (p-1)
  Int m1, m2;          // frequencies of w1, w2
  SrgParams srg;
  Spectrum spectrum;
  WeightDistribution weights;
};

// Arbitrary-precision derivation; every division is checked exact.
// Connectivity holds for all eleven pairs (n is a primitive divisor there)
// and is asserted, not recomputed.
ExceptionalData exceptional_spectrum(const ExceptionalRecord& rec);

}  // namespace gpgraph
