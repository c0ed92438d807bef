#include "doctest.h"

#include <complex>

#include "gpgraph/factor.hpp"
#include "gpgraph/families.hpp"
#include "gpgraph/periods.hpp"

using namespace gpgraph;

TEST_CASE("quadratic periods of F_81") {
  FieldCtx f81 = build_field(3, 4);
  PeriodVector pv = gaussian_periods(f81, 2);
  REQUIRE(pv.values.size() == 2);
  CHECK(pv.all_exact());
  CHECK(pv.values[0].value == -5);
  CHECK(pv.values[1].value == 4);
}

TEST_CASE("trivial subgroup: single period -1") {
  FieldCtx f = build_field(7, 2);
  PeriodVector pv = gaussian_periods(f, 1);
  REQUIRE(pv.values.size() == 1);
  CHECK(pv.values[0].value == -1);
}

TEST_CASE("cubic periods of F_16") {
  FieldCtx f16 = build_field(2, 4);
  PeriodVector pv = gaussian_periods(f16, 3);
  REQUIRE(pv.values.size() == 3);
  CHECK(pv.all_exact());
  CHECK(pv.values[0].value == -3);  // the coset of the cubes is distinguished
  CHECK(pv.values[1].value == 1);
  CHECK(pv.values[2].value == 1);
}

TEST_CASE("periods sum to -1 and satisfy the integrality certificate") {
  for (auto [p, m] : {std::pair<std::uint64_t, std::uint32_t>{2, 6}, {3, 4}, {5, 2}, {7, 2},
                      {3, 5}, {11, 1}, {13, 2}}) {
    FieldCtx f = build_field(p, m);
    const std::uint64_t qm1 = f.q() - 1;
    for (std::uint64_t N : divisors(qm1)) {
      PeriodVector pv = gaussian_periods(f, N);
      std::complex<long double> total{0, 0};
      for (const auto& v : pv.values) total += v.approx;
      CHECK(fabsl(total.real() + 1) < 1e-12L);
      CHECK(fabsl(total.imag()) < 1e-12L);
      if (N != 0 && (qm1 / (p - 1)) % N == 0) {
        for (const auto& v : pv.values) {
          REQUIRE(v.exact);
          Int residue = (Int(N) * v.value + 1) % p;
          CHECK(residue == 0);
        }
      }
    }
  }
}

TEST_CASE("period polynomial") {
  FieldCtx f = build_field(5, 2);
  IntPoly one = period_polynomial(gaussian_periods(f, 1));
  CHECK(one.coeff == std::vector<Int>{1, 1});  // X + 1

  FieldCtx f81 = build_field(3, 4);
  IntPoly quad = period_polynomial(gaussian_periods(f81, 2));
  CHECK(quad.coeff == std::vector<Int>{-20, 1, 1});  // X^2 + X - 20

  FieldCtx f16 = build_field(2, 4);
  IntPoly cubic = period_polynomial(gaussian_periods(f16, 3));
  CHECK(cubic.coeff == std::vector<Int>{3, -5, 1, 1});  // X^3 + X^2 - 5X + 3

  // irrational periods are refused
  FieldCtx f25 = build_field(5, 2);
  PeriodVector quartic = gaussian_periods(f25, 4);
  CHECK(!quartic.all_exact());
  CHECK_THROWS_AS(period_polynomial(quartic), gp_error);
}

TEST_CASE("semiprimitive closed-form periods") {
  PeriodVector a = semiprimitive_periods(3, 2, 4);
  REQUIRE(a.values.size() == 3);
  CHECK(a.distinguished == 0);
  CHECK(a.values[0].value == -3);
  CHECK(a.values[1].value == 1);
  CHECK(a.values[2].value == 1);

  PeriodVector b = semiprimitive_periods(5, 3, 4);
  CHECK(b.distinguished == 0);
  CHECK(b.values[0].value == 7);
  CHECK(b.values[1].value == -2);

  // p, (p^t+1)/k and s all odd: the distinguished coset moves to k/2
  PeriodVector c = semiprimitive_periods(2, 5, 2);
  CHECK(c.distinguished == 1);
  CHECK(c.values[1].value == 2);
  CHECK(c.values[0].value == -3);

  CHECK_THROWS_AS(semiprimitive_periods(10, 3, 4), gp_error);
}

TEST_CASE("closed form agrees with tallied periods on every small semiprimitive pair") {
  for (auto [p, m] : {std::pair<std::uint64_t, std::uint32_t>{2, 4}, {2, 6}, {3, 2}, {3, 4},
                      {5, 2}, {5, 4}, {7, 2}, {11, 2}, {13, 2}, {2, 8}, {3, 6}}) {
    if (pow_int(Int(p), m) > 4096) continue;
    FieldCtx f = build_field(p, m);
    for (const auto& info : enumerate_semiprimitive_pairs(p, m)) {
      PeriodVector closed = semiprimitive_periods(info.k, p, m);
      PeriodVector tallied = gaussian_periods(f, info.k);
      REQUIRE(closed.values.size() == tallied.values.size());
      for (size_t i = 0; i < closed.values.size(); i++) {
        REQUIRE(tallied.values[i].exact);
        CHECK(closed.values[i].value == tallied.values[i].value);
      }
    }
  }
}
