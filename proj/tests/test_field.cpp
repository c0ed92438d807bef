#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <set>

#include "gpgraph/factor.hpp"
#include "gpgraph/field.hpp"

using namespace gpgraph;

TEST_CASE("factorization basics") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(8191));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));  // Carmichael
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1

  auto f = factorize(242);
  CHECK(f == std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {11, 2}});
  // composite of two primes above the trial-division bound exercises rho
  auto g = factorize(1000003ull * 1000033ull);
  CHECK(g == std::vector<std::pair<std::uint64_t, int>>{{1000003, 1}, {1000033, 1}});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("field construction sizes") {
  CHECK(build_field(3, 5).q() == 243);
  CHECK(build_field(2, 4).q() == 16);
  FieldCtx f343 = build_field(7, 3);
  CHECK(f343.q() == 343);
  CHECK(f343.group_order() == 342);
  CHECK_THROWS_AS(build_field(6, 2), gp_error);
  CHECK_THROWS_AS(build_field(2, 30, FieldOptions{1 << 20, false}), gp_error);
}

TEST_CASE("construction is deterministic") {
  FieldCtx a = build_field(5, 3), b = build_field(5, 3);
  CHECK(a.modulus() == b.modulus());
}

TEST_CASE("multiplicative table consistency") {
  // exhaustive over all pairs for one field: packed products match index sums
  {
    FieldCtx f = build_field(2, 6);
    for (std::uint64_t i = 0; i < 63; i++) {
      std::uint64_t a = f.packed(FieldElement::from_log((std::uint32_t)i));
      for (std::uint64_t j = 0; j < 63; j++) {
        std::uint64_t b = f.packed(FieldElement::from_log((std::uint32_t)j));
        FieldElement prod = f.mul(f.element_from_packed(a), f.element_from_packed(b));
        CHECK(f.packed(prod) == f.packed(FieldElement::from_log((std::uint32_t)((i + j) % 63))));
      }
    }
  }
  for (auto [p, m] : {std::pair<std::uint64_t, std::uint32_t>{2, 6}, {3, 4}, {7, 2}, {31, 1}}) {
    FieldCtx f = build_field(p, m);
    const std::uint64_t order = f.group_order();
    for (std::uint64_t i = 0; i < order; i++) {
      for (std::uint64_t j : {std::uint64_t(0), std::uint64_t(1), order / 2, order - 1}) {
        FieldElement prod = f.mul(FieldElement::from_log((std::uint32_t)i),
                                  FieldElement::from_log((std::uint32_t)j));
        CHECK(prod.log == (i + j) % order);
      }
    }
    // omega has full order: no proper divisor d of q-1 gives omega^d = 1
    for (auto [r, e] : factorize(order)) {
      if (order / r == 0) continue;
      CHECK(f.pow(f.omega(), order / r).log != 0);
    }
  }
}

TEST_CASE("trace values and linearity") {
  FieldCtx f243 = build_field(3, 5);
  CHECK(trace(f243, FieldElement::zero()) == 0);
  CHECK(trace(f243, f243.one()) == 5 % 3);  // Tr(1) = m mod p

  FieldCtx f16 = build_field(2, 4);
  int signed_sum = 1;  // x = 0 contributes (-1)^0
  for (std::uint64_t i = 0; i < 15; i++) {
    signed_sum += trace(f16, FieldElement::from_log((std::uint32_t)i)) ? -1 : 1;
  }
  CHECK(signed_sum == 0);  // the trace character is balanced

  for (auto [p, m] : {std::pair<std::uint64_t, std::uint32_t>{3, 4}, {2, 8}, {5, 3}}) {
    FieldCtx f = build_field(p, m);
    // fibers of the trace all have p^(m-1) elements
    std::vector<std::uint64_t> fiber(p, 0);
    fiber[0] = 1;
    for (std::uint64_t i = 0; i < f.group_order(); i++) fiber[f.trace_of_log(i)]++;
    for (std::uint64_t a = 0; a < p; a++) CHECK(fiber[a] == f.q() / p);
    // additivity and Frobenius invariance on an exhaustive sample
    for (std::uint64_t u = 0; u < f.q(); u += 3) {
      FieldElement x = f.element_from_packed(u);
      CHECK(trace(f, f.pow(x, p)) == trace(f, x));
      for (std::uint64_t v = 0; v < f.q(); v += 7) {
        FieldElement y = f.element_from_packed(v);
        CHECK((trace(f, x) + trace(f, y)) % p == trace(f, f.add(x, y)));
      }
    }
  }
}

TEST_CASE("zech addition matches packed addition") {
  FieldCtx f = build_field(3, 3);
  for (std::uint64_t u = 0; u < f.q(); u++) {
    for (std::uint64_t v = 0; v < f.q(); v++) {
      FieldElement x = f.element_from_packed(u), y = f.element_from_packed(v);
      std::uint64_t expect = 0;
      {
        std::uint64_t a = u, b = v, mul = 1;
        for (std::uint32_t j = 0; j < f.m(); j++) {
          expect += (a % 3 + b % 3) % 3 * mul;
          mul *= 3;
          a /= 3;
          b /= 3;
        }
      }
      CHECK(f.packed(f.add(x, y)) == expect);
    }
  }
}

TEST_CASE("power coset index") {
  FieldCtx f16 = build_field(2, 4);
  CHECK(power_coset_index(f16, FieldElement::from_log(7), 3) == 1);  // 7 mod 3
  FieldCtx f243 = build_field(3, 5);
  CHECK_THROWS_AS(power_coset_index(f243, FieldElement::zero(), 11), gp_error);
  CHECK_THROWS_AS(power_coset_index(f243, f243.one(), 7), gp_error);

  // k-th powers land in coset 0
  for (std::uint64_t i = 0; i < 242; i++) {
    FieldElement x = FieldElement::from_log((std::uint32_t)i);
    CHECK(power_coset_index(f243, f243.pow(x, 11), 11) == 0);
  }
  // 11 cosets of size 22
  std::vector<int> sizes(11, 0);
  for (std::uint64_t i = 0; i < 242; i++) {
    sizes[power_coset_index(f243, FieldElement::from_log((std::uint32_t)i), 11)]++;
  }
  for (int s : sizes) CHECK(s == 22);
}

TEST_CASE("primitive divisor predicate") {
  CHECK(is_primitive_divisor(3, 5, 11));   // n = 22 divides none of 2, 8, 26, 80
  CHECK(!is_primitive_divisor(2, 2, 3));   // n = 1 divides everything
  CHECK(is_primitive_divisor(5, 4, 4));    // n = 156 > 5^3 - 1
  CHECK_THROWS_AS(is_primitive_divisor(3, 5, 7), gp_error);
}

TEST_CASE("modulus cache round trip") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "gpgraph_cache_test";
  std::filesystem::remove_all(dir);
  setenv("GPGRAPH_CACHE_DIR", dir.c_str(), 1);
  FieldCtx a = build_field(3, 4);
  CHECK(std::filesystem::exists(dir / "moduli.txt"));
  FieldCtx b = build_field(3, 4);  // served from cache
  unsetenv("GPGRAPH_CACHE_DIR");
  FieldCtx c = build_field(3, 4);  // no cache
  CHECK(a.modulus() == b.modulus());
  CHECK(a.modulus() == c.modulus());
  std::filesystem::remove_all(dir);
}
