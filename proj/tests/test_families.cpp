#include "doctest.h"

#include "gpgraph/families.hpp"
#include "gpgraph/periods.hpp"

using namespace gpgraph;

namespace {

std::vector<std::uint64_t> ks_of(std::uint64_t p, std::uint32_t m) {
  std::vector<std::uint64_t> ks;
  for (const auto& info : enumerate_semiprimitive_pairs(p, m)) ks.push_back(info.k);
  return ks;
}

bool same_entries(const Spectrum& a, const Spectrum& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); i++) {
    if (a.entries[i].lambda.value != b.entries[i].lambda.value) return false;
    if (a.entries[i].mult != b.entries[i].mult) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("semiprimitive classification") {
  auto info = classify_semiprimitive(5, 3, 4);
  REQUIRE(info.has_value());
  CHECK(info->t == 2);
  CHECK(info->s == 1);
  CHECK(info->sigma == 1);

  CHECK(!classify_semiprimitive(10, 3, 4).has_value());  // k = 3^(m/2) + 1
  CHECK(!classify_semiprimitive(11, 3, 5).has_value());  // odd m, k > 2
  CHECK(!classify_semiprimitive(7, 5, 4).has_value());

  CHECK(is_semiprimitive_pair(2, 5, 1));   // Paley(5), odd m
  CHECK(!is_semiprimitive_pair(2, 7, 1));  // q = 3 mod 4
  CHECK(is_semiprimitive_pair(2, 7, 2));
  CHECK(!classify_semiprimitive(2, 5, 1).has_value());  // no (t, s, sigma) at odd m

  auto info24 = classify_semiprimitive(3, 2, 4);
  REQUIRE(info24.has_value());
  CHECK(info24->sigma == -1);
  CHECK(info24->standard_form());  // 3 = 2^1 + 1
  CHECK(!classify_semiprimitive(5, 3, 4)->standard_form());
}

TEST_CASE("enumeration of semiprimitive pairs") {
  CHECK(ks_of(3, 4) == std::vector<std::uint64_t>{2, 4, 5});
  CHECK(ks_of(5, 2) == std::vector<std::uint64_t>{2, 3});
  CHECK(ks_of(7, 4) == std::vector<std::uint64_t>{2, 4, 5, 8, 10, 25});
  CHECK(ks_of(2, 4) == std::vector<std::uint64_t>{3});
  CHECK(ks_of(2, 6) == std::vector<std::uint64_t>{3});
  CHECK(ks_of(5, 6) == std::vector<std::uint64_t>{2, 3, 6, 7, 9, 14, 18, 21, 42, 63});
  CHECK(ks_of(3, 8) == std::vector<std::uint64_t>{2, 4, 5, 10, 41});

  // cells where the published table differs from the definition:
  // it omits k = 2 for (p, m) = (3, 2) and k = 3 for (2, 8), and lists
  // k in {5, 10, 25, 50} for (7, 6) although those do not divide 7^6 - 1
  CHECK(ks_of(3, 2) == std::vector<std::uint64_t>{2});
  CHECK(ks_of(2, 8) == std::vector<std::uint64_t>{3, 5});
  CHECK(ks_of(7, 6) == std::vector<std::uint64_t>{2, 4, 8, 43, 86, 172});
  for (std::uint64_t bogus : {5, 10, 25, 50}) {
    CHECK((pow_int(Int(7), 6) - 1) % bogus != 0);
  }

  CHECK_THROWS_AS(enumerate_semiprimitive_pairs(3, 5), gp_error);
}

TEST_CASE("semiprimitive closed-form spectra") {
  auto [g36, c36] = semiprimitive_spectrum(4, 3, 6);
  CHECK(format_spectrum(g36) == "{[182]^1, [20]^182, [-7]^546}");
  auto [g74, c74] = semiprimitive_spectrum(5, 7, 4);
  CHECK(format_spectrum(g74) == "{[480]^1, [39]^480, [-10]^1920}");

  FieldCtx f16 = build_field(2, 4);
  CHECK(same_entries(semiprimitive_spectrum(3, 2, 4).first, gp_spectrum(f16, 3)));

  CHECK_THROWS_AS(semiprimitive_spectrum(11, 3, 5), gp_error);
}

TEST_CASE("Ramanujan case list") {
  CHECK(ramanujan_classification(3, 2, 4));
  CHECK(!ramanujan_classification(5, 2, 4));  // needs m >= 8
  CHECK(ramanujan_classification(5, 2, 8));
  CHECK(!ramanujan_classification(13, 5, 4));  // k > 5 never
  CHECK(ramanujan_classification(2, 13, 1));   // classic Paley
  CHECK(ramanujan_classification(4, 7, 2));
  CHECK(!ramanujan_classification(4, 3, 2));   // (4, 9) is not even semiprimitive
  CHECK(!ramanujan_classification(11, 3, 5));  // exceptional, not semiprimitive
  CHECK_THROWS_AS(ramanujan_classification(7, 3, 5), gp_error);  // 7 does not divide q-1

  CHECK(complement_always_ramanujan_check(4, 3, 4));
  CHECK(complement_always_ramanujan_check(25, 7, 4));
  CHECK(complement_always_ramanujan_check(2, 5, 2));
  CHECK(complement_always_ramanujan_check(2, 13, 1));
}

TEST_CASE("k=3 diophantine representation") {
  auto s73 = solve_k3_diophantine(7, 3);
  CHECK(s73.a == 1);
  CHECK(s73.b == 1);
  auto s133 = solve_k3_diophantine(13, 3);
  CHECK(s133.a == -5);
  CHECK(s133.b == 1);
  auto s76 = solve_k3_diophantine(7, 6);
  CHECK(s76.a == 13);
  CHECK(s76.b == 1);
  CHECK_THROWS_AS(solve_k3_diophantine(5, 3), gp_error);
}

TEST_CASE("k=4 diophantine representation") {
  auto s54 = solve_k4_diophantine(5, 4);
  CHECK(s54.c == -3);
  CHECK(s54.d == 2);
  // with m = 4 the represented value is p^2, not p
  auto s134 = solve_k4_diophantine(13, 4);
  CHECK(s134.c == 5);
  CHECK(s134.d == 6);
  CHECK(s134.c * s134.c + 4 * s134.d * s134.d == 169);
  auto s174 = solve_k4_diophantine(17, 4);
  CHECK(s174.c == -15);
  CHECK(s174.d == 4);
  CHECK_THROWS_AS(solve_k4_diophantine(7, 4), gp_error);
}

TEST_CASE("Gamma(3, q) closed forms") {
  CHECK(format_spectrum(spectrum_gamma3(7, 3)) == "{[114]^1, [9]^114, [2]^114, [-12]^114}");
  CHECK(format_spectrum(spectrum_gamma3(5, 4)) == "{[208]^1, [8]^416, [-17]^208}");
  CHECK(format_spectrum(spectrum_gamma3(2, 4)) == "{[5]^1, [1]^10, [-3]^5}");
  CHECK(format_spectrum(spectrum_gamma3(2, 6)) == "{[21]^1, [5]^21, [-3]^42}");  // m = 2 mod 4
  CHECK_THROWS_AS(spectrum_gamma3(3, 6), gp_error);
  CHECK_THROWS_AS(spectrum_gamma3(2, 2), gp_error);  // q too small

  // eigenvalues are insensitive to the sign of b
  auto [a, b] = solve_k3_diophantine(7, 3);
  Int croot = 7, n = 114;
  Int l2 = (-(a + 9 * b) / 2 * croot - 1) / 3;
  Int l3 = (-(a - 9 * b) / 2 * croot - 1) / 3;
  Int l2f = (-(a + 9 * -b) / 2 * croot - 1) / 3;
  Int l3f = (-(a - 9 * -b) / 2 * croot - 1) / 3;
  CHECK(l2 == l3f);
  CHECK(l3 == l2f);
}

TEST_CASE("Gamma(4, q) closed forms") {
  CHECK(format_spectrum(spectrum_gamma4(5, 4)) ==
        "{[156]^1, [16]^156, [1]^156, [-4]^156, [-14]^156}");
  CHECK(format_spectrum(spectrum_gamma4(3, 4)) == "{[20]^1, [2]^60, [-7]^20}");
  CHECK(format_spectrum(spectrum_gamma4(7, 2)) == "{[12]^1, [5]^12, [-2]^36}");
  CHECK_THROWS_AS(spectrum_gamma4(3, 2), gp_error);  // q = 9 excluded
  CHECK_THROWS_AS(spectrum_gamma4(2, 4), gp_error);  // 4 never divides 2^m - 1
}

TEST_CASE("closed forms agree with the periods path") {
  FieldCtx f343 = build_field(7, 3);
  CHECK(same_entries(spectrum_gamma3(7, 3), gp_spectrum(f343, 3)));
  FieldCtx f625 = build_field(5, 4);
  CHECK(same_entries(spectrum_gamma4(5, 4), gp_spectrum(f625, 4)));
  FieldCtx f49 = build_field(7, 2);
  CHECK(same_entries(spectrum_gamma4(7, 2), gp_spectrum(f49, 4)));
  FieldCtx f64 = build_field(2, 6);
  CHECK(same_entries(spectrum_gamma3(2, 6), gp_spectrum(f64, 3)));
}

TEST_CASE("closed-form sweeps against tallied periods, q <= 4096") {
  std::uint64_t semiprimitive_cases = 0, gamma3_cases = 0, gamma4_cases = 0;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    for (std::uint32_t m = 1; m <= 12; m++) {
      Int q = pow_int(Int(p), m);
      if (q > 4096) break;
      FieldCtx f = build_field(p, m);
      if (m % 2 == 0) {
        for (const auto& info : enumerate_semiprimitive_pairs(p, m)) {
          CHECK(same_entries(semiprimitive_spectrum(info.k, p, m).first,
                             gp_spectrum(f, info.k)));
          semiprimitive_cases++;
        }
      }
      if (q >= 5 && exact_div(q - 1, Int(p - 1), "subgroup") % 3 == 0) {
        CHECK(same_entries(spectrum_gamma3(p, m), gp_spectrum(f, 3)));
        gamma3_cases++;
      }
      if (q >= 5 && q != 9 && exact_div(q - 1, Int(p - 1), "subgroup") % 4 == 0) {
        CHECK(same_entries(spectrum_gamma4(p, m), gp_spectrum(f, 4)));
        gamma4_cases++;
      }
    }
  }
  CHECK(semiprimitive_cases >= 40);
  CHECK(gamma3_cases >= 10);
  CHECK(gamma4_cases >= 8);
}

TEST_CASE("exceptional records") {
  const auto& recs = exceptional_records();
  CHECK(recs.size() == 11);
  CHECK(recs[0].k == 11);
  CHECK(recs[0].p == 3);
  CHECK(recs[0].m == 5);
  CHECK(recs[0].theta == 2);
  CHECK(recs[0].t == 5);
  CHECK(recs[0].eps == 1);
  CHECK(recs[7].k == 133);
  CHECK(recs[7].eps == -1);
  for (const auto& r : recs) {
    if (r.k != 133) CHECK(r.eps == 1);
  }
}

TEST_CASE("exceptional derivations") {
  ExceptionalData d19 = exceptional_spectrum(exceptional_records()[1]);
  CHECK(d19.lambda1 == 296);
  CHECK(d19.lambda2 == -329);
  CHECK(d19.m1 == 1027960);
  CHECK(d19.m2 == 925164);
  CHECK(d19.srg.e == 5379);
  CHECK(d19.srg.d == 5412);
  CHECK(d19.w1 == 82000);
  CHECK(d19.w2 == 82500);

  ExceptionalData d11 = exceptional_spectrum(exceptional_records()[0]);
  CHECK(d11.w1 == 12);  // the printed table shows n = 22 here by mistake
  CHECK(d11.w2 == 18);
  CHECK(format_spectrum(d11.spectrum) == "{[22]^1, [4]^132, [-5]^110}");

  ExceptionalData d67 = exceptional_spectrum(exceptional_records()[5]);
  CHECK(d67.lambda1 == Int("23967452714880696416"));
  CHECK(d67.w1 == Int("565471425614439939283497632625940854016"));
  CHECK(d67.q == Int("40254497110927943179349807054456171205137"));

  // eps = -1 makes lambda1 the negative eigenvalue for (133, 5^18)
  ExceptionalData d133 = exceptional_spectrum(exceptional_records()[7]);
  CHECK(d133.lambda1 == -96922);
  CHECK(d133.lambda2 == 293703);
  CHECK(d133.m1 == Int("2868193432800"));

  for (const auto& rec : exceptional_records()) {
    ExceptionalData d = exceptional_spectrum(rec);
    CHECK(d.m1 + d.m2 + 1 == d.q);
    CHECK(d.n + d.m1 * d.lambda1 + d.m2 * d.lambda2 == 0);
  }
}
