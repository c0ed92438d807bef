#include "doctest.h"

#include "gpgraph/families.hpp"
#include "gpgraph/periods.hpp"
#include "gpgraph/spectrum.hpp"

using namespace gpgraph;

namespace {

Spectrum expect_spec(Int q, std::uint64_t k, std::vector<std::pair<long long, long long>> rows) {
  std::vector<std::pair<Eigval, Int>> raw;
  Int n = rows.front().first;
  for (auto [v, m] : rows) raw.emplace_back(Eigval::of(Int(v)), Int(m));
  return make_spectrum(std::move(q), std::move(n), k, SpectrumSource::closed_form, std::move(raw));
}

bool same_entries(const Spectrum& a, const Spectrum& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); i++) {
    if (!a.entries[i].lambda.exact || !b.entries[i].lambda.exact) return false;
    if (a.entries[i].lambda.value != b.entries[i].lambda.value) return false;
    if (a.entries[i].mult != b.entries[i].mult) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("periods-path spectra") {
  FieldCtx f81 = build_field(3, 4);
  CHECK(same_entries(gp_spectrum(f81, 2), expect_spec(81, 2, {{40, 1}, {4, 40}, {-5, 40}})));

  FieldCtx f7 = build_field(7, 1);
  CHECK(same_entries(gp_spectrum(f7, 1), expect_spec(7, 1, {{6, 1}, {-1, 6}})));

  FieldCtx f625 = build_field(5, 4);
  CHECK(same_entries(gp_spectrum(f625, 4),
                     expect_spec(625, 4, {{156, 1}, {16, 156}, {1, 156}, {-4, 156}, {-14, 156}})));

  // simplicity violations are refused: 2 does not divide (7-1)/2
  CHECK_THROWS_AS(gp_spectrum(f7, 2), gp_error);
}

TEST_CASE("complement spectra") {
  FieldCtx f16 = build_field(2, 4);
  Spectrum g = gp_spectrum(f16, 3);
  CHECK(same_entries(complement_spectrum(g), expect_spec(16, 3, {{10, 1}, {2, 5}, {-2, 10}})));

  // complete graph -> edgeless graph
  FieldCtx f5 = build_field(5, 1);
  Spectrum k5 = gp_spectrum(f5, 1);
  Spectrum empty = complement_spectrum(k5);
  CHECK(empty.entries.size() == 1);
  CHECK(empty.entries[0].lambda.value == 0);
  CHECK(empty.entries[0].mult == 5);

  auto [g54, comp54] = semiprimitive_spectrum(5, 3, 4);
  CHECK(same_entries(comp54, expect_spec(81, 5, {{64, 1}, {1, 64}, {-8, 16}})));

  // involution, including through a disconnected graph
  CHECK(same_entries(complement_spectrum(complement_spectrum(g)), g));
  FieldCtx f16b = build_field(2, 4);
  Spectrum discon = gp_spectrum(f16b, 5);  // k = p^(m/2) + 1
  CHECK(!is_connected(discon));
  CHECK(discon.mu == 1);
  CHECK(same_entries(complement_spectrum(complement_spectrum(discon)), discon));
  CHECK(is_connected(complement_spectrum(discon)));
  CHECK(same_entries(complement_spectrum(k5), empty));
  CHECK(same_entries(complement_spectrum(empty), k5));
}

TEST_CASE("connectivity from the spectrum") {
  FieldCtx f16 = build_field(2, 4);
  CHECK(is_connected(gp_spectrum(f16, 3)));
  CHECK(!is_connected(gp_spectrum(f16, 5)));
  FieldCtx f9 = build_field(3, 2);
  CHECK(!is_connected(gp_spectrum(f9, 4)));  // k = 3^(m/2) + 1
  CHECK(is_connected(gp_spectrum(f9, 1)));
}

TEST_CASE("srg analysis") {
  auto data = exceptional_spectrum(exceptional_records()[0]);  // (11, 3^5)
  auto srg = srg_analysis(data.spectrum);
  REQUIRE(srg.has_value());
  CHECK(srg->srg.v == 243);
  CHECK(srg->srg.n == 22);
  CHECK(srg->srg.e == 1);
  CHECK(srg->srg.d == 2);

  auto [g26, c26] = semiprimitive_spectrum(3, 2, 6);
  auto s26 = srg_analysis(g26);
  REQUIRE(s26.has_value());
  CHECK(s26->srg.e == 8);
  CHECK(s26->srg.d == 6);
  CHECK(s26->array.b0 == 21);
  CHECK(s26->array.b1 == 12);
  CHECK(s26->array.c1 == 1);
  CHECK(s26->array.c2 == 6);

  // four distinct eigenvalues: not strongly regular
  CHECK(!srg_analysis(spectrum_gamma3(7, 3)).has_value());

  FieldCtx f16 = build_field(2, 4);
  CHECK_THROWS_AS(srg_analysis(gp_spectrum(f16, 5)), gp_error);
}

TEST_CASE("latin square labels") {
  auto info26 = classify_semiprimitive(3, 2, 6);
  auto [g26, c26] = semiprimitive_spectrum(3, 2, 6);
  LatinSquareParams lp = latin_square_analysis(g26, *info26);
  CHECK(lp.kind == LatinKind::latin);
  CHECK(lp.label() == "L_3(8)");
  CHECK(lp.neumaier_certified);

  auto info74 = classify_semiprimitive(5, 7, 4);
  LatinSquareParams lp74 = latin_square_analysis(semiprimitive_spectrum(5, 7, 4).first, *info74);
  CHECK(lp74.label() == "L_10(49)");

  // s even: negative-latin shape, no latin label
  auto info24 = classify_semiprimitive(3, 2, 4);
  LatinSquareParams lp24 = latin_square_analysis(semiprimitive_spectrum(3, 2, 4).first, *info24);
  CHECK(lp24.kind == LatinKind::negative_latin_shape);
  CHECK(lp24.w == 4);
  CHECK(lp24.delta == 1);

  // the sufficient geometricity bound genuinely fails for delta = 2 here,
  // while the latin label itself stands
  auto info52 = classify_semiprimitive(3, 5, 2);
  LatinSquareParams lp52 = latin_square_analysis(semiprimitive_spectrum(3, 5, 2).first, *info52);
  CHECK(lp52.kind == LatinKind::latin);
  CHECK(lp52.label() == "L_2(5)");
  CHECK(!lp52.neumaier_certified);
}

TEST_CASE("graph invariants, spectral and closed form") {
  auto info = classify_semiprimitive(3, 2, 4);
  auto [g, c] = semiprimitive_spectrum(3, 2, 4);
  GraphInvariants inv = graph_invariants(g, 4, &*info);
  CHECK(inv.energy == 30);
  CHECK(inv.spanning_trees == (Int(1) << 31));
  CHECK(inv.walks[0] == 0);
  CHECK(inv.walks[1] == 16 * 5);  // q n
  CHECK(inv.walks[2] == 0);

  FieldCtx f5 = build_field(5, 1);
  GraphInvariants k5 = graph_invariants(gp_spectrum(f5, 1), 2);
  CHECK(k5.walks[1] == 5 * 4);
  CHECK(k5.spanning_trees == 125);  // q^(q-2)

  // closed forms also hold for an s-odd pair
  auto info36 = classify_semiprimitive(4, 3, 6);
  graph_invariants(semiprimitive_spectrum(4, 3, 6).first, 3, &*info36);
}

TEST_CASE("ihara zeta factored form") {
  auto [g, c] = semiprimitive_spectrum(3, 2, 4);
  IharaZeta z = ihara_zeta(g);
  CHECK(z.exponent == -24);
  CHECK(z.n_minus_one == 4);
  REQUIRE(z.factors.size() == 3);
  CHECK(z.factors[0] == std::pair<Int, Int>{5, 1});
  CHECK(z.factors[1] == std::pair<Int, Int>{1, 10});
  CHECK(z.factors[2] == std::pair<Int, Int>{-3, 5});
  CHECK(z.to_string() == "(1-u^2)^-24 / [(1-5u-4u^2) (1-u-4u^2)^10 (1+3u-4u^2)^5]");

  FieldCtx f4 = build_field(2, 2);
  IharaZeta zk4 = ihara_zeta(gp_spectrum(f4, 1));
  CHECK(zk4.exponent == -2);
  CHECK(zk4.factors == std::vector<std::pair<Int, Int>>{{3, 1}, {-1, 3}});

  FieldCtx f9 = build_field(3, 2);
  IharaZeta zp9 = ihara_zeta(gp_spectrum(f9, 2));
  CHECK(zp9.exponent == -9);
  CHECK(zp9.factors == std::vector<std::pair<Int, Int>>{{4, 1}, {1, 4}, {-2, 4}});

  // degree <= 2 is degenerate
  FieldCtx f3 = build_field(3, 1);
  CHECK_THROWS_AS(ihara_zeta(gp_spectrum(f3, 1)), gp_error);
}

TEST_CASE("spectral Ramanujan test") {
  CHECK(is_ramanujan_spectral(semiprimitive_spectrum(3, 2, 4).first));
  CHECK(is_ramanujan_spectral(exceptional_spectrum(exceptional_records()[0]).spectrum));
  FieldCtx f7 = build_field(7, 1);
  CHECK(is_ramanujan_spectral(gp_spectrum(f7, 1)));
  CHECK(!is_ramanujan_spectral(semiprimitive_spectrum(13, 5, 4).first));
  FieldCtx f16 = build_field(2, 4);
  CHECK_THROWS_AS(is_ramanujan_spectral(gp_spectrum(f16, 5)), gp_error);
}

TEST_CASE("spectrum json shape") {
  auto [g, c] = semiprimitive_spectrum(3, 2, 4);
  auto j = spectrum_to_json(g);
  CHECK(j["q"] == "16");
  CHECK(j["k"] == 3);
  CHECK(j["n"] == "5");
  CHECK(j["source"] == "closed_form");
  CHECK(j["exact"] == true);
  CHECK(j["entries"][0][0] == "5");
  CHECK(j["entries"][0][1] == "1");
  CHECK(j["entries"][2][0] == "-3");
}
