#include "gpgraph/codes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "gpgraph/adjacency.hpp"
#include "gpgraph/families.hpp"

namespace gpgraph {

CodeSpec code_params(std::uint64_t p, std::uint32_t m, std::uint64_t k) {
  CodeSpec cs;
  cs.p = p;
  cs.m = m;
  cs.k = k;
  cs.q = pow_int(Int(p), m);
  require(k >= 1 && (cs.q - 1) % k == 0, errc::not_a_divisor,
          "k = " + std::to_string(k) + " does not divide q-1");
  Int subgroup = exact_div(cs.q - 1, Int(p - 1), "(q-1)/(p-1)");
  cs.N = gcd(subgroup, Int(k)).convert_to<std::uint64_t>();
  cs.n = exact_div(cs.q - 1, Int(cs.N), "n = (q-1)/N");
  cs.dimension = 0;
  Int pa = 1;
  for (std::uint32_t a = 1; a <= m; a++) {
    pa *= p;
    if ((pa - 1) % cs.n == 0) {
      cs.dimension = a;
      break;
    }
  }
  require(cs.dimension >= 1, errc::internal, "dimension scan failed");
  return cs;
}

Int WeightDistribution::total() const {
  Int t = 0;
  for (const auto& [w, f] : entries) t += f;
  return t;
}

std::size_t WeightDistribution::nonzero_weight_count() const {
  std::size_t c = 0;
  for (const auto& [w, f] : entries) c += w != 0;
  return c;
}

Int WeightDistribution::min_nonzero_weight() const {
  for (const auto& [w, f] : entries)
    if (w != 0) return w;
  fail(errc::internal, "no nonzero weight");
}

Int WeightDistribution::max_weight() const {
  require(!entries.empty(), errc::internal, "empty distribution");
  return entries.back().first;
}

void validate_weights(const WeightDistribution& wd) {
  require(!wd.entries.empty(), errc::internal, "empty weight distribution");
  // the kernel of gamma -> c_gamma has p^(m - dimension) elements
  CodeSpec cs = code_params(wd.p, wd.m, wd.k);
  Int zero_words = pow_int(Int(wd.p), wd.m - cs.dimension);
  require(wd.entries.front().first == 0 && wd.entries.front().second == zero_words,
          errc::internal, "A_0 must be p^(m - dimension)");
  for (size_t i = 1; i < wd.entries.size(); i++) {
    require(wd.entries[i - 1].first < wd.entries[i].first, errc::internal,
            "weights not ascending");
  }
  require(wd.entries.back().first <= wd.n, errc::internal, "weight exceeds length");
  require(wd.total() == pow_int(Int(wd.p), wd.m), errc::internal,
          "frequencies do not sum to q");
}

std::vector<std::uint32_t> codeword(const FieldCtx& ctx, FieldElement gamma, std::uint64_t k) {
  CodeSpec cs = code_params(ctx.p(), ctx.m(), k);
  std::uint64_t n = cs.n.convert_to<std::uint64_t>();
  std::vector<std::uint32_t> word(n, 0);
  if (gamma.is_zero) return word;
  const std::uint64_t qm1 = ctx.q() - 1;
  std::uint64_t idx = gamma.log % qm1;
  const std::uint64_t step = k % qm1;
  for (std::uint64_t i = 0; i < n; i++) {
    word[i] = ctx.trace_of_log(idx);
    idx += step;
    if (idx >= qm1) idx -= qm1;
  }
  return word;
}

WeightDistribution weight_distribution_enumerate(const FieldCtx& ctx, std::uint64_t k,
                                                 EnumerationMode mode, std::uint64_t enum_cap) {
  const std::uint64_t q = ctx.q();
  require(q <= enum_cap, errc::field_too_large,
          "q = " + std::to_string(q) + " exceeds enumeration cap " + std::to_string(enum_cap));
  CodeSpec cs = code_params(ctx.p(), ctx.m(), k);
  const std::uint64_t n = cs.n.convert_to<std::uint64_t>();
  const std::uint64_t qm1 = q - 1;
  const std::uint64_t words = mode == EnumerationMode::full ? qm1 : k;
  require((unsigned __int128)words * n <= ((unsigned __int128)1 << 33), errc::field_too_large,
          "enumeration budget exceeded");

  std::vector<std::uint64_t> hist;
  if (mode == EnumerationMode::full) {
    hist = weight_histogram_omp(ctx, k);
  } else {
    // weights are constant on cosets of the k-th powers: scaling gamma by
    // omega^k cyclically shifts the codeword
    hist.assign(n + 1, 0);
    hist[0] = 1;
    const std::uint64_t coset_size = qm1 / k;
    for (std::uint64_t rep = 0; rep < k; rep++) {
      std::uint64_t w = 0, idx = rep;
      for (std::uint64_t i = 0; i < n; i++) {
        w += ctx.trace_of_log(idx) != 0;
        idx += k;
        if (idx >= qm1) idx -= qm1;
      }
      hist[w] += coset_size;
    }
  }

  WeightDistribution wd;
  wd.p = ctx.p();
  wd.m = ctx.m();
  wd.k = k;
  wd.N = cs.N;
  wd.n = cs.n;
  for (std::uint64_t w = 0; w < hist.size(); w++) {
    if (hist[w]) wd.entries.emplace_back(Int(w), Int(hist[w]));
  }
  validate_weights(wd);
  return wd;
}

WeightDistribution weights_from_spectrum(const Spectrum& s, std::uint64_t p) {
  require(s.k >= 1, errc::internal, "spectrum carries no k");
  const Int subgroup = exact_div(s.q - 1, Int(p - 1), "(q-1)/(p-1)");
  require(subgroup % s.k == 0, errc::bridge_inapplicable,
          "bridge needs k | (q-1)/(p-1); N = gcd((q-1)/(p-1), k) = " +
              gcd(subgroup, Int(s.k)).str());
  require(is_connected(s), errc::disconnected, "the weight/eigenvalue bridge needs connectivity");
  require(s.exact(), errc::inexact_spectrum, "bridge needs an integral spectrum");

  WeightDistribution wd;
  wd.p = p;
  wd.k = s.k;
  wd.N = s.k;
  wd.n = s.n;
  {
    // recover m from q = p^m
    Int q = s.q;
    std::uint32_t m = 0;
    while (q > 1) {
      q = exact_div(q, Int(p), "q must be a power of p");
      m++;
    }
    wd.m = m;
  }
  for (const auto& e : s.entries) {
    Int w = exact_div((p - 1) * (s.n - e.lambda.value), Int(p), "weight bridge division");
    wd.entries.emplace_back(std::move(w), e.mult);
  }
  std::sort(wd.entries.begin(), wd.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  validate_weights(wd);
  return wd;
}

Spectrum spectrum_from_weights(const WeightDistribution& wd) {
  require(!wd.entries.empty() && wd.p >= 2 && wd.m >= 1, errc::precondition_violated,
          "degenerate weight distribution");
  validate_weights(wd);
  const Int subgroup = exact_div(pow_int(Int(wd.p), wd.m) - 1, Int(wd.p - 1), "(q-1)/(p-1)");
  require(wd.k >= 1 && subgroup % wd.k == 0, errc::bridge_inapplicable,
          "bridge needs k | (q-1)/(p-1)");
  std::vector<std::pair<Eigval, Int>> raw;
  for (const auto& [w, f] : wd.entries) {
    Int lam = wd.n - exact_div(Int(wd.p) * w, Int(wd.p - 1), "eigenvalue bridge division");
    raw.emplace_back(Eigval::of(lam), f);
  }
  return make_spectrum(pow_int(Int(wd.p), wd.m), wd.n, wd.k, SpectrumSource::closed_form,
                       std::move(raw));
}

TwoWeightReport two_weight_srg_check(std::uint64_t p, std::uint32_t m, std::uint64_t k) {
  CodeSpec cs = code_params(p, m, k);
  require(cs.N == k, errc::precondition_violated, "needs k | (q-1)/(p-1)");
  require(is_primitive_divisor(p, m, Int(k)), errc::precondition_violated,
          "needs n to be a primitive divisor of q-1");
  FieldCtx ctx = build_field(p, m);
  Spectrum s = gp_spectrum(ctx, k);
  auto srg = srg_analysis(s);
  WeightDistribution wd = weight_distribution_enumerate(ctx, k);
  TwoWeightReport rep;
  rep.graph_is_srg = srg.has_value();
  rep.distinct_eigenvalues = s.entries.size();
  rep.code_has_two_weights = wd.nonzero_weight_count() == 2;
  rep.distinct_nonzero_weights = wd.nonzero_weight_count();
  return rep;
}

long double RamanujanDistanceBound::approx() const {
  long double nn = n.convert_to<long double>();
  return (long double)(p - 1) / p * (nn - 2 * sqrtl(nn - 1));
}

bool RamanujanDistanceBound::hypothesis_holds(const Int& d) const {
  return Int(p) * d <= (Int(p) - 1) * n;
}

bool RamanujanDistanceBound::satisfied_by(const Int& d) const {
  // d >= (p-1)/p (n - 2 sqrt(n-1))  <=>  (p-1)n - pd <= 2(p-1) sqrt(n-1)
  Int lhs = (Int(p) - 1) * n - Int(p) * d;
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * (Int(p) - 1) * (Int(p) - 1) * (n - 1);
}

RamanujanDistanceBound min_distance_bound(const Int& n, std::uint64_t p) {
  require(n >= 1, errc::precondition_violated, "length must be positive");
  return {n, p};
}

std::pair<Int, Int> semiprimitive_weights(std::uint64_t k, std::uint64_t p, std::uint32_t m) {
  auto info = classify_semiprimitive(k, p, m);
  require(info.has_value(), errc::not_semiprimitive,
          "(" + std::to_string(k) + ", " + std::to_string(p) + "^" + std::to_string(m) + ")");
  const Int R = pow_int(Int(p), m / 2);
  const Int scale = (Int(p) - 1) * pow_int(Int(p), m / 2 - 1);
  // both weights carry denominator k (the printed form of w1 shows m, which
  // is dimensionally inconsistent with the eigenvalue bridge; enumeration
  // confirms k)
  Int w1 = exact_div(scale * (R - info->sigma * Int(k - 1)), Int(k), "w1 division by k");
  Int w2 = exact_div(scale * (R + info->sigma), Int(k), "w2 division by k");
  return {std::move(w1), std::move(w2)};
}

nlohmann::ordered_json weights_to_json(const WeightDistribution& wd) {
  nlohmann::ordered_json j;
  j["p"] = wd.p;
  j["m"] = wd.m;
  j["k"] = wd.k;
  j["N"] = wd.N;
  j["n"] = wd.n.str();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [w, f] : wd.entries) entries.push_back({w.str(), f.str()});
  j["entries"] = std::move(entries);
  return j;
}

std::string format_weights(const WeightDistribution& wd) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < wd.entries.size(); i++) {
    os << wd.entries[i].first.str() << ":" << wd.entries[i].second.str();
    if (i + 1 < wd.entries.size()) os << ", ";
  }
  os << "}";
  return os.str();
}

}  // namespace gpgraph
