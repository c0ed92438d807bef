#include "gpgraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gpgraph/families.hpp"
#include "gpgraph/periods.hpp"

namespace gpgraph {

namespace {

constexpr long double kGroupTol = 1e-9L;

long double ld(const Int& v) { return v.convert_to<long double>(); }

std::string eigval_str(const Eigval& e) {
  if (e.exact) return e.value.str();
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12Lg", e.approx);
  return buf;
}

// total bits of the product prod base^exp, to refuse absurd expansions
void guard_product_size(const Int& bits, const char* what) {
  require(bits <= (Int(1) << 26), errc::field_too_large,
          std::string(what) + " would need ~2^" + std::to_string(msb(bits)) + " bits");
}

std::uint64_t to_u64_exp(const Int& e, const char* what) {
  require(e >= 0 && e <= std::numeric_limits<std::uint64_t>::max(), errc::field_too_large,
          std::string("exponent too large in ") + what);
  return e.convert_to<std::uint64_t>();
}

}  // namespace

const char* spectrum_source_name(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::closed_form: return "closed_form";
    case SpectrumSource::periods: return "periods";
    case SpectrumSource::oracle: return "oracle";
  }
  return "?";
}

bool Spectrum::exact() const {
  for (const auto& e : entries)
    if (!e.lambda.exact) return false;
  return true;
}

const SpectrumEntry& Spectrum::principal() const {
  require(!entries.empty(), errc::internal, "empty spectrum");
  return entries.front();
}

Spectrum make_spectrum(Int q, Int n, std::uint64_t k, SpectrumSource source,
                       std::vector<std::pair<Eigval, Int>> raw) {
  // merge equal eigenvalues: integer equality for exact ones, a tight
  // absolute tolerance for floating ones
  std::vector<SpectrumEntry> entries;
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.first.exact && b.first.exact) return a.first.value > b.first.value;
    if (a.first.approx != b.first.approx) return a.first.approx > b.first.approx;
    return a.first.exact > b.first.exact;
  });
  for (auto& [val, mult] : raw) {
    bool merged = false;
    if (!entries.empty()) {
      auto& last = entries.back();
      if (last.lambda.exact && val.exact) {
        merged = last.lambda.value == val.value;
      } else if (!last.lambda.exact && !val.exact) {
        merged = std::fabs((double)(last.lambda.approx - val.approx)) <= kGroupTol;
      }
    }
    if (merged) {
      entries.back().mult += mult;
    } else {
      entries.push_back({val, mult});
    }
  }

  Spectrum s;
  s.q = std::move(q);
  s.n = std::move(n);
  s.k = k;
  s.source = source;
  s.entries = std::move(entries);
  if (s.n == 0) {
    s.mu = s.q - 1;  // degenerate edgeless graph; every vertex is a component
  } else {
    s.mu = exact_div(s.principal().mult - 1, s.n, "principal multiplicity");
  }
  validate_spectrum(s);
  return s;
}

void validate_spectrum(const Spectrum& s) {
  require(!s.entries.empty(), errc::internal, "empty spectrum");
  if (s.exact()) {
    Int msum = 0, sum1 = 0, sum2 = 0;
    for (const auto& e : s.entries) {
      require(e.mult >= 1, errc::internal, "nonpositive multiplicity");
      msum += e.mult;
      sum1 += e.lambda.value * e.mult;
      sum2 += e.lambda.value * e.lambda.value * e.mult;
    }
    require(msum == s.q, errc::internal, "multiplicities sum to " + msum.str() + ", not q");
    require(sum1 == 0, errc::internal, "eigenvalue sum " + sum1.str() + " != 0");
    require(sum2 == s.q * s.n, errc::internal, "eigenvalue square sum != q n");
    require(s.principal().lambda.value == s.n, errc::internal, "max eigenvalue != degree");
    for (size_t i = 1; i < s.entries.size(); i++) {
      require(s.entries[i - 1].lambda.value > s.entries[i].lambda.value, errc::internal,
              "entries not strictly descending");
    }
    if (s.n != 0) {
      require(s.principal().mult == 1 + s.mu * s.n, errc::internal,
              "principal multiplicity != 1 + mu n");
    }
  } else {
    long double msum = 0, sum1 = 0, sum2 = 0, qn = ld(s.q) * ld(s.n);
    for (const auto& e : s.entries) {
      long double lam = e.lambda.approx, mul = ld(e.mult);
      msum += mul;
      sum1 += lam * mul;
      sum2 += lam * lam * mul;
    }
    long double tol = 1e-6L * std::max(1.0L, qn);
    require(std::fabs((double)(msum - ld(s.q))) < 0.5, errc::internal, "multiplicity sum != q");
    require(fabsl(sum1) < tol, errc::internal, "eigenvalue sum not ~0");
    require(fabsl(sum2 - qn) < tol, errc::internal, "eigenvalue square sum not ~ q n");
  }
}

Spectrum gp_spectrum(const FieldCtx& ctx, std::uint64_t k) {
  const std::uint64_t q = ctx.q();
  require(k >= 1 && (q - 1) % k == 0, errc::not_a_divisor,
          "k = " + std::to_string(k) + " does not divide q-1");
  require(q % 2 == 0 || ((q - 1) / 2) % k == 0, errc::directed_graph,
          "p odd requires k | (q-1)/2, else the connection set is not symmetric");

  const Int n = Int((q - 1) / k);
  PeriodVector pv = gaussian_periods(ctx, k);
  std::vector<std::pair<Eigval, Int>> raw;
  raw.reserve(k + 1);
  raw.emplace_back(Eigval::of(n), 1);
  for (const auto& v : pv.values) {
    if (v.exact) {
      raw.emplace_back(Eigval::of(v.value), Int(n));
    } else {
      require(fabsl(v.approx.imag()) < 1e-9L, errc::internal,
              "complex period under the simplicity condition");
      raw.emplace_back(Eigval::inexact_of(v.approx.real()), Int(n));
    }
  }
  return make_spectrum(Int(q), n, k, SpectrumSource::periods, std::move(raw));
}

Spectrum complement_spectrum(const Spectrum& s) {
  std::vector<std::pair<Eigval, Int>> raw;
  const Int comp_degree = s.q - 1 - s.n;
  for (const auto& e : s.entries) {
    bool principal = e.lambda.exact ? e.lambda.value == s.n
                                    : fabsl(e.lambda.approx - ld(s.n)) <= kGroupTol;
    if (principal) {
      raw.emplace_back(Eigval::of(comp_degree), 1);
      // eigenvectors orthogonal to the all-ones vector stay eigenvectors
      if (e.mult > 1) raw.emplace_back(Eigval::of(-1 - s.n), Int(e.mult - 1));
    } else if (e.lambda.exact) {
      raw.emplace_back(Eigval::of(-1 - e.lambda.value), e.mult);
    } else {
      raw.emplace_back(Eigval::inexact_of(-1 - e.lambda.approx), e.mult);
    }
  }
  return make_spectrum(s.q, comp_degree, s.k, s.source, std::move(raw));
}

bool is_connected(const Spectrum& s) {
  if (s.n == 0) return s.q == 1;
  return s.mu == 0;
}

std::optional<SrgAnalysis> srg_analysis(const Spectrum& s) {
  require(is_connected(s), errc::disconnected, "srg analysis needs a connected graph");
  if (s.entries.size() != 3) return std::nullopt;

  Int lambda_sum, lambda_prod;
  if (s.exact()) {
    lambda_sum = s.entries[1].lambda.value + s.entries[2].lambda.value;
    lambda_prod = s.entries[1].lambda.value * s.entries[2].lambda.value;
  } else {
    // e and d are integers even when the eigenvalues themselves are
    // irrational (conference graphs): only their sum and product enter
    long double a = s.entries[1].lambda.approx, b = s.entries[2].lambda.approx;
    lambda_sum = Int(llroundl(a + b));
    lambda_prod = Int(llroundl(a * b));
    require(fabsl(a + b - ld(lambda_sum)) < 1e-6L && fabsl(a * b - ld(lambda_prod)) < 1e-6L,
            errc::inexact_spectrum, "non-integral srg parameters");
  }
  Int d = s.n + lambda_prod;
  Int e = d + lambda_sum;
  SrgAnalysis res{{s.q, s.n, e, d}, {s.n, s.n - e - 1, 1, d}};
  require(res.srg.n * (res.srg.n - res.srg.e - 1) == (res.srg.v - res.srg.n - 1) * res.srg.d,
          errc::internal, "srg feasibility identity fails");
  return res;
}

std::string LatinSquareParams::label() const {
  std::ostringstream os;
  if (kind == LatinKind::latin) {
    os << "L_" << delta.str() << "(" << w.str() << ")";
  } else {
    os << "NL~_" << delta.str() << "(" << w.str() << ")";
  }
  return os.str();
}

LatinSquareParams latin_square_analysis(const Spectrum& s, const SemiprimitiveInfo& semi) {
  require(s.exact() && s.entries.size() == 3 && is_connected(s), errc::not_semiprimitive,
          "not a semiprimitive three-eigenvalue spectrum");
  const Int f = s.entries[1].lambda.value;
  const Int g = s.entries[2].lambda.value;
  require(f > 0 && g < 0, errc::not_semiprimitive, "nontrivial eigenvalues must straddle 0");

  LatinSquareParams lp;
  lp.w = f - g;
  require(lp.w * lp.w == s.q, errc::internal, "w^2 != q for a semiprimitive spectrum");
  auto srg = srg_analysis(s);
  require(srg.has_value(), errc::internal, "semiprimitive graphs are strongly regular");
  if (semi.s % 2 == 1) {
    lp.kind = LatinKind::latin;
    lp.delta = -g;
    require(s.n == lp.delta * (lp.w - 1) &&
                srg->srg.e == lp.delta * lp.delta - 3 * lp.delta + lp.w &&
                srg->srg.d == lp.delta * (lp.delta - 1),
            errc::internal, "latin parameter identities fail");
    // Neumaier: f + 1 <= g(g+1)(d+1)/2 certifies geometricity; it is only a
    // sufficient bound and genuinely fails for some delta = 2 graphs
    lp.neumaier_certified = 2 * (f + 1) <= g * (g + 1) * (srg->srg.d + 1);
  } else {
    lp.kind = LatinKind::negative_latin_shape;
    // h equals min(|f|, |g|) = f on the primal graphs; on complements only
    // h = f satisfies the parameter identities
    lp.delta = f;
    require(s.n == lp.delta * (lp.w + 1) &&
                srg->srg.e == lp.delta * lp.delta + 3 * lp.delta - lp.w &&
                srg->srg.d == lp.delta * (lp.delta + 1),
            errc::internal, "negative-latin parameter identities fail");
    lp.neumaier_certified = false;
  }
  return lp;
}

GraphInvariants graph_invariants(const Spectrum& s, unsigned r_max, const SemiprimitiveInfo* semi) {
  require(s.exact(), errc::inexact_spectrum, "invariants need an exact spectrum");

  GraphInvariants inv;
  inv.energy = 0;
  for (const auto& e : s.entries) inv.energy += abs(e.lambda.value) * e.mult;

  inv.walks.reserve(r_max);
  for (unsigned r = 1; r <= r_max; r++) {
    Int acc = 0;
    for (const auto& e : s.entries) acc += pow_int(e.lambda.value, r) * e.mult;
    inv.walks.push_back(acc);
  }

  if (!is_connected(s)) {
    inv.spanning_trees = 0;
  } else {
    Int bits = 0;
    for (size_t i = 1; i < s.entries.size(); i++) {
      bits += s.entries[i].mult * (msb(s.n - s.entries[i].lambda.value) + 1);
    }
    guard_product_size(bits, "spanning tree product");
    Int prod = 1;
    for (size_t i = 1; i < s.entries.size(); i++) {
      prod *= pow_int(s.n - s.entries[i].lambda.value,
                      to_u64_exp(s.entries[i].mult, "tree product"));
    }
    inv.spanning_trees = exact_div(prod, s.q, "Kirchhoff division by q");
  }

  if (semi) {
    const Int R = pow_int(Int(semi->p), semi->m / 2);
    const int sigma = semi->sigma;
    const Int k = semi->k;
    const Int l2 = -exact_div(sigma * R + 1, k, "lambda2");
    const Int n = s.n;

    Int energy_cf = n * (2 * (R + sigma * l2) + 1 + sigma);
    require(energy_cf == inv.energy, errc::internal, "closed-form energy mismatch");

    for (unsigned r = 1; r <= r_max; r++) {
      Int sig_r = (r % 2 == 0 || sigma == 1) ? 1 : -1;
      Int walks_cf =
          n * (pow_int(n, r - 1) +
               sig_r * (pow_int(R + sigma * l2, r) + (k - 1) * pow_int(sigma * l2, r)));
      require(walks_cf == inv.walks[r - 1], errc::internal, "closed-form walk count mismatch");
    }

    // (-sigma)^(q-1): q-1 is odd only in characteristic 2
    int sign = (semi->p == 2) ? -sigma : 1;
    Int trees_cf = sign * pow_int(R, to_u64_exp(s.q - 3, "tree exponent")) *
                   pow_int(l2 + 1, to_u64_exp(n, "tree exponent")) *
                   pow_int(l2, to_u64_exp((k - 1) * n, "tree exponent"));
    require(trees_cf == inv.spanning_trees, errc::internal, "closed-form tree count mismatch");
  }
  return inv;
}

IharaZeta ihara_zeta(const Spectrum& s) {
  require(s.exact(), errc::inexact_spectrum, "zeta needs an exact spectrum");
  require(s.n >= 3, errc::degenerate_degree, "zeta needs degree >= 3");
  IharaZeta z;
  z.exponent = exact_div(s.q * (2 - s.n), 2, "zeta exponent");
  z.n_minus_one = s.n - 1;
  for (const auto& e : s.entries) z.factors.emplace_back(e.lambda.value, e.mult);
  return z;
}

std::string IharaZeta::to_string() const {
  std::ostringstream os;
  os << "(1-u^2)^" << exponent.str() << " / [";
  for (size_t i = 0; i < factors.size(); i++) {
    const auto& [lam, mult] = factors[i];
    os << "(1";
    if (lam != 0) {
      os << (lam > 0 ? "-" : "+");
      if (Int(abs(lam)) != 1) os << Int(abs(lam)).str();
      os << "u";
    }
    os << "-";
    if (n_minus_one != 1) os << n_minus_one.str();
    os << "u^2)";
    if (mult != 1) os << "^" << mult.str();
    if (i + 1 < factors.size()) os << " ";
  }
  os << "]";
  return os.str();
}

bool is_ramanujan_spectral(const Spectrum& s) {
  require(is_connected(s), errc::disconnected, "Ramanujan test needs a connected graph");
  if (s.exact()) {
    Int best = 0;
    for (const auto& e : s.entries) {
      Int a = abs(e.lambda.value);
      if (a == s.n) continue;
      if (a > best) best = a;
    }
    return best * best <= 4 * (s.n - 1);
  }
  long double best = 0, n = ld(s.n);
  for (const auto& e : s.entries) {
    long double a = fabsl(e.lambda.approx);
    if (fabsl(a - n) <= 1e-6L) continue;
    best = std::max(best, a);
  }
  return best * best <= 4 * (n - 1) + 1e-6L;
}

nlohmann::ordered_json spectrum_to_json(const Spectrum& s) {
  nlohmann::ordered_json j;
  j["q"] = s.q.str();
  j["k"] = s.k;
  j["n"] = s.n.str();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : s.entries) {
    entries.push_back({eigval_str(e.lambda), e.mult.str()});
  }
  j["entries"] = std::move(entries);
  j["source"] = spectrum_source_name(s.source);
  j["exact"] = s.exact();
  return j;
}

std::string format_spectrum(const Spectrum& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.entries.size(); i++) {
    os << "[" << eigval_str(s.entries[i].lambda) << "]^" << s.entries[i].mult.str();
    if (i + 1 < s.entries.size()) os << ", ";
  }
  os << "}";
  return os.str();
}

}  // namespace gpgraph
