#include "gpgraph/families.hpp"

#include <algorithm>

#include "gpgraph/factor.hpp"

namespace gpgraph {

namespace {

// minimal t >= 1 with k | p^t + 1, scanning t <= bound; 0 if none
std::uint32_t minimal_t(std::uint64_t k, std::uint64_t p, std::uint32_t bound) {
  Int pt = 1;
  for (std::uint32_t t = 1; t <= bound; t++) {
    pt *= p;
    if ((pt + 1) % k == 0) return t;
  }
  return 0;
}

}  // namespace

bool SemiprimitiveInfo::standard_form() const {
  if (k == 2) return true;
  Int pl = 1;
  for (std::uint32_t l = 1; 2 * l <= m; l++) {
    pl *= p;
    if ((m / 2) % l == 0 && pl + 1 == k) return true;
  }
  return false;
}

bool is_semiprimitive_pair(std::uint64_t k, std::uint64_t p, std::uint32_t m) {
  if (k == 2) {
    if (p == 2) return false;
    return m % 2 == 0 || p % 4 == 1;  // q = 1 mod 4
  }
  if (k < 2 || m % 2 != 0) return false;
  std::uint32_t t = minimal_t(k, p, m / 2);
  if (t == 0 || (m / 2) % t != 0) return false;
  return Int(k) != pow_int(Int(p), m / 2) + 1;
}

std::optional<SemiprimitiveInfo> classify_semiprimitive(std::uint64_t k, std::uint64_t p,
                                                        std::uint32_t m) {
  if (m % 2 != 0 || !is_semiprimitive_pair(k, p, m)) return std::nullopt;
  SemiprimitiveInfo info;
  info.k = k;
  info.p = p;
  info.m = m;
  info.t = minimal_t(k, p, m / 2);
  require(info.t != 0 && (m / 2) % info.t == 0, errc::internal, "classify/minimal_t mismatch");
  info.s = (m / 2) / info.t;
  info.sigma = info.s % 2 == 1 ? 1 : -1;
  // sigma = +1 iff k | p^(m/2) + 1, sigma = -1 iff k | p^(m/2) - 1
  Int half = pow_int(Int(p), m / 2);
  require((half + info.sigma) % k == 0, errc::internal, "sigma divisibility note fails");
  return info;
}

std::vector<SemiprimitiveInfo> enumerate_semiprimitive_pairs(std::uint64_t p, std::uint32_t m) {
  require(m % 2 == 0, errc::odd_m, "enumeration needs even m");
  std::vector<std::uint64_t> ks;
  const Int excluded = pow_int(Int(p), m / 2) + 1;
  for (std::uint32_t t = 1; t <= m / 2; t++) {
    if ((m / 2) % t != 0) continue;
    Int pt1 = pow_int(Int(p), t) + 1;
    require(pt1 <= Int(std::uint64_t(1) << 62), errc::field_too_large,
            "p^t + 1 too large to enumerate divisors");
    for (std::uint64_t k : divisors(pt1.convert_to<std::uint64_t>())) {
      if (k < 2) continue;
      if (Int(k) == excluded) continue;
      ks.push_back(k);
    }
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::vector<SemiprimitiveInfo> out;
  out.reserve(ks.size());
  for (std::uint64_t k : ks) {
    auto info = classify_semiprimitive(k, p, m);
    require(info.has_value(), errc::internal, "enumerated pair fails classification");
    out.push_back(*info);
  }
  return out;
}

std::pair<Spectrum, Spectrum> semiprimitive_spectrum(std::uint64_t k, std::uint64_t p,
                                                     std::uint32_t m) {
  auto info = classify_semiprimitive(k, p, m);
  require(info.has_value(), errc::not_semiprimitive,
          "(" + std::to_string(k) + ", " + std::to_string(p) + "^" + std::to_string(m) + ")");
  const Int R = pow_int(Int(p), m / 2);
  const Int q = R * R;
  const Int n = exact_div(q - 1, Int(k), "n = (q-1)/k");
  const int sigma = info->sigma;
  const Int l1 = exact_div(sigma * Int(k - 1) * R - 1, Int(k), "lambda1");
  const Int l2 = -exact_div(sigma * R + 1, Int(k), "lambda2");

  Spectrum gamma = make_spectrum(q, n, k, SpectrumSource::closed_form,
                                 {{Eigval::of(n), 1}, {Eigval::of(l1), n}, {Eigval::of(l2), (k - 1) * n}});
  Spectrum comp = make_spectrum(q, (k - 1) * n, k, SpectrumSource::closed_form,
                                {{Eigval::of((k - 1) * n), 1},
                                 {Eigval::of((k - 1) * l2), n},
                                 {Eigval::of(-1 - l2), (k - 1) * n}});
  return {std::move(gamma), std::move(comp)};
}

bool ramanujan_classification(std::uint64_t k, std::uint64_t p, std::uint32_t m) {
  require(k >= 1 && (pow_int(Int(p), m) - 1) % k == 0, errc::not_a_divisor,
          "k must divide q-1");
  // non-semiprimitive pairs (including k = p^(m/2) + 1, whose graph is
  // disconnected) are never members of the Ramanujan families
  if (!is_semiprimitive_pair(k, p, m)) return false;
  if (k == 2) return true;  // classic Paley
  switch (k) {
    case 3:
      if (p == 2) return m >= 4;
      return p % 3 == 2 && m >= 2;
    case 4:
      if (p == 3) return m >= 4;
      return p % 4 == 3 && m >= 2;
    case 5:
      if (p == 2) return m >= 8 && m % 4 == 0;
      if (p % 5 == 2 || p % 5 == 3) return m >= 4 && m % 4 == 0;
      return p % 5 == 4 && m >= 2;
    default:
      return false;  // semiprimitive with k > 5 is never Ramanujan
  }
}

bool paley_is_ramanujan(std::uint64_t p, std::uint32_t m) {
  // lambda_max = (sqrt(q)+1)/2; the condition lambda_max^2 <= 4(n-1)
  // squares to 4q <= (7q-25)^2, valid without taking roots
  Int q = pow_int(Int(p), m);
  require(q % 4 == 1, errc::precondition_violated, "Paley graphs need q = 1 mod 4");
  if (7 * q <= 25) return false;
  return 4 * q <= (7 * q - 25) * (7 * q - 25);
}

bool complement_always_ramanujan_check(std::uint64_t k, std::uint64_t p, std::uint32_t m) {
  require(is_semiprimitive_pair(k, p, m), errc::not_semiprimitive,
          "(" + std::to_string(k) + ", " + std::to_string(p) + "^" + std::to_string(m) + ")");
  if (k == 2 && m % 2 == 1) {
    return paley_is_ramanujan(p, m);  // Paley graphs are self-complementary
  }
  auto [gamma, comp] = semiprimitive_spectrum(k, p, m);
  return is_ramanujan_spectral(comp);
}

DiophantineK3 solve_k3_diophantine(std::uint64_t p, std::uint32_t m) {
  require(p % 3 == 1, errc::precondition_violated, "needs p = 1 mod 3");
  require(m % 3 == 0, errc::precondition_violated, "needs 3 | m");
  const Int target = 4 * pow_int(Int(p), m / 3);
  std::vector<DiophantineK3> found;
  for (Int b = 1; 27 * b * b < target; b++) {
    Int a2 = target - 27 * b * b, a0;
    if (!is_square(a2, &a0)) continue;
    Int a = a0 % 3 == 1 ? a0 : -a0;
    if (((a % 3) + 3) % 3 != 1) continue;
    if (a0 % p == 0) continue;
    found.push_back({a, b});
  }
  require(!found.empty(), errc::no_solution, "no (a,b) representation; precondition violated?");
  require(found.size() == 1, errc::internal, "representation 4 q^(1/3) = a^2 + 27 b^2 not unique");
  return found.front();
}

DiophantineK4 solve_k4_diophantine(std::uint64_t p, std::uint32_t m) {
  require(p % 4 == 1, errc::precondition_violated, "needs p = 1 mod 4");
  require(m % 4 == 0, errc::precondition_violated, "needs 4 | m");
  const Int target = pow_int(Int(p), m / 2);
  std::vector<DiophantineK4> found;
  for (Int d = 1; 4 * d * d < target; d++) {
    Int c2 = target - 4 * d * d, c0;
    if (!is_square(c2, &c0)) continue;
    Int c = c0 % 4 == 1 ? c0 : -c0;
    if (((c % 4) + 4) % 4 != 1) continue;
    if (c0 % p == 0) continue;
    found.push_back({c, d});
  }
  require(!found.empty(), errc::no_solution, "no (c,d) representation; precondition violated?");
  require(found.size() == 1, errc::internal, "representation sqrt(q) = c^2 + 4 d^2 not unique");
  return found.front();
}

Spectrum spectrum_gamma3(std::uint64_t p, std::uint32_t m) {
  const Int q = pow_int(Int(p), m);
  require(exact_div(q - 1, Int(p - 1), "(q-1)/(p-1)") % 3 == 0, errc::precondition_violated,
          "needs 3 | (q-1)/(p-1)");
  require(q >= 5, errc::q_too_small, "needs q >= 5");
  const Int n = exact_div(q - 1, Int(3), "n = (q-1)/3");

  if (p % 3 == 1) {
    require(m % 3 == 0, errc::internal, "p = 1 mod 3 forces 3 | m here");
    auto [a, b] = solve_k3_diophantine(p, m);
    const Int croot = pow_int(Int(p), m / 3);
    Int l1 = exact_div(a * croot - 1, Int(3), "gamma3 eigenvalue");
    Int l2 = exact_div(-exact_div(a + 9 * b, Int(2), "(a+9b)/2") * croot - 1, Int(3),
                       "gamma3 eigenvalue");
    Int l3 = exact_div(-exact_div(a - 9 * b, Int(2), "(a-9b)/2") * croot - 1, Int(3),
                       "gamma3 eigenvalue");
    return make_spectrum(q, n, 3, SpectrumSource::closed_form,
                         {{Eigval::of(n), 1},
                          {Eigval::of(l1), n},
                          {Eigval::of(l2), n},
                          {Eigval::of(l3), n}});
  }

  require(m % 2 == 0, errc::internal, "p = 2 mod 3 forces even m here");
  const Int R = pow_int(Int(p), m / 2);
  if (m % 4 == 0) {
    return make_spectrum(q, n, 3, SpectrumSource::closed_form,
                         {{Eigval::of(n), 1},
                          {Eigval::of(exact_div(R - 1, Int(3), "gamma3")), 2 * n},
                          {Eigval::of(exact_div(-2 * R - 1, Int(3), "gamma3")), n}});
  }
  return make_spectrum(q, n, 3, SpectrumSource::closed_form,
                       {{Eigval::of(n), 1},
                        {Eigval::of(exact_div(2 * R - 1, Int(3), "gamma3")), n},
                        {Eigval::of(exact_div(-R - 1, Int(3), "gamma3")), 2 * n}});
}

Spectrum spectrum_gamma4(std::uint64_t p, std::uint32_t m) {
  const Int q = pow_int(Int(p), m);
  require(exact_div(q - 1, Int(p - 1), "(q-1)/(p-1)") % 4 == 0, errc::precondition_violated,
          "needs 4 | (q-1)/(p-1)");
  require(q >= 5, errc::q_too_small, "needs q >= 5");
  require(q != 9, errc::excluded_q, "q = 9 gives k = p^(m/2) + 1, a disconnected graph");
  const Int n = exact_div(q - 1, Int(4), "n = (q-1)/4");

  if (p % 4 == 1) {
    require(m % 4 == 0, errc::internal, "p = 1 mod 4 forces 4 | m here");
    auto [c, d] = solve_k4_diophantine(p, m);
    const Int R = pow_int(Int(p), m / 2);
    const Int F = pow_int(Int(p), m / 4);
    Int l1 = exact_div(R + 4 * d * F - 1, Int(4), "gamma4 eigenvalue");
    Int l2 = exact_div(R - 4 * d * F - 1, Int(4), "gamma4 eigenvalue");
    Int l3 = exact_div(-R + 2 * c * F - 1, Int(4), "gamma4 eigenvalue");
    Int l4 = exact_div(-R - 2 * c * F - 1, Int(4), "gamma4 eigenvalue");
    return make_spectrum(q, n, 4, SpectrumSource::closed_form,
                         {{Eigval::of(n), 1},
                          {Eigval::of(l1), n},
                          {Eigval::of(l2), n},
                          {Eigval::of(l3), n},
                          {Eigval::of(l4), n}});
  }

  require(m % 2 == 0, errc::internal, "p = 3 mod 4 forces even m here");
  const Int R = pow_int(Int(p), m / 2);
  if (m % 4 == 0) {
    return make_spectrum(q, n, 4, SpectrumSource::closed_form,
                         {{Eigval::of(n), 1},
                          {Eigval::of(exact_div(R - 1, Int(4), "gamma4")), 3 * n},
                          {Eigval::of(exact_div(-3 * R - 1, Int(4), "gamma4")), n}});
  }
  return make_spectrum(q, n, 4, SpectrumSource::closed_form,
                       {{Eigval::of(n), 1},
                        {Eigval::of(exact_div(3 * R - 1, Int(4), "gamma4")), n},
                        {Eigval::of(exact_div(-R - 1, Int(4), "gamma4")), 3 * n}});
}

const std::array<ExceptionalRecord, 11>& exceptional_records() {
  static const std::array<ExceptionalRecord, 11> records = {{
      {11, 3, 5, 2, 5, 1},
      {19, 5, 9, 4, 9, 1},
      {35, 3, 12, 5, 17, 1},
      {37, 7, 9, 4, 9, 1},
      {43, 11, 7, 3, 21, 1},
      {67, 17, 33, 16, 33, 1},
      {107, 3, 53, 25, 53, 1},
      {133, 5, 18, 8, 33, -1},
      {163, 41, 81, 40, 81, 1},
      {323, 3, 144, 70, 161, 1},
      {499, 5, 249, 123, 249, 1},
  }};
  return records;
}

ExceptionalData exceptional_spectrum(const ExceptionalRecord& rec) {
  bool known = false;
  for (const auto& r : exceptional_records()) {
    known |= r.k == rec.k && r.p == rec.p && r.m == rec.m && r.theta == rec.theta &&
             r.t == rec.t && r.eps == rec.eps;
  }
  require(known, errc::precondition_violated, "not one of the eleven exceptional records");

  ExceptionalData out;
  out.rec = rec;
  const Int p = rec.p;
  out.q = pow_int(p, rec.m);
  out.n = exact_div(out.q - 1, Int(rec.k), "n = (q-1)/k");

  const Int block = (p - 1) * pow_int(p, rec.theta - 1);
  out.w1 = exact_div(block * (pow_int(p, rec.m - rec.theta) - rec.eps * Int(rec.t)), Int(rec.k),
                     "w1 division by k");
  out.w2 = out.w1 + rec.eps * block;
  out.lambda1 = out.n - exact_div(p * out.w1, p - 1, "lambda1 bridge division");
  out.lambda2 = out.n - exact_div(p * out.w2, p - 1, "lambda2 bridge division");

  const Int sum = out.lambda1 + out.lambda2;
  const Int diff = out.lambda1 - out.lambda2;
  out.srg.v = out.q;
  out.srg.n = out.n;
  out.srg.d = out.n - exact_div(diff * diff - sum * sum, Int(4), "d division by 4");
  out.srg.e = out.srg.d + sum;

  // frequencies solve m1 + m2 = q - 1 and n + m1 l1 + m2 l2 = 0 exactly
  out.m1 = exact_div(-out.n - (out.q - 1) * out.lambda2, diff, "multiplicity division");
  out.m2 = out.q - 1 - out.m1;
  require(out.m1 > 0 && out.m2 > 0, errc::internal, "nonpositive multiplicity");

  out.spectrum = make_spectrum(out.q, out.n, rec.k, SpectrumSource::closed_form,
                               {{Eigval::of(out.n), 1},
                                {Eigval::of(out.lambda1), out.m1},
                                {Eigval::of(out.lambda2), out.m2}});
  require(is_connected(out.spectrum), errc::internal, "exceptional graphs are connected");

  out.weights.p = rec.p;
  out.weights.m = rec.m;
  out.weights.k = rec.k;
  out.weights.N = rec.k;
  out.weights.n = out.n;
  out.weights.entries = {{Int(0), Int(1)}, {out.w1, out.m1}, {out.w2, out.m2}};
  std::sort(out.weights.entries.begin(), out.weights.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  validate_weights(out.weights);
  return out;
}

}  // namespace gpgraph
