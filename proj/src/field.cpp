#include "gpgraph/field.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpgraph/factor.hpp"

namespace gpgraph {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// dense coefficient vectors over F_p, constant term first, degree < deg(f)
struct PolyMod {
  u64 p;
  std::vector<u32> f;  // monic modulus, c_0..c_m

  std::uint32_t m() const { return (u32)f.size() - 1; }

  std::vector<u32> reduce(std::vector<u32> a) const {
    const u32 deg = m();
    for (size_t i = a.size(); i-- > deg;) {
      u64 c = a[i];
      if (c == 0) continue;
      a[i] = 0;
      for (u32 j = 0; j < deg; j++) {
        u64 sub = c * f[j] % p;
        a[i - deg + j] = (u32)((a[i - deg + j] + p - sub) % p);
      }
    }
    a.resize(deg);
    return a;
  }

  std::vector<u32> mul(const std::vector<u32>& a, const std::vector<u32>& b) const {
    std::vector<u32> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); j++) {
        r[i + j] = (u32)((r[i + j] + (u64)a[i] * b[j]) % p);
      }
    }
    return reduce(std::move(r));
  }

  std::vector<u32> powmod(std::vector<u32> base, u64 e) const {
    std::vector<u32> r(m(), 0);
    r[0] = 1;
    base = reduce(std::move(base));
    while (e) {
      if (e & 1) r = mul(r, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return r;
  }

  static std::vector<u32> x_poly(u32 deg) {
    std::vector<u32> v(deg + 1, 0);
    v[deg] = 1;
    return v;
  }
};

bool poly_is_one(const std::vector<u32>& a) {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); i++)
    if (a[i]) return false;
  return true;
}

bool poly_is_x(const std::vector<u32>& a) {
  if (a.size() < 2 || a[0] != 0 || a[1] != 1) return false;
  for (size_t i = 2; i < a.size(); i++)
    if (a[i]) return false;
  return true;
}

int poly_deg(const std::vector<u32>& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i]) return (int)i;
  return -1;
}

// gcd of a with the (monic) modulus f, over F_p
std::vector<u32> poly_gcd_with_modulus(u64 p, std::vector<u32> f, std::vector<u32> a) {
  auto inv_mod_p = [&](u64 v) {
    u64 r = 1, b = v % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  while (true) {
    int da = poly_deg(a);
    if (da < 0) return f;
    // f mod a
    u64 lead_inv = inv_mod_p(a[da]);
    std::vector<u32> r = f;
    for (int i = poly_deg(r); i >= da; i = poly_deg(r)) {
      u64 c = r[i] * lead_inv % p;
      for (int j = 0; j <= da; j++) {
        u64 sub = c * a[j] % p;
        r[i - da + j] = (u32)((r[i - da + j] + p - sub) % p);
      }
    }
    f = std::move(a);
    a = std::move(r);
  }
}

bool is_irreducible(u64 p, const std::vector<u32>& f) {
  u32 m = (u32)f.size() - 1;
  if (m == 1) return true;
  PolyMod pm{p, f};
  // x^(p^m) == x, and gcd(x^(p^(m/r)) - x, f) == 1 for prime r | m
  std::vector<std::vector<u32>> frob_pow(m + 1);  // x^(p^j) mod f
  frob_pow[0] = pm.reduce(pm.x_poly(1));
  for (u32 j = 1; j <= m; j++) frob_pow[j] = pm.powmod(frob_pow[j - 1], p);
  if (!poly_is_x(frob_pow[m])) return false;
  for (auto [r, e] : factorize(m)) {
    std::vector<u32> g = frob_pow[m / r];
    g[1] = (u32)((g[1] + p - 1) % p);  // subtract x
    auto d = poly_gcd_with_modulus(p, f, g);
    if (poly_deg(d) != 0) return false;
  }
  return true;
}

bool is_primitive_poly(u64 p, const std::vector<u32>& f, u64 q,
                       const std::vector<std::pair<u64, int>>& qm1_factors) {
  if (!is_irreducible(p, f)) return false;
  PolyMod pm{p, f};
  for (auto [r, e] : qm1_factors) {
    auto g = pm.powmod(pm.x_poly(1), (q - 1) / r);
    if (poly_is_one(g)) return false;
  }
  return true;
}

// Candidates ordered lexicographically with the constant term compared first.
std::vector<u32> candidate_from_rank(u64 p, u32 m, u64 rank) {
  std::vector<u32> f(m + 1, 0);
  f[m] = 1;
  for (u32 j = 0; j < m; j++) {
    u64 weight = 1;
    for (u32 t = j + 1; t < m; t++) weight *= p;
    f[j] = (u32)(rank / weight % p);
  }
  return f;
}

std::optional<std::filesystem::path> cache_file() {
  const char* dir = std::getenv("GPGRAPH_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return std::nullopt;
  return std::filesystem::path(dir) / "moduli.txt";
}

std::optional<std::vector<u32>> cache_lookup(u64 p, u32 m) {
  auto path = cache_file();
  if (!path) return std::nullopt;
  std::ifstream in(*path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream iss(line);
    u64 fp;
    u32 fm;
    if (!(iss >> fp >> fm)) continue;
    if (fp != p || fm != m) continue;
    std::vector<u32> f(m + 1);
    bool ok = true;
    for (auto& c : f)
      if (!(iss >> c)) {
        ok = false;
        break;
      }
    if (ok) return f;
  }
  return std::nullopt;
}

void cache_store(u64 p, u32 m, const std::vector<u32>& f) {
  auto path = cache_file();
  if (!path) return;
  if (cache_lookup(p, m)) return;
  std::ofstream out(*path, std::ios::app);
  if (!out) return;
  // one buffered write per record; concurrent writers stay line-atomic in
  // practice, and a mangled line is simply ignored and recomputed
  std::ostringstream line;
  line << p << ' ' << m;
  for (u32 c : f) line << ' ' << c;
  line << '\n';
  out << line.str();
}

}  // namespace

FieldCtx build_field(u64 p, u32 m, const FieldOptions& opts) {
  require(is_prime_u64(p), errc::not_prime, "p = " + std::to_string(p));
  require(m >= 1, errc::internal, "m must be positive");

  u64 q = 1;
  for (u32 i = 0; i < m; i++) {
    require(q <= opts.table_cap / p, errc::field_too_large,
            "p^m exceeds construction cap " + std::to_string(opts.table_cap));
    q *= p;
  }
  require(q <= opts.table_cap, errc::field_too_large,
          "q = " + std::to_string(q) + " exceeds cap " + std::to_string(opts.table_cap));

  auto qm1_factors = factorize(q - 1);

  std::vector<u32> modulus;
  bool from_cache = false;
  if (opts.use_cache) {
    if (auto f = cache_lookup(p, m); f && is_primitive_poly(p, *f, q, qm1_factors)) {
      modulus = *f;
      from_cache = true;
    }
  }
  if (modulus.empty()) {
    // (-1)^m f(0) is the norm of the root, so it must be a primitive root
    // mod p; this rejects whole constant-term blocks cheaply
    std::vector<bool> c0_ok(p, false);
    auto pm1_factors = factorize(p - 1);
    for (u64 g = 1; g < p; g++) {
      bool prim_root = true;
      for (auto [r, e] : pm1_factors) {
        u64 x = 1, b = g, ee = (p - 1) / r;
        while (ee) {
          if (ee & 1) x = x * b % p;
          b = b * b % p;
          ee >>= 1;
        }
        if (x == 1) prim_root = false;
      }
      if (!prim_root) continue;
      c0_ok[m % 2 == 0 ? g : (p - g) % p] = true;
    }

    u64 total = 1;
    for (u32 i = 0; i < m; i++) total *= p;
    for (u64 rank = 0; rank < total; rank++) {
      auto f = candidate_from_rank(p, m, rank);
      if (f[0] == 0 || !c0_ok[f[0]]) continue;
      if (is_primitive_poly(p, f, q, qm1_factors)) {
        modulus = std::move(f);
        break;
      }
    }
    require(!modulus.empty(), errc::no_primitive_polynomial,
            "no primitive polynomial of degree " + std::to_string(m) + " over F_" + std::to_string(p));
    if (opts.use_cache && !from_cache) cache_store(p, m, modulus);
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.q_ = q;
  ctx.modulus_ = modulus;

  // antilog table by repeated multiplication with x, reduced by the modulus
  ctx.antilog_.resize(q - 1);
  ctx.log_.assign(q, 0);
  std::vector<u32> cur(m, 0);
  cur[0] = 1;
  auto pack = [&](const std::vector<u32>& v) {
    u64 acc = 0;
    for (u32 j = m; j-- > 0;) acc = acc * p + v[j];
    return acc;
  };
  for (u64 i = 0; i < q - 1; i++) {
    u64 pk = pack(cur);
    ctx.antilog_[i] = (u32)pk;
    ctx.log_[pk] = (u32)i;
    // cur *= x
    u32 carry = cur[m - 1];
    for (u32 j = m; j-- > 1;) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry) {
      for (u32 j = 0; j < m; j++) {
        u64 sub = (u64)carry * modulus[j] % p;
        cur[j] = (u32)((cur[j] + p - sub) % p);
      }
    }
  }
  require(pack(cur) == 1, errc::internal, "omega does not have order q-1");

  // Tr(x^j) for j < m are the power sums of the modulus roots (Newton's identities)
  ctx.trace_basis_.assign(m, 0);
  ctx.trace_basis_[0] = (std::uint32_t)(m % p);
  for (u32 j = 1; j < m; j++) {
    u64 acc = (u64)(j % p) * modulus[m - j] % p;
    for (u32 i = 1; i < j; i++) acc = (acc + (u64)modulus[m - i] * ctx.trace_basis_[j - i]) % p;
    ctx.trace_basis_[j] = (std::uint32_t)((p - acc % p) % p);
  }

  ctx.trace_log_.resize(q - 1);
  for (u64 i = 0; i < q - 1; i++) {
    u64 v = ctx.antilog_[i], acc = 0;
    for (u32 j = 0; j < m; j++) {
      acc += v % p * ctx.trace_basis_[j];
      v /= p;
    }
    ctx.trace_log_[i] = (std::uint32_t)(acc % p);
  }

  // Zech logarithms: zech[z] = log(1 + omega^z), with q-1 marking a zero sum
  ctx.zech_.resize(q - 1);
  for (u64 z = 0; z < q - 1; z++) {
    u64 v = ctx.antilog_[z];
    u64 c0 = v % p;
    u64 sum = v - c0 + (c0 + 1) % p;
    ctx.zech_[z] = sum == 0 ? (u32)(q - 1) : ctx.log_[sum];
  }

  return ctx;
}

FieldElement FieldCtx::element_from_packed(u64 packed) const {
  if (packed == 0) return FieldElement::zero();
  require(packed < q_, errc::internal, "packed value out of range");
  return FieldElement::from_log(log_[packed]);
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  if (a.is_zero) return b;
  if (b.is_zero) return a;
  if (a.log > b.log) std::swap(a, b);
  u32 z = b.log - a.log;
  u32 zl = zech_[z];
  if (zl == q_ - 1) return FieldElement::zero();
  u64 s = (u64)a.log + zl;
  if (s >= q_ - 1) s -= q_ - 1;
  return FieldElement::from_log((u32)s);
}

FieldElement FieldCtx::neg(FieldElement a) const {
  if (a.is_zero || p_ == 2) return a;
  u64 s = (u64)a.log + (q_ - 1) / 2;
  if (s >= q_ - 1) s -= q_ - 1;
  return FieldElement::from_log((u32)s);
}

FieldElement FieldCtx::pow(FieldElement a, u64 e) const {
  if (a.is_zero) return e == 0 ? one() : FieldElement::zero();
  u64 lg = (unsigned __int128)a.log * e % (q_ - 1);
  return FieldElement::from_log((u32)lg);
}

std::uint32_t FieldCtx::trace_of_packed(u64 packed) const {
  u64 acc = 0;
  for (u32 j = 0; j < m_; j++) {
    acc += packed % p_ * trace_basis_[j];
    packed /= p_;
  }
  return (std::uint32_t)(acc % p_);
}

std::uint32_t trace(const FieldCtx& ctx, FieldElement x) {
  return x.is_zero ? 0 : ctx.trace_log_[x.log];
}

std::uint64_t power_coset_index(const FieldCtx& ctx, FieldElement x, u64 N) {
  require(!x.is_zero, errc::zero_element, "coset index of zero");
  require(N >= 1 && (ctx.q() - 1) % N == 0, errc::not_a_divisor,
          "N = " + std::to_string(N) + " does not divide q-1");
  return x.log % N;
}

bool is_primitive_divisor(u64 p, std::uint32_t m, const Int& k) {
  Int q = pow_int(Int(p), m);
  require(k > 0 && (q - 1) % k == 0, errc::not_a_divisor,
          "k = " + k.str() + " does not divide p^m - 1");
  Int n = (q - 1) / k;
  Int pa = 1;
  for (std::uint32_t a = 1; a < m; a++) {
    pa *= p;
    if ((pa - 1) % n == 0) return false;
  }
  return true;
}

}  // namespace gpgraph
