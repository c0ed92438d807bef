#include "gpgraph/adjacency.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>

#include "gpgraph/factor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gpgraph {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_packed(u64 a, u64 b, u64 p, std::uint32_t m) {
  if (p == 2) return a ^ b;
  u64 out = 0, mul = 1;
  for (std::uint32_t j = 0; j < m; j++) {
    u64 da = a % p, db = b % p;
    u64 s = da + db;
    if (s >= p) s -= p;
    out += s * mul;
    mul *= p;
    a /= p;
    b /= p;
  }
  return out;
}

struct CharsumTables {
  std::vector<double> cos_tab, sin_tab;
  explicit CharsumTables(u64 p) : cos_tab(p), sin_tab(p) {
    for (u64 a = 0; a < p; a++) {
      double ang = 2.0 * M_PI * (double)a / (double)p;
      cos_tab[a] = std::cos(ang);
      sin_tab[a] = std::sin(ang);
    }
  }
};

// lambda_gamma for gamma = omega^g: sum over R_k of zeta_p^Tr(gamma y)
double charsum_one(const FieldCtx& ctx, u64 k, u64 g, const CharsumTables& tab) {
  const u64 qm1 = ctx.q() - 1;
  const u64 n = qm1 / k;
  u64 idx = g;
  if (ctx.p() == 2) {
    u64 ones = 0;
    for (u64 i = 0; i < n; i++) {
      ones += ctx.trace_of_log(idx);
      idx += k;
      if (idx >= qm1) idx -= qm1;
    }
    return (double)((std::int64_t)n - 2 * (std::int64_t)ones);
  }
  double re = 0, im = 0;
  for (u64 i = 0; i < n; i++) {
    u64 t = ctx.trace_of_log(idx);
    re += tab.cos_tab[t];
    im += tab.sin_tab[t];
    idx += k;
    if (idx >= qm1) idx -= qm1;
  }
  require(std::fabs(im) < 1e-6, errc::internal, "character sum not real under simplicity");
  return re;
}

}  // namespace

AdjacencyGraph build_adjacency(const FieldCtx& ctx, u64 k, u64 oracle_cap) {
  const u64 q = ctx.q(), p = ctx.p();
  require(q <= oracle_cap, errc::field_too_large,
          "q = " + std::to_string(q) + " exceeds the oracle cap " + std::to_string(oracle_cap));
  require(k >= 1 && (q - 1) % k == 0, errc::not_a_divisor,
          "k = " + std::to_string(k) + " does not divide q-1");
  require(q % 2 == 0 || ((q - 1) / 2) % k == 0, errc::directed_graph,
          "connection set is not symmetric: need q even or k | (q-1)/2");

  AdjacencyGraph g;
  g.ctx = &ctx;
  g.k = k;
  g.q = q;
  g.n = (q - 1) / k;
  g.words_per_row = (q + 63) / 64;
  g.bits.assign(q * g.words_per_row, 0);
  g.rk_packed.reserve(g.n);
  for (u64 i = 0; i < g.n; i++) g.rk_packed.push_back((std::uint32_t)ctx.packed(ctx.pow(ctx.omega(), i * k)));

  for (u64 u = 0; u < q; u++) {
    u64* row = g.bits.data() + u * g.words_per_row;
    for (u64 y : g.rk_packed) {
      u64 v = add_packed(u, y, p, ctx.m());
      row[v / 64] |= u64(1) << (v % 64);
    }
  }
  return g;
}

std::vector<double> charsum_eigenvalues_serial(const AdjacencyGraph& g) {
  const FieldCtx& ctx = *g.ctx;
  CharsumTables tab(ctx.p());
  std::vector<double> vals(g.q);
  vals[0] = (double)g.n;  // principal character
  for (u64 gidx = 0; gidx + 1 < g.q; gidx++) {
    vals[gidx + 1] = charsum_one(ctx, g.k, gidx, tab);
  }
  return vals;
}

std::vector<double> charsum_eigenvalues_omp(const AdjacencyGraph& g) {
  const FieldCtx& ctx = *g.ctx;
  CharsumTables tab(ctx.p());
  std::vector<double> vals(g.q);
  vals[0] = (double)g.n;
#pragma omp parallel for schedule(static)
  for (std::int64_t gidx = 0; gidx < (std::int64_t)(g.q - 1); gidx++) {
    vals[gidx + 1] = charsum_one(ctx, g.k, (u64)gidx, tab);
  }
  return vals;
}

extern "C" void openblas_set_num_threads(int);

std::vector<double> eigensolver_eigenvalues(const AdjacencyGraph& g) {
  // the verification sweeps parallelize across graphs; a spinning BLAS pool
  // would fight them for cores
  static std::once_flag blas_threads_flag;
  std::call_once(blas_threads_flag, [] { openblas_set_num_threads(1); });

  std::vector<double> A(g.q * g.q, 0.0);
  for (u64 u = 0; u < g.q; u++) {
    for (u64 v = 0; v < g.q; v++) {
      if (g.adjacent(u, v)) A[u * g.q + v] = 1.0;
    }
  }
  std::vector<double> vals(g.q);
  int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', (lapack_int)g.q, A.data(),
                            (lapack_int)g.q, vals.data());
  require(info == 0, errc::internal, "eigensolver failed: dsyevd info = " + std::to_string(info));
  return vals;  // ascending
}

namespace {

CommonNeighborStats common_neighbor_impl(const AdjacencyGraph& g, bool parallel) {
  const u64 q = g.q;
  const std::size_t W = g.words_per_row;
  long long e_val = -1, d_val = -1;
  bool ok = true;

#pragma omp parallel if (parallel)
  {
    long long le = -1, ld = -1;
    bool lok = true;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t u = 0; u < (std::int64_t)q; u++) {
      const u64* ru = g.row((u64)u);
      for (u64 v = (u64)u + 1; v < q; v++) {
        const u64* rv = g.row(v);
        u64 cnt = 0;
        for (std::size_t w = 0; w < W; w++) cnt += (u64)__builtin_popcountll(ru[w] & rv[w]);
        long long* slot = g.adjacent((u64)u, v) ? &le : &ld;
        if (*slot == -1) {
          *slot = (long long)cnt;
        } else if (*slot != (long long)cnt) {
          lok = false;
        }
      }
    }
#pragma omp critical
    {
      if (!lok) ok = false;
      if (le != -1) {
        if (e_val == -1) e_val = le;
        else if (e_val != le) ok = false;
      }
      if (ld != -1) {
        if (d_val == -1) d_val = ld;
        else if (d_val != ld) ok = false;
      }
    }
  }

  CommonNeighborStats st;
  st.constant = ok;
  st.e = e_val;
  st.d = d_val;
  return st;
}

}  // namespace

CommonNeighborStats common_neighbor_stats_serial(const AdjacencyGraph& g) {
  return common_neighbor_impl(g, false);
}
CommonNeighborStats common_neighbor_stats_omp(const AdjacencyGraph& g) {
  return common_neighbor_impl(g, true);
}

namespace {

std::vector<u64> weight_histogram_impl(const FieldCtx& ctx, u64 k, bool parallel) {
  const u64 qm1 = ctx.q() - 1;
  const u64 subgroup_ratio = [&] {
    // N = gcd((q-1)/(p-1), k) without big integers: q-1 and p-1 fit u64
    u64 a = qm1 / (ctx.p() - 1), b = k;
    while (b) {
      u64 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }();
  const u64 n = qm1 / subgroup_ratio;
  std::vector<u64> hist(n + 1, 0);
  hist[0] = 1;  // gamma = 0

#pragma omp parallel if (parallel)
  {
    std::vector<u64> local(n + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t g = 0; g < (std::int64_t)qm1; g++) {
      u64 w = 0, idx = (u64)g;
      for (u64 i = 0; i < n; i++) {
        w += ctx.trace_of_log(idx) != 0;
        idx += k;
        if (idx >= qm1) idx -= qm1;
      }
      local[w]++;
    }
#pragma omp critical
    for (u64 w = 0; w <= n; w++) hist[w] += local[w];
  }
  return hist;
}

}  // namespace

std::vector<u64> weight_histogram_serial(const FieldCtx& ctx, u64 k) {
  return weight_histogram_impl(ctx, k, false);
}
std::vector<u64> weight_histogram_omp(const FieldCtx& ctx, u64 k) {
  return weight_histogram_impl(ctx, k, true);
}

Spectrum oracle_spectrum(const AdjacencyGraph& g, double tol) {
  std::vector<double> by_chars = charsum_eigenvalues_omp(g);
  std::vector<double> by_solver = eigensolver_eigenvalues(g);
  std::sort(by_chars.begin(), by_chars.end());
  std::sort(by_solver.begin(), by_solver.end());
  for (u64 i = 0; i < g.q; i++) {
    require(std::fabs(by_chars[i] - by_solver[i]) <= tol, errc::oracle_disagreement,
            "character sums and eigensolver disagree at index " + std::to_string(i) + ": " +
                std::to_string(by_chars[i]) + " vs " + std::to_string(by_solver[i]));
  }

  // group the (more accurate) character sums, then round groups near integers
  std::vector<std::pair<Eigval, Int>> raw;
  u64 i = 0;
  while (i < g.q) {
    u64 j = i;
    double rep = by_chars[i];
    // character sums are accurate to ~1e-12; distinct algebraic values stay apart
    while (j < g.q && by_chars[j] - rep <= 1e-8) j++;
    double mean = std::accumulate(by_chars.begin() + i, by_chars.begin() + j, 0.0) / (double)(j - i);
    double rounded = std::round(mean);
    Eigval ev = std::fabs(mean - rounded) <= tol ? Eigval::of(Int((long long)rounded))
                                                 : Eigval::inexact_of(mean);
    raw.emplace_back(ev, Int(j - i));
    i = j;
  }
  return make_spectrum(Int(g.q), Int(g.n), g.k, SpectrumSource::oracle, std::move(raw));
}

IntPoly characteristic_polynomial(const Spectrum& s) {
  require(s.exact(), errc::inexact_spectrum, "characteristic polynomial needs exact eigenvalues");
  std::vector<std::pair<Int, Int>> roots;
  roots.reserve(s.entries.size());
  for (const auto& e : s.entries) roots.emplace_back(e.lambda.value, e.mult);
  return poly_from_roots(roots);
}

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// determinant of the Laplacian with the last row and column removed, mod pr
u64 laplacian_minor_det_mod(const AdjacencyGraph& g, u64 pr) {
  const u64 N = g.q - 1;
  std::vector<u64> M(N * N);
  for (u64 r = 0; r < N; r++) {
    for (u64 c = 0; c < N; c++) {
      u64 val;
      if (r == c) {
        val = g.n % pr;
      } else {
        val = g.adjacent(r, c) ? pr - 1 : 0;
      }
      M[r * N + c] = val;
    }
  }
  u64 det = 1;
  bool negate = false;
  for (u64 col = 0; col < N; col++) {
    u64 pivot = col;
    while (pivot < N && M[pivot * N + col] == 0) pivot++;
    if (pivot == N) return 0;
    if (pivot != col) {
      for (u64 c = col; c < N; c++) std::swap(M[pivot * N + c], M[col * N + c]);
      negate = !negate;
    }
    const u64 pv = M[col * N + col];
    det = mulmod_u64(det, pv, pr);
    const u64 pv_inv = powmod_u64(pv, pr - 2, pr);
    for (u64 r = col + 1; r < N; r++) {
      u64 factor = M[r * N + col];
      if (!factor) continue;
      factor = mulmod_u64(factor, pv_inv, pr);
      for (u64 c = col; c < N; c++) {
        u64 sub = mulmod_u64(factor, M[col * N + c], pr);
        u64& cell = M[r * N + c];
        cell = cell >= sub ? cell - sub : cell + pr - sub;
      }
    }
  }
  return negate ? (pr - det) % pr : det;
}

}  // namespace

bool kirchhoff_matches(const AdjacencyGraph& g, const Int& expected_trees) {
  // enough 62-bit primes so their product covers both the Hadamard bound of
  // the minor and the expected value
  Int hadamard_bits = Int(g.q - 1) * (msb(Int(g.n) + 1) + 1);
  Int expected_bits = expected_trees == 0 ? Int(1) : Int(msb(Int(abs(expected_trees))) + 1);
  Int need_bits = (hadamard_bits > expected_bits ? hadamard_bits : expected_bits) + 2;
  u64 count = ((need_bits + 60) / 61).convert_to<u64>();

  u64 pr = (u64(1) << 61);
  for (u64 taken = 0; taken < count;) {
    pr++;
    if (!is_prime_u64(pr)) continue;
    taken++;
    u64 want = (expected_trees % pr).convert_to<u64>();
    if (laplacian_minor_det_mod(g, pr) != want) return false;
  }
  return true;
}

}  // namespace gpgraph
