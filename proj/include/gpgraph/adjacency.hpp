#pragma once

#include <cstdint>
#include <vector>

#include "gpgraph/bigint.hpp"
#include "gpgraph/field.hpp"
#include "gpgraph/polynomial.hpp"
#include "gpgraph/spectrum.hpp"

namespace gpgraph {

// Dense Cayley graph on F_q with connection set R_k, rows as bitsets.
// Vertices are indexed by packed field representation; the context must
// outlive the graph.
struct AdjacencyGraph {
  const FieldCtx* ctx = nullptr;
  std::uint64_t k = 0;
  std::uint64_t q = 0;
  std::uint64_t n = 0;  // degree (q-1)/k
  std::size_t words_per_row = 0;
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> rk_packed;  // the k-th powers, packed

  bool adjacent(std::uint64_t u, std::uint64_t v) const {
    return (bits[u * words_per_row + v / 64] >> (v % 64)) & 1;
  }
  const std::uint64_t* row(std::uint64_t u) const { return bits.data() + u * words_per_row; }
};

AdjacencyGraph build_adjacency(const FieldCtx& ctx, std::uint64_t k,
                               std::uint64_t oracle_cap = std::uint64_t(1) << 12);

// ---- kernels: OpenMP versions with serial references kept for testing ----

// Route (i): per-character sums over the connection set, one value per vertex.
// The parallel version splits over characters; the inner summation order is
// identical, so both return bitwise-equal results.
std::vector<double> charsum_eigenvalues_serial(const AdjacencyGraph& g);
std::vector<double> charsum_eigenvalues_omp(const AdjacencyGraph& g);

// Route (ii): dense symmetric eigensolve of the adjacency matrix.
std::vector<double> eigensolver_eigenvalues(const AdjacencyGraph& g);

struct CommonNeighborStats {
  bool constant = false;  // both counts constant over their pair classes
  Int e = -1;             // common neighbors of adjacent pairs
  Int d = -1;             // of distinct non-adjacent pairs
};

CommonNeighborStats common_neighbor_stats_serial(const AdjacencyGraph& g);
CommonNeighborStats common_neighbor_stats_omp(const AdjacencyGraph& g);

// weight tallies of all q trace codewords (full enumeration kernel); index =
// weight, value = frequency
std::vector<std::uint64_t> weight_histogram_serial(const FieldCtx& ctx, std::uint64_t k);
std::vector<std::uint64_t> weight_histogram_omp(const FieldCtx& ctx, std::uint64_t k);

// ---- oracle assembly ----

// Both routes, agreement within tol, integer rounding where within tol.
Spectrum oracle_spectrum(const AdjacencyGraph& g, double tol = 1e-6);

// characteristic polynomial expanded from a fully exact spectrum
IntPoly characteristic_polynomial(const Spectrum& s);

// Exact check that the spanning-tree count from the spectral side equals a
// cofactor of the Laplacian; the determinant is evaluated by CRT over enough
// 62-bit primes to cover the Hadamard bound.
bool kirchhoff_matches(const AdjacencyGraph& g, const Int& expected_trees);

}  // namespace gpgraph
