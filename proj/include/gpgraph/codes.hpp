#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gpgraph/bigint.hpp"
#include "gpgraph/field.hpp"
#include "gpgraph/spectrum.hpp"

#include "json.hpp"

namespace gpgraph {

struct CodeSpec {
  std::uint64_t p;
  std::uint32_t m;
  std::uint64_t k;
  std::uint64_t N;  // gcd((q-1)/(p-1), k)
  Int q;
  Int n;  // code length (q-1)/N
  std::uint32_t dimension;
};

CodeSpec code_params(std::uint64_t p, std::uint32_t m, std::uint64_t k);

struct WeightDistribution {
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  std::uint64_t k = 0;
  std::uint64_t N = 0;
  Int n;
  std::vector<std::pair<Int, Int>> entries;  // (weight, frequency), weight ascending

  Int total() const;
  std::size_t nonzero_weight_count() const;
  Int min_nonzero_weight() const;
  Int max_weight() const;
};

void validate_weights(const WeightDistribution& wd);

// coordinates Tr(gamma * omega^(k i)) for i = 0..n-1 with n = (q-1)/N
std::vector<std::uint32_t> codeword(const FieldCtx& ctx, FieldElement gamma, std::uint64_t k);

enum class EnumerationMode {
  coset_reps,  // one codeword per coset of the k-th powers; weights are shift-invariant
  full,        // all q codewords, kept as the oracle path
};

WeightDistribution weight_distribution_enumerate(const FieldCtx& ctx, std::uint64_t k,
                                                 EnumerationMode mode = EnumerationMode::coset_reps,
                                                 std::uint64_t enum_cap = std::uint64_t(1) << 20);

// w = (p-1)(n - lambda)/p entrywise; needs k | (q-1)/(p-1) and a connected graph.
WeightDistribution weights_from_spectrum(const Spectrum& s, std::uint64_t p);

// exact inverse of weights_from_spectrum
Spectrum spectrum_from_weights(const WeightDistribution& wd);

struct TwoWeightReport {
  bool graph_is_srg;
  bool code_has_two_weights;
  std::size_t distinct_eigenvalues;
  std::size_t distinct_nonzero_weights;
  bool agree() const { return graph_is_srg == code_has_two_weights; }
};

TwoWeightReport two_weight_srg_check(std::uint64_t p, std::uint32_t m, std::uint64_t k);

// d >= ((p-1)/p) (n - 2 sqrt(n-1)), as an exact integer predicate.
struct RamanujanDistanceBound {
  Int n;
  std::uint64_t p;

  long double approx() const;
  // hypothesis d <= (p-1) n / p under which the bound applies
  bool hypothesis_holds(const Int& d) const;
  bool satisfied_by(const Int& d) const;
};

RamanujanDistanceBound min_distance_bound(const Int& n, std::uint64_t p);

// closed-form two-weight values (w1, w2) with frequencies (n, (k-1)n)
std::pair<Int, Int> semiprimitive_weights(std::uint64_t k, std::uint64_t p, std::uint32_t m);

nlohmann::ordered_json weights_to_json(const WeightDistribution& wd);

std::string format_weights(const WeightDistribution& wd);

}  // namespace gpgraph
