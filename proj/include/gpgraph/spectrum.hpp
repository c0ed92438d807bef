#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpgraph/bigint.hpp"
#include "gpgraph/field.hpp"

#include "json.hpp"

namespace gpgraph {

struct SemiprimitiveInfo;  // families.hpp

// Exact eigenvalues are integers; non-integral ones only arise on the
// enumeration paths and carry a floating approximation instead.
struct Eigval {
  bool exact = true;
  Int value = 0;
  long double approx = 0;

  static Eigval of(Int v) {
    Eigval e;
    e.value = std::move(v);
    e.approx = e.value.convert_to<long double>();
    return e;
  }
  static Eigval inexact_of(long double a) { return {false, 0, a}; }
  long double approx_value() const { return approx; }
};

struct SpectrumEntry {
  Eigval lambda;
  Int mult;
};

enum class SpectrumSource { closed_form, periods, oracle };

const char* spectrum_source_name(SpectrumSource s);

struct Spectrum {
  Int q;  // vertex count
  Int n;  // regularity degree
  std::uint64_t k = 0;
  Int mu = 0;  // periods equal to n; multiplicity of n is 1 + mu*n
  SpectrumSource source = SpectrumSource::periods;
  std::vector<SpectrumEntry> entries;  // strictly descending eigenvalue

  bool exact() const;
  const SpectrumEntry& principal() const;  // the entry with lambda == n
};

// Groups a raw eigenvalue multiset, sorts, fills mu, and validates.
Spectrum make_spectrum(Int q, Int n, std::uint64_t k, SpectrumSource source,
                       std::vector<std::pair<Eigval, Int>> raw);

// Trace identities: sum(mult) = q, sum(lambda*mult) = 0, sum(lambda^2*mult) = q*n,
// multiplicity of the degree = 1 + mu*n. Throws errc::internal on violation.
void validate_spectrum(const Spectrum& s);

// Spectrum of Gamma(k,q) from Gaussian periods.
Spectrum gp_spectrum(const FieldCtx& ctx, std::uint64_t k);

Spectrum complement_spectrum(const Spectrum& s);

bool is_connected(const Spectrum& s);

struct SrgParams {
  Int v, n, e, d;
};
struct IntersectionArray {
  Int b0, b1, c1, c2;
};
struct SrgAnalysis {
  SrgParams srg;
  IntersectionArray array;
};

// Exactly three distinct eigenvalues of a connected graph; nullopt otherwise.
std::optional<SrgAnalysis> srg_analysis(const Spectrum& s);

enum class LatinKind { latin, negative_latin_shape };

struct LatinSquareParams {
  LatinKind kind;
  Int w;
  Int delta;  // delta for latin, h for the negative-latin shape
  // Neumaier's geometricity bound is sufficient, not necessary; it fails for a
  // few small delta = 2 graphs whose latin label still stands.
  bool neumaier_certified = false;

  std::string label() const;
};

LatinSquareParams latin_square_analysis(const Spectrum& s, const SemiprimitiveInfo& semi);

struct GraphInvariants {
  Int energy;
  std::vector<Int> walks;  // walks[r-1] = closed walk count sum(lambda^r * mult), r = 1..r_max
  Int spanning_trees;
};

// Spectral invariants; when semi is given, the closed forms for energy, walks
// and trees are evaluated as well and must agree.
GraphInvariants graph_invariants(const Spectrum& s, unsigned r_max,
                                 const SemiprimitiveInfo* semi = nullptr);

struct IharaZeta {
  Int exponent;     // power of (1 - u^2) in the numerator
  Int n_minus_one;  // the u^2 coefficient in each denominator factor
  std::vector<std::pair<Int, Int>> factors;  // (lambda, mult) of (1 - lambda u - (n-1) u^2)^mult

  std::string to_string() const;
};

IharaZeta ihara_zeta(const Spectrum& s);

// lambda(G)^2 <= 4(n-1), in exact integer arithmetic for exact spectra.
bool is_ramanujan_spectral(const Spectrum& s);

nlohmann::ordered_json spectrum_to_json(const Spectrum& s);

std::string format_spectrum(const Spectrum& s);

}  // namespace gpgraph
