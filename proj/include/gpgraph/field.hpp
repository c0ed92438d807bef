#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpgraph/bigint.hpp"
#include "gpgraph/errors.hpp"

namespace gpgraph {

// Nonzero elements are stored by discrete log: omega^log with omega the
// distinguished primitive element of the containing field.
struct FieldElement {
  bool is_zero = true;
  std::uint32_t log = 0;

  static FieldElement zero() { return {}; }
  static FieldElement from_log(std::uint32_t lg) { return {false, lg}; }
  bool operator==(const FieldElement&) const = default;
};

struct FieldOptions {
  std::uint64_t table_cap = std::uint64_t(1) << 24;
  bool use_cache = true;  // honor GPGRAPH_CACHE_DIR when set
};

class FieldCtx {
 public:
  std::uint64_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t group_order() const { return q_ - 1; }

  // c_0 .. c_m of the monic primitive modulus polynomial
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement omega() const { return FieldElement::from_log(q_ > 2 ? 1 : 0); }
  FieldElement one() const { return FieldElement::from_log(0); }

  FieldElement element_from_packed(std::uint64_t packed) const;
  std::uint64_t packed(FieldElement x) const { return x.is_zero ? 0 : antilog_[x.log]; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero || b.is_zero) return FieldElement::zero();
    std::uint64_t s = (std::uint64_t)a.log + b.log;
    if (s >= q_ - 1) s -= q_ - 1;
    return FieldElement::from_log((std::uint32_t)s);
  }
  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  std::uint32_t trace_of_log(std::uint64_t lg) const { return trace_log_[lg]; }
  std::uint32_t trace_of_packed(std::uint64_t packed) const;

  friend FieldCtx build_field(std::uint64_t p, std::uint32_t m, const FieldOptions& opts);
  friend std::uint32_t trace(const FieldCtx& ctx, FieldElement x);

 private:
  std::uint64_t p_ = 0, q_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> antilog_;    // log -> packed, size q-1
  std::vector<std::uint32_t> log_;        // packed -> log, size q (entry 0 unused)
  std::vector<std::uint32_t> trace_log_;  // log -> Tr(omega^log), size q-1
  std::vector<std::uint32_t> zech_;       // log(1 + omega^z); q-1 marks 1 + omega^z = 0
  std::vector<std::uint32_t> trace_basis_; // Tr(x^j) for j < m
};

FieldCtx build_field(std::uint64_t p, std::uint32_t m, const FieldOptions& opts = {});

std::uint32_t trace(const FieldCtx& ctx, FieldElement x);

std::uint64_t power_coset_index(const FieldCtx& ctx, FieldElement x, std::uint64_t N);

// True iff n = (p^m - 1)/k divides no p^a - 1 with 1 <= a < m.
bool is_primitive_divisor(std::uint64_t p, std::uint32_t m, const Int& k);

}  // namespace gpgraph
