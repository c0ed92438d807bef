#pragma once

#include <stdexcept>
#include <string>

namespace gpgraph {

enum class errc {
  not_prime,
  field_too_large,
  no_primitive_polynomial,
  not_a_divisor,
  zero_element,
  directed_graph,
  oracle_disagreement,
  disconnected,
  inexact_periods,
  inexact_spectrum,
  degenerate_degree,
  not_semiprimitive,
  no_solution,
  inexact_division,
  bridge_inapplicable,
  precondition_violated,
  excluded_q,
  odd_m,
  q_too_small,
  internal,
};

const char* errc_name(errc c);

class gp_error : public std::runtime_error {
 public:
  gp_error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw gp_error(c, msg); }

inline void require(bool cond, errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace gpgraph
