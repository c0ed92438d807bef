#include "gpgraph/errors.hpp"

namespace gpgraph {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::no_primitive_polynomial: return "NoPrimitivePolynomialFound";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::zero_element: return "ZeroElement";
    case errc::directed_graph: return "DirectedGraph";
    case errc::oracle_disagreement: return "OracleDisagreement";
    case errc::disconnected: return "Disconnected";
    case errc::inexact_periods: return "InexactPeriods";
    case errc::inexact_spectrum: return "InexactSpectrum";
    case errc::degenerate_degree: return "DegenerateDegree";
    case errc::not_semiprimitive: return "NotSemiprimitive";
    case errc::no_solution: return "NoSolution";
    case errc::inexact_division: return "InexactDivision";
    case errc::bridge_inapplicable: return "BridgeInapplicable";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::excluded_q: return "ExcludedQ";
    case errc::odd_m: return "OddM";
    case errc::q_too_small: return "QTooSmall";
    case errc::internal: return "InternalCheckFailed";
  }
  return "UnknownError";
}

}  // namespace gpgraph
