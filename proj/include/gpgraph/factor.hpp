#pragma once

#include <cstdint>
#include <vector>

namespace gpgraph {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Prime factorization of n >= 1: trial division up to 10^6, Pollard rho for
// the rest. Returns (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace gpgraph
