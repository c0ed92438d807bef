#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpgraph/bigint.hpp"

namespace gpgraph {

// Dense polynomial over Z, coefficient of X^i at index i.
struct IntPoly {
  std::vector<Int> coeff{Int(1)};

  int degree() const { return (int)coeff.size() - 1; }

  bool operator==(const IntPoly&) const = default;

  // multiply by (X - root)
  void mul_linear(const Int& root) {
    coeff.emplace_back(0);
    for (size_t j = coeff.size(); j-- > 1;) {
      coeff[j] = coeff[j - 1] - root * coeff[j];
    }
    coeff[0] *= -root;
  }

  IntPoly mul(const IntPoly& other) const {
    IntPoly r;
    r.coeff.assign(coeff.size() + other.coeff.size() - 1, Int(0));
    for (size_t i = 0; i < coeff.size(); i++) {
      if (coeff[i] == 0) continue;
      for (size_t j = 0; j < other.coeff.size(); j++) {
        r.coeff[i + j] += coeff[i] * other.coeff[j];
      }
    }
    return r;
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
    return acc;
  }

  std::string to_string(const std::string& var = "X") const;
};

// prod over (root, multiplicity) of (X - root)^mult
IntPoly poly_from_roots(const std::vector<std::pair<Int, Int>>& roots);

}  // namespace gpgraph
