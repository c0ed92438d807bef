#include "gpgraph/polynomial.hpp"

#include <sstream>

namespace gpgraph {

IntPoly poly_from_roots(const std::vector<std::pair<Int, Int>>& roots) {
  IntPoly p;
  Int total = 0;
  for (const auto& [root, mult] : roots) total += mult;
  p.coeff.reserve((size_t)total + 1);
  for (const auto& [root, mult] : roots) {
    for (Int i = 0; i < mult; i++) p.mul_linear(root);
  }
  return p;
}

std::string IntPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeff.size(); i-- > 0;) {
    const Int& c = coeff[i];
    if (c == 0 && coeff.size() > 1) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gpgraph
