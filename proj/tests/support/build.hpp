#pragma once

// Terse constructors for expected values in tests.

#include <utility>
#include <vector>

#include "ps/multipoly.hpp"

namespace ps::testing {

inline Laurent L(long c) { return Laurent(Rational(c)); }
inline Laurent Lq(long exp = 1) { return Laurent::q(exp); }

inline MultiPoly P(int nvars, std::vector<std::pair<std::vector<int>, Laurent>> terms) {
  MultiPoly p(nvars);
  for (auto& [e, c] : terms) p.add_term(Monomial(std::move(e)), c);
  return p;
}

// Monomial as a polynomial with coefficient 1.
inline MultiPoly PM(std::vector<int> exps) {
  Monomial m(std::move(exps));
  return MultiPoly::from_monomial(m, Laurent::one());
}

}  // namespace ps::testing
