#pragma once

/*
 * fiber.hpp
 * ---------
 * Exact solution of D(alpha) * beta = 0: the partner coordinate of a point
 * on the scheme.  Entries of the returned basis are reduced fractions of
 * Laurent polynomials (plain rationals once q is specialized).
 */

#include <optional>
#include <string>
#include <vector>

#include "ps/linmat.hpp"

namespace ps {

// Reduced quotient of Laurent polynomials; den is unit-normalized and 1
// whenever the quotient is polynomial.
struct RatFunc {
  Laurent num;
  Laurent den;

  static RatFunc reduced(const Laurent& num, const Laurent& den);
  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  std::string render() const;
};

struct FiberResult {
  int rank = 0;
  // One basis vector per kernel dimension, first nonzero coordinate scaled
  // to 1; rank + basis.size() == n.
  std::vector<std::vector<RatFunc>> basis;
};

// Kernel of D specialized at a rational alpha, optionally with q = q0.
// Rejects the zero alpha and inadmissible q0 (some constraint vanishes).
FiberResult kernel_at(const LinearFormMatrix& d, const std::vector<Rational>& alpha,
                      const std::optional<Rational>& q0, const QConstraintSet& constraints);

// Kernel over the whole coordinate subspace {a_v = 0 : v in zero_vars}: the
// free coordinates stay symbolic, so one computation covers every point of
// the component.  Basis vectors are primitive polynomial vectors.
struct SymbolicFiber {
  int rank = 0;
  std::vector<std::vector<MultiPoly>> basis;
};
SymbolicFiber kernel_on_subspace(const LinearFormMatrix& d, const std::vector<int>& zero_vars);

}  // namespace ps
