#pragma once

/*
 * multipoly.hpp
 * -------------
 * Sparse multivariate polynomials in the commuting coordinates a1..an over
 * the Laurent coefficient ring, together with the restricted factorization
 * toolkit the pipeline needs: monomial content, exact division, quadratic
 * form splitting and zero-substitution.
 *
 * Values are immutable after construction; operations return new values.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ps/laurent.hpp"
#include "ps/monomial.hpp"

namespace ps {

struct ScalarSplit;  // p = scalar * canonical; defined below

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Laurent, GrevlexLess>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(int nvars, const Laurent& c);
  static MultiPoly variable(int nvars, int v);
  static MultiPoly from_monomial(const Monomial& m, const Laurent& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant coefficient; equals the whole value iff is_constant().
  Laurent constant_value() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Laurent& c);  // builder; combines

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Laurent& c) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Exact division; DivisionError carries the first obstructing term.
  MultiPoly exact_div(const MultiPoly& o) const;
  std::optional<MultiPoly> try_div(const MultiPoly& o) const;

  // Componentwise-minimum exponent vector over all terms; rejects zero.
  Monomial monomial_content() const;
  MultiPoly divide_by_monomial(const Monomial& m) const;

  // Deletes every term with a positive exponent in var; the variable count
  // is retained.
  MultiPoly substitute_zero(int var) const;

  // gcd of all coefficients (canonical: integer-primitive, exponent-low 0,
  // positive lowest coefficient); zero polynomial has zero content.
  Laurent content() const;

  // p = scalar * canonical with canonical's leading coefficient having
  // lowest term exactly q^0.  Two polynomials are scalar multiples of each
  // other over Q(q) iff their canonical parts are identical.
  ScalarSplit scalar_split() const;  // requires nonzero
  MultiPoly canonical_form() const;
  bool unit_equivalent(const MultiPoly& o) const;

  const std::pair<const Monomial, Laurent>& leading_term() const;  // nonzero

  std::optional<int> homogeneous_degree() const;
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  int min_exponent_in(int var) const;  // min over terms; 0 for zero poly
  // Minimum over terms of the total exponent in the given variable set;
  // >= 2 means the polynomial lies in the square of the coordinate ideal.
  int min_degree_in(const std::vector<int>& vars) const;
  std::vector<int> support_vars() const;

  MultiPoly specialize_q(const Rational& q0) const;
  // Full evaluation at a point with Laurent coordinates.
  Laurent eval(const std::vector<Laurent>& point) const;
  // Substitution of polynomial values (used for symbolic evaluation).
  MultiPoly eval_poly(const std::vector<MultiPoly>& point) const;
  MultiPoly permute_vars(const std::vector<int>& perm) const;  // v -> perm[v]

  // Canonical text: terms in descending graded order, Laurent coefficients
  // parenthesized when compound, e.g. "(q^2 - 1)*a1*a3 + a2^2".
  std::string render(const std::string& var_prefix = "a") const;

 private:
  int nvars_;
  TermMap terms_;
};

struct ScalarSplit {
  Laurent scalar;
  MultiPoly canonical;
};

// Deterministic total order (degree, then leading monomials/coefficients).
int compare(const MultiPoly& a, const MultiPoly& b);

/*
 * Symmetric presentation of a homogeneous degree-2 polynomial.  The stored
 * matrix is the doubled Gram matrix (diagonal entries are twice the square
 * coefficients, off-diagonal entries the mixed coefficients), so building
 * it never divides by 2; the form equals (1/2) * a^T * M * a.
 */
class QuadraticForm {
 public:
  // Rejects inputs that are zero or not homogeneous of degree 2.
  explicit QuadraticForm(const MultiPoly& f);

  int nvars() const { return n_; }
  const Laurent& entry(int i, int j) const { return m_[idx(i, j)]; }
  MultiPoly to_poly() const;
  int rank() const;  // rank over Q(q), by fraction-free elimination

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }
  int n_;
  std::vector<Laurent> m_;
};

struct QuadraticSplit {
  enum class Kind {
    Irreducible,       // rank >= 3
    ProductOfLinear,   // rank 2, discriminant a perfect square
    SplitOverClosure,  // rank 2, factors only over the algebraic closure
    Square,            // rank 1
  };
  Kind kind;
  int rank;
  Laurent scalar;                  // exact: f = scalar * (product of factors)
  bool scalar_is_unit;             // under the supplied constraints
  std::vector<MultiPoly> factors;  // canonical linear forms; empty unless
                                   // Square (one) or ProductOfLinear (two)
};

QuadraticSplit split_quadratic_form(const MultiPoly& f, const QConstraintSet& c);

}  // namespace ps
