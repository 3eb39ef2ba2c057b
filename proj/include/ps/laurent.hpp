#pragma once

/*
 * laurent.hpp
 * -----------
 * Laurent polynomials in the single parameter q over the rationals, plus
 * the set of user-declared nonvanishing constraints on q.  This is the
 * coefficient ring for every relation, matrix entry and minor in the
 * pipeline.
 *
 * Values are immutable in spirit: every operation returns a fresh value,
 * so Laurent objects can be shared freely across threads.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ps/error.hpp"
#include "ps/rational.hpp"

namespace ps {

class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rational& c);             // constant
  Laurent(const Rational& c, long exponent);       // c * q^exponent
  static Laurent q(long exponent = 1);             // q^exponent
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // True iff a unit of Q[q, q^-1], i.e. a single term c*q^k.
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  long low_exponent() const;   // requires nonzero
  long high_exponent() const;  // requires nonzero
  const Rational& coeff(long exponent) const;  // 0 if absent
  const std::map<long, Rational>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Exact division in Q[q, q^-1]; throws DivisionError when o is zero or
  // does not divide *this.
  Laurent exact_div(const Laurent& o) const;
  std::optional<Laurent> try_div(const Laurent& o) const;

  Laurent pow(long e) const;  // e >= 0, or *this a monomial

  // The canonical unit u = sign(lowest coefficient) * q^(lowest exponent);
  // (*this / u) has lowest exponent 0 and positive lowest coefficient.
  Laurent unit_part() const;  // requires nonzero
  Laurent unit_normal() const;

  // Evaluation at q = q0 (q0 != 0 required when negative exponents occur).
  Rational eval(const Rational& q0) const;

  void add_term(long exponent, const Rational& c);  // builder; combines like terms

  // Total order (used only for deterministic container ordering).
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  std::string render() const;

 private:
  std::map<long, Rational> terms_;  // exponent -> nonzero coefficient
};

// gcd in Q[q, q^-1], canonicalized: integer-primitive over Z, lowest
// exponent 0, positive lowest coefficient.  gcd(0, b) = unit_normal(b).
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

// Exact square root in Q[q, q^-1] when one exists.
std::optional<Laurent> laurent_sqrt(const Laurent& s);

/*
 * Declared nonvanishing constraints on q.  The parameter itself is always
 * invertible, so the constraint q != 0 is implicit and stored first.
 */
class QConstraintSet {
 public:
  QConstraintSet();  // just the implicit q
  explicit QConstraintSet(const std::vector<Laurent>& polys);

  // Adds one constraint polynomial (asserted nonzero); rejects the zero
  // polynomial.  Duplicates (up to unit) are ignored.
  void add(const Laurent& p);

  const std::vector<Laurent>& polys() const { return polys_; }
  // Constraints excluding the implicit q (for rendering round-trips).
  std::vector<Laurent> explicit_polys() const;

  // True iff q0 is an admissible parameter value: every constraint
  // polynomial (including q itself) is nonzero at q0.
  bool admits(const Rational& q0) const;

  bool operator==(const QConstraintSet& o) const { return polys_ == o.polys_; }

 private:
  std::vector<Laurent> polys_;  // unit-normalized, deduplicated; polys_[0] = q
};

// True iff s is invertible whenever all constraints hold, i.e. every
// irreducible factor of s over Q divides some constraint polynomial or is
// a power of q.  Decided exactly by repeated gcd extraction.
bool is_unit_under(const Laurent& s, const QConstraintSet& c);

// Splits s = unit_covered * residual where unit_covered collects the
// canonical unit together with every factor covered by the constraints and
// residual is the (unit-normalized) uncovered part; residual == 1 iff
// is_unit_under(s, c).
struct UnitSplit {
  Laurent covered;
  Laurent residual;
};
UnitSplit split_unit_under(const Laurent& s, const QConstraintSet& c);

}  // namespace ps
