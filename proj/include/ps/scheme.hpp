#pragma once

/*
 * scheme.hpp
 * ----------
 * From a set of maximal minors to a point-scheme description: strip scalar
 * factors that the q-constraints make invertible, pull out the common
 * non-monomial cofactor, decompose the residual monomial system into
 * coordinate subspaces, case-split on a coordinate when no common cofactor
 * exists, and prune or annotate contained components.
 */

#include <optional>
#include <string>
#include <vector>

#include "ps/linmat.hpp"
#include "ps/multipoly.hpp"

namespace ps {

enum class Ternary { False, True, Unknown };

struct SchemeComponent {
  enum class Kind { Ambient, CoordinateSubspace, Hypersurface };

  int nvars = 0;
  std::vector<int> vars;              // coordinates forced to zero, sorted
  std::optional<MultiPoly> equation;  // canonical, monomial-content-free
  // Factorization of the equation within the supported class; empty when
  // the equation only splits over the algebraic closure.
  std::vector<std::pair<MultiPoly, int>> factored;
  bool double_line = false;  // kept despite containment: the system
                             // vanishes to second order along it
  bool unfactored = false;   // degree >= 3 equation carried opaquely

  Kind kind() const {
    if (equation) return Kind::Hypersurface;
    return vars.empty() ? Kind::Ambient : Kind::CoordinateSubspace;
  }

  static SchemeComponent ambient(int nvars);
  static SchemeComponent subspace(int nvars, std::vector<int> vars);

  SchemeComponent permute(const std::vector<int>& perm) const;  // v -> perm[v]

  // Same locus, ignoring annotation flags.
  bool same_locus(const SchemeComponent& o) const {
    return nvars == o.nvars && vars == o.vars && equation == o.equation;
  }

  std::string render(const std::string& var_prefix = "x") const;
};

bool component_less(const SchemeComponent& a, const SchemeComponent& b);

struct SchemeDescription {
  int nvars = 0;
  std::vector<SchemeComponent> components;        // canonically sorted
  std::vector<std::pair<int, int>> containments;  // (contained, container)
  std::vector<std::string> warnings;
};

// Divides each distinct nonzero minor by the largest scalar factor that the
// constraints make invertible.  Scalar factors not implied nonzero are kept
// and reported through `warnings`.
std::vector<MultiPoly> strip_units(const MinorSet& ms, const QConstraintSet& c,
                                   std::vector<std::string>* warnings = nullptr);

struct CommonCofactor {
  MultiPoly cofactor;              // canonical non-unit polynomial
  std::vector<Monomial> monomials;  // per-input monomial content
};

// Succeeds when every input equals (monomial) * C up to a scalar for one
// common non-constant C; the paper's situation.
std::optional<CommonCofactor> common_cofactor(const std::vector<MultiPoly>& reduced);

struct MonomialPrimesResult {
  bool empty_variety = false;             // a constant monomial was present
  std::vector<std::vector<int>> primes;   // minimal hitting sets, sorted
};

// Minimal primes of the ideal generated by the given monomials, as minimal
// hitting sets of their variable supports.
MonomialPrimesResult monomial_primes(const std::vector<Monomial>& monomials);

// Is `inner` set-theoretically contained in `outer`?  Unknown when the
// decision would need factorization outside the supported class.
Ternary component_contains(const SchemeComponent& inner, const SchemeComponent& outer);

// Full decomposition; split_budget < 0 selects the default (one split per
// variable).
SchemeDescription decompose(const MinorSet& ms, const QConstraintSet& c,
                            int split_budget = -1);

// Convenience pipeline: build D, take minors, decompose.  Handles m < n by
// returning the ambient space with a warning.
SchemeDescription point_scheme(const Presentation& p, int split_budget = -1);

}  // namespace ps
