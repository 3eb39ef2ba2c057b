#include "ps/scheme.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ps {

SchemeComponent SchemeComponent::ambient(int nvars) {
  SchemeComponent c;
  c.nvars = nvars;
  return c;
}

SchemeComponent SchemeComponent::subspace(int nvars, std::vector<int> vars) {
  SchemeComponent c;
  c.nvars = nvars;
  std::sort(vars.begin(), vars.end());
  c.vars = std::move(vars);
  return c;
}

SchemeComponent SchemeComponent::permute(const std::vector<int>& perm) const {
  SchemeComponent c = *this;
  for (auto& v : c.vars) v = perm[static_cast<size_t>(v)];
  std::sort(c.vars.begin(), c.vars.end());
  if (equation) c.equation = equation->permute_vars(perm).canonical_form();
  c.factored.clear();
  for (const auto& [f, mult] : factored) {
    c.factored.emplace_back(f.permute_vars(perm).canonical_form(), mult);
  }
  return c;
}

std::string SchemeComponent::render(const std::string& var_prefix) const {
  if (kind() == Kind::Ambient) return "P^" + std::to_string(nvars - 1);
  std::ostringstream out;
  out << "V(";
  bool first = true;
  for (int v : vars) {
    if (!first) out << ", ";
    out << var_prefix << (v + 1);
    first = false;
  }
  if (equation) {
    if (!first) out << ", ";
    out << equation->render(var_prefix);
  }
  out << ")";
  return out.str();
}

bool component_less(const SchemeComponent& a, const SchemeComponent& b) {
  auto rank = [](const SchemeComponent& c) {
    switch (c.kind()) {
      case SchemeComponent::Kind::Ambient: return 0;
      case SchemeComponent::Kind::CoordinateSubspace: return 1;
      case SchemeComponent::Kind::Hypersurface: return 2;
    }
    return 3;
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.vars != b.vars) return a.vars < b.vars;
  if (a.equation && b.equation) return compare(*a.equation, *b.equation) < 0;
  return false;
}

std::vector<MultiPoly> strip_units(const MinorSet& ms, const QConstraintSet& c,
                                   std::vector<std::string>* warnings) {
  std::vector<MultiPoly> out;
  for (const auto& reduced : ms.nonzero_reduced) {
    auto split = reduced.representative.scalar_split();
    UnitSplit us = split_unit_under(split.scalar, c);
    if (us.residual.is_one()) {
      out.push_back(split.canonical);
    } else {
      if (warnings) {
        warnings->push_back("parameter-dependent factor kept: " + us.residual.render());
      }
      out.push_back(split.canonical * us.residual);
    }
  }
  return out;
}

std::optional<CommonCofactor> common_cofactor(const std::vector<MultiPoly>& reduced) {
  if (reduced.empty()) return std::nullopt;
  std::optional<MultiPoly> common;
  std::vector<Monomial> monomials;
  for (const auto& p : reduced) {
    if (p.is_zero()) throw Error("common_cofactor requires nonzero inputs");
    Monomial m = p.monomial_content();
    monomials.push_back(m);
    MultiPoly residual = p.divide_by_monomial(m).canonical_form();
    if (residual.is_constant()) return std::nullopt;  // no non-unit cofactor
    if (!common) {
      common = residual;
    } else if (*common != residual) {
      return std::nullopt;
    }
  }
  return CommonCofactor{*common, std::move(monomials)};
}

namespace {

// Minimal supports only: drops duplicates and supersets.
std::vector<std::vector<int>> minimal_supports(std::vector<std::vector<int>> supports) {
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<std::vector<int>> out;
  for (const auto& s : supports) {
    bool dominated = false;
    for (const auto& kept : out) {
      if (std::includes(s.begin(), s.end(), kept.begin(), kept.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

void hitting_sets_rec(const std::vector<std::vector<int>>& supports, size_t idx,
                      std::set<int>& chosen, std::vector<std::vector<int>>& out) {
  // First support not hit by the current choice.
  while (idx < supports.size()) {
    const auto& s = supports[idx];
    bool hit = false;
    for (int v : s) {
      if (chosen.count(v)) {
        hit = true;
        break;
      }
    }
    if (!hit) break;
    ++idx;
  }
  if (idx == supports.size()) {
    out.emplace_back(chosen.begin(), chosen.end());
    return;
  }
  for (int v : supports[idx]) {
    chosen.insert(v);
    hitting_sets_rec(supports, idx + 1, chosen, out);
    chosen.erase(v);
  }
}

}  // namespace

MonomialPrimesResult monomial_primes(const std::vector<Monomial>& monomials) {
  if (monomials.empty()) throw Error("monomial_primes requires a nonempty input");
  MonomialPrimesResult result;
  std::vector<std::vector<int>> supports;
  for (const auto& m : monomials) {
    if (m.is_one()) {
      result.empty_variety = true;
      return result;
    }
    supports.push_back(m.support());
  }
  supports = minimal_supports(std::move(supports));
  std::set<int> chosen;
  std::vector<std::vector<int>> candidates;
  hitting_sets_rec(supports, 0, chosen, candidates);
  // The branching can emit non-minimal sets; filter them.
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  for (const auto& c : candidates) {
    bool minimal = true;
    for (const auto& kept : result.primes) {
      if (std::includes(c.begin(), c.end(), kept.begin(), kept.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal && (result.primes.empty() || result.primes.back() != c)) {
      result.primes.push_back(c);
    }
  }
  std::sort(result.primes.begin(), result.primes.end());
  result.primes.erase(std::unique(result.primes.begin(), result.primes.end()),
                      result.primes.end());
  return result;
}

Ternary component_contains(const SchemeComponent& inner, const SchemeComponent& outer) {
  if (inner.nvars != outer.nvars) throw Error("containment across different variable counts");
  if (outer.kind() == SchemeComponent::Kind::Ambient) return Ternary::True;
  if (inner.kind() == SchemeComponent::Kind::Ambient) return Ternary::False;

  // Every zero coordinate of the outer component must be forced inside the
  // inner one.
  for (int v : outer.vars) {
    if (std::find(inner.vars.begin(), inner.vars.end(), v) == inner.vars.end()) {
      if (!inner.equation) return Ternary::False;
      // A hypersurface piece never forces a single coordinate to vanish:
      // that would require a_v to divide its content-free equation.
      return Ternary::False;
    }
  }
  if (!outer.equation) return Ternary::True;

  MultiPoly g = *outer.equation;
  for (int v : inner.vars) g = g.substitute_zero(v);
  if (g.is_zero()) return Ternary::True;
  if (!inner.equation) return Ternary::False;

  // V(f) in V(g): every irreducible factor of f must divide g.
  const MultiPoly& f = *inner.equation;
  if (g.is_constant()) return Ternary::False;
  auto divides = [&](const MultiPoly& factor) { return g.try_div(factor).has_value(); };
  int deg = f.total_degree();
  if (deg == 1) return divides(f) ? Ternary::True : Ternary::False;
  if (deg == 2 && f.homogeneous_degree()) {
    QConstraintSet none;
    QuadraticSplit split = split_quadratic_form(f, none);
    switch (split.kind) {
      case QuadraticSplit::Kind::Irreducible:
        return divides(f) ? Ternary::True : Ternary::False;
      case QuadraticSplit::Kind::Square:
        return divides(split.factors[0]) ? Ternary::True : Ternary::False;
      case QuadraticSplit::Kind::ProductOfLinear:
        return (divides(split.factors[0]) && divides(split.factors[1])) ? Ternary::True
                                                                        : Ternary::False;
      case QuadraticSplit::Kind::SplitOverClosure:
        // Irreducible over Q(q); dividing g settles it either way only
        // when it succeeds.
        if (divides(f)) return Ternary::True;
        return Ternary::Unknown;
    }
  }
  if (divides(f)) return Ternary::True;
  return Ternary::Unknown;  // outside the supported factor class
}

namespace {

struct DecomposeState {
  int nvars;
  const QConstraintSet& constraints;
  std::vector<MultiPoly> original;  // stripped top-level system
  std::vector<SchemeComponent> components;
  std::vector<std::string> warnings;

  void warn(const std::string& msg) {
    if (std::find(warnings.begin(), warnings.end(), msg) == warnings.end()) {
      warnings.push_back(msg);
    }
  }
};

void push_component(DecomposeState& st, SchemeComponent c) {
  if (!c.equation && static_cast<int>(c.vars.size()) == st.nvars) {
    return;  // the irrelevant point, empty in projective space
  }
  for (const auto& existing : st.components) {
    if (existing.same_locus(c)) return;
  }
  st.components.push_back(std::move(c));
}

// Components of V(C) inside the zero-context subspace.
void emit_factor_components(DecomposeState& st, const MultiPoly& cofactor,
                            const std::set<int>& zero_ctx, const std::set<int>& nonzero_ctx) {
  auto emit_linear = [&](const MultiPoly& linear,
                         const std::vector<std::pair<MultiPoly, int>>& factored) {
    if (linear.term_count() == 1) {
      int v = linear.leading_term().first.support().front();
      if (nonzero_ctx.count(v)) return;  // empty on this branch
      std::set<int> vars = zero_ctx;
      vars.insert(v);
      push_component(st, SchemeComponent::subspace(st.nvars, {vars.begin(), vars.end()}));
      return;
    }
    SchemeComponent c;
    c.nvars = st.nvars;
    c.vars.assign(zero_ctx.begin(), zero_ctx.end());
    c.equation = linear;
    c.factored = factored;
    push_component(st, std::move(c));
  };

  int deg = cofactor.total_degree();
  if (deg == 1) {
    emit_linear(cofactor, {{cofactor, 1}});
    return;
  }
  if (deg == 2 && cofactor.homogeneous_degree()) {
    QuadraticSplit split = split_quadratic_form(cofactor, st.constraints);
    switch (split.kind) {
      case QuadraticSplit::Kind::Square:
        emit_linear(split.factors[0], {{split.factors[0], 2}});
        return;
      case QuadraticSplit::Kind::ProductOfLinear:
        emit_linear(split.factors[0], {{split.factors[0], 1}});
        emit_linear(split.factors[1], {{split.factors[1], 1}});
        return;
      case QuadraticSplit::Kind::SplitOverClosure: {
        st.warn("rank-2 quadric splits only over the algebraic closure: " + cofactor.render());
        SchemeComponent c;
        c.nvars = st.nvars;
        c.vars.assign(zero_ctx.begin(), zero_ctx.end());
        c.equation = cofactor;
        push_component(st, std::move(c));
        return;
      }
      case QuadraticSplit::Kind::Irreducible: {
        SchemeComponent c;
        c.nvars = st.nvars;
        c.vars.assign(zero_ctx.begin(), zero_ctx.end());
        c.equation = cofactor;
        c.factored = {{cofactor, 1}};
        push_component(st, std::move(c));
        return;
      }
    }
  }
  // Degree >= 3 (or a non-homogeneous residual): carried opaquely rather
  // than risking a wrong factorization.
  st.warn("factor of degree " + std::to_string(deg) + " carried unfactored: " +
          cofactor.render());
  SchemeComponent c;
  c.nvars = st.nvars;
  c.vars.assign(zero_ctx.begin(), zero_ctx.end());
  c.equation = cofactor;
  c.unfactored = true;
  push_component(st, std::move(c));
}

void emit_monomial_primes(DecomposeState& st, const std::vector<Monomial>& monomials,
                          const std::set<int>& zero_ctx) {
  MonomialPrimesResult primes = monomial_primes(monomials);
  if (primes.empty_variety) return;
  for (const auto& s : primes.primes) {
    std::set<int> vars = zero_ctx;
    vars.insert(s.begin(), s.end());
    push_component(st, SchemeComponent::subspace(st.nvars, {vars.begin(), vars.end()}));
  }
}

void decompose_rec(DecomposeState& st, std::vector<MultiPoly> minors, std::set<int> zero_ctx,
                   std::set<int> nonzero_ctx, int budget) {
  // Normalize the branch system: divide out monomial content in variables
  // declared nonzero, drop scalar factors (warning when the constraints do
  // not make them invertible).
  std::vector<MultiPoly> sys;
  for (auto& p : minors) {
    if (p.is_zero()) continue;
    for (int v : nonzero_ctx) {
      int k = p.min_exponent_in(v);
      if (k > 0) p = p.divide_by_monomial(Monomial::variable(st.nvars, v, k));
    }
    auto split = p.scalar_split();
    UnitSplit us = split_unit_under(split.scalar, st.constraints);
    if (!us.residual.is_one()) {
      st.warn("parameter-dependent factor kept: " + us.residual.render());
    }
    if (split.canonical.is_constant()) {
      return;  // a nonvanishing equation: this branch is empty
    }
    bool seen = false;
    for (const auto& kept : sys) {
      if (kept == split.canonical) {
        seen = true;
        break;
      }
    }
    if (!seen) sys.push_back(split.canonical);
  }

  if (sys.empty()) {
    // Every minor vanished identically on this branch.
    if (zero_ctx.empty()) {
      push_component(st, SchemeComponent::ambient(st.nvars));
    } else {
      push_component(st, SchemeComponent::subspace(st.nvars, {zero_ctx.begin(), zero_ctx.end()}));
    }
    return;
  }

  auto common = common_cofactor(sys);
  if (common) {
    emit_factor_components(st, common->cofactor, zero_ctx, nonzero_ctx);
    bool has_constant_part = false;
    for (const auto& m : common->monomials) {
      if (m.is_one()) {
        has_constant_part = true;
        break;
      }
    }
    if (!has_constant_part) emit_monomial_primes(st, common->monomials, zero_ctx);
    return;
  }

  // Pure monomial system: the variety is cut out by the contents alone.
  bool all_monomial = true;
  std::vector<Monomial> contents;
  for (const auto& p : sys) {
    contents.push_back(p.monomial_content());
    if (p.term_count() != 1) all_monomial = false;
  }
  if (all_monomial) {
    emit_monomial_primes(st, contents, zero_ctx);
    return;
  }

  // Case split on a coordinate.
  if (budget <= 0) {
    st.warn("split budget exhausted; branch over-approximated by a single equation");
    const MultiPoly& p = sys.front();
    Monomial m = p.monomial_content();
    MultiPoly residual = p.divide_by_monomial(m);
    if (!residual.is_constant()) {
      emit_factor_components(st, residual.canonical_form(), zero_ctx, nonzero_ctx);
    }
    if (!m.is_one()) emit_monomial_primes(st, {m}, zero_ctx);
    return;
  }

  // Most frequent variable among the monomial parts, ties to the lowest
  // index; when the contents are all trivial, fall back to occurrence in
  // the polynomials themselves.
  std::vector<int> count(static_cast<size_t>(st.nvars), 0);
  for (const auto& m : contents) {
    for (int v : m.support()) ++count[static_cast<size_t>(v)];
  }
  bool any = false;
  for (int v = 0; v < st.nvars; ++v) {
    if (nonzero_ctx.count(v)) continue;
    if (count[static_cast<size_t>(v)] > 0) any = true;
  }
  if (!any) {
    for (const auto& p : sys) {
      for (int v : p.support_vars()) ++count[static_cast<size_t>(v)];
    }
  }
  int split_var = -1;
  for (int v = 0; v < st.nvars; ++v) {
    if (nonzero_ctx.count(v) || zero_ctx.count(v)) continue;
    if (count[static_cast<size_t>(v)] == 0) continue;
    if (split_var < 0 || count[static_cast<size_t>(v)] > count[static_cast<size_t>(split_var)]) {
      split_var = v;
    }
  }
  if (split_var < 0) {
    // Every remaining variable is pinned nonzero; report the system
    // unresolved and over-approximate by the first equation.
    st.warn("unresolved equation system (no splittable variable)");
    const MultiPoly& p = sys.front();
    Monomial m = p.monomial_content();
    MultiPoly residual = p.divide_by_monomial(m);
    if (!residual.is_constant()) {
      emit_factor_components(st, residual.canonical_form(), zero_ctx, nonzero_ctx);
    }
    if (!m.is_one()) emit_monomial_primes(st, {m}, zero_ctx);
    return;
  }

  // Branch a_v = 0.
  std::vector<MultiPoly> substituted;
  for (const auto& p : sys) substituted.push_back(p.substitute_zero(split_var));
  std::set<int> zero_branch = zero_ctx;
  zero_branch.insert(split_var);
  decompose_rec(st, std::move(substituted), std::move(zero_branch), nonzero_ctx, budget - 1);

  // Branch a_v != 0 (monomial content in a_v divided out on entry).
  std::set<int> nonzero_branch = nonzero_ctx;
  nonzero_branch.insert(split_var);
  decompose_rec(st, sys, zero_ctx, std::move(nonzero_branch), budget);
}

// True when the stripped system vanishes to order >= 2 along the component,
// i.e. every minor lies in the square of the component's ideal.  For a
// coordinate subspace this is a first-order jet evaluation: substituting
// a_s = eps * d_s with generic directions d and generic free coordinates,
// the eps^0 and eps^1 parts must both vanish, which for a monomial prime
// ideal is exactly "every term has degree >= 2 in the vanishing variables".
bool vanishes_to_second_order(const DecomposeState& st, const SchemeComponent& comp) {
  if (comp.kind() == SchemeComponent::Kind::CoordinateSubspace) {
    for (const auto& p : st.original) {
      if (p.min_degree_in(comp.vars) < 2) return false;
    }
    return true;
  }
  if (comp.kind() == SchemeComponent::Kind::Hypersurface && comp.vars.empty()) {
    MultiPoly sq = *comp.equation * *comp.equation;
    for (const auto& p : st.original) {
      if (!p.try_div(sq)) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

SchemeDescription decompose(const MinorSet& ms, const QConstraintSet& c, int split_budget) {
  if (ms.minors.empty()) throw Error("decompose requires a computed minor set");
  const int nvars = ms.minors.front().value.nvars();

  SchemeDescription desc;
  desc.nvars = nvars;

  DecomposeState st{nvars, c, {}, {}, {}};
  st.original = strip_units(ms, c, &st.warnings);

  if (st.original.empty()) {
    // Every maximal minor vanishes identically.
    desc.components.push_back(SchemeComponent::ambient(nvars));
    desc.warnings = st.warnings;
    return desc;
  }

  int budget = split_budget < 0 ? nvars : split_budget;
  decompose_rec(st, st.original, {}, {}, budget);

  // An ambient component absorbs everything else.
  for (const auto& comp : st.components) {
    if (comp.kind() == SchemeComponent::Kind::Ambient) {
      desc.components.push_back(comp);
      desc.warnings = st.warnings;
      return desc;
    }
  }

  // Containment analysis: contained components are pruned unless the
  // system vanishes to second order along them ("double" components).
  const size_t k = st.components.size();
  std::vector<std::vector<size_t>> containers(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      Ternary t = component_contains(st.components[i], st.components[j]);
      if (t == Ternary::True) {
        containers[i].push_back(j);
      } else if (t == Ternary::Unknown) {
        st.warn("containment undecided between " + st.components[i].render() + " and " +
                st.components[j].render());
      }
    }
  }
  // Mutual containment means equal loci described differently; keep the
  // canonically smaller description.
  std::vector<bool> dropped(k, false);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j : containers[i]) {
      if (dropped[i] || dropped[j]) continue;
      if (std::find(containers[j].begin(), containers[j].end(), i) != containers[j].end()) {
        dropped[component_less(st.components[i], st.components[j]) ? j : i] = true;
      }
    }
  }
  std::vector<SchemeComponent> kept;
  std::vector<std::pair<SchemeComponent*, SchemeComponent*>> kept_pairs;
  for (size_t i = 0; i < k; ++i) {
    if (dropped[i]) continue;
    bool contained = false;
    for (size_t j : containers[i]) {
      if (!dropped[j]) contained = true;
    }
    if (!contained) {
      kept.push_back(st.components[i]);
      continue;
    }
    if (vanishes_to_second_order(st, st.components[i])) {
      SchemeComponent c2 = st.components[i];
      c2.double_line = true;
      kept.push_back(std::move(c2));
    }
    // else: an ordinary contained piece, absorbed by its container
  }

  // Container components first, double lines after what contains them.
  std::sort(kept.begin(), kept.end(), [](const SchemeComponent& a, const SchemeComponent& b) {
    if (a.double_line != b.double_line) return !a.double_line;
    return component_less(a, b);
  });
  desc.components = std::move(kept);

  for (size_t i = 0; i < desc.components.size(); ++i) {
    for (size_t j = 0; j < desc.components.size(); ++j) {
      if (i == j) continue;
      if (component_contains(desc.components[i], desc.components[j]) == Ternary::True) {
        desc.containments.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  desc.warnings = st.warnings;
  return desc;
}

SchemeDescription point_scheme(const Presentation& p, int split_budget) {
  LinearFormMatrix d = build_matrix(p);
  if (d.rows() < d.cols()) {
    SchemeDescription desc;
    desc.nvars = d.cols();
    desc.components.push_back(SchemeComponent::ambient(d.cols()));
    desc.warnings.push_back(
        "fewer relations than generators: the point scheme is all of projective space");
    return desc;
  }
  MinorSet ms = maximal_minors(d);
  return decompose(ms, p.constraints(), split_budget);
}

}  // namespace ps
