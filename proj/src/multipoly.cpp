#include "ps/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "ps/elim.hpp"

namespace ps {

MultiPoly MultiPoly::constant(int nvars, const Laurent& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int v) {
  MultiPoly p(nvars);
  p.add_term(Monomial::variable(nvars, v), Laurent::one());
  return p;
}

MultiPoly MultiPoly::from_monomial(const Monomial& m, const Laurent& c) {
  MultiPoly p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Laurent MultiPoly::constant_value() const {
  auto it = terms_.find(Monomial(nvars_));
  return it == terms_.end() ? Laurent() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Laurent& c) {
  if (c.is_zero()) return;
  if (m.nvars() != nvars_) throw Error("monomial with mismatched variable count");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw Error("polynomial arithmetic across variable counts");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw Error("polynomial arithmetic across variable counts");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw Error("polynomial arithmetic across variable counts");
  MultiPoly r(nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      r.add_term(m1 * m2, c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Laurent& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

std::optional<MultiPoly> MultiPoly::try_div(const MultiPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  MultiPoly quot(nvars_);
  MultiPoly rem = *this;
  const auto& [lm, lc] = o.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    auto cq = rc.try_div(lc);
    if (!cq) return std::nullopt;
    MultiPoly t = MultiPoly::from_monomial(rm.exact_div(lm), *cq);
    quot = quot + t;
    rem = rem - t * o;
  }
  return quot;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& o) const {
  if (o.is_zero()) throw DivisionError("polynomial division by zero");
  if (nvars_ != o.nvars_) throw Error("polynomial arithmetic across variable counts");
  MultiPoly quot(nvars_);
  MultiPoly rem = *this;
  const auto& [lm, lc] = o.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    auto cq = lm.divides(rm) ? rc.try_div(lc) : std::nullopt;
    if (!cq) {
      std::string witness = MultiPoly::from_monomial(rm, rc).render();
      throw DivisionError("inexact polynomial division, remainder term " + witness, witness);
    }
    MultiPoly t = MultiPoly::from_monomial(rm.exact_div(lm), *cq);
    quot = quot + t;
    rem = rem - t * o;
  }
  return quot;
}

Monomial MultiPoly::monomial_content() const {
  if (is_zero()) throw Error("monomial content of the zero polynomial");
  Monomial m = terms_.begin()->first;
  for (const auto& [mono, c] : terms_) m = Monomial::componentwise_min(m, mono);
  return m;
}

MultiPoly MultiPoly::divide_by_monomial(const Monomial& m) const {
  MultiPoly r(nvars_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono.exact_div(m), c);
  return r;
}

MultiPoly MultiPoly::substitute_zero(int var) const {
  if (var < 0 || var >= nvars_) throw Error("substitute_zero: variable index out of range");
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.exponent(var) == 0) r.terms_.emplace(m, c);
  }
  return r;
}

Laurent MultiPoly::content() const {
  Laurent g;
  for (const auto& [m, c] : terms_) g = laurent_gcd(g, c);
  return g;
}

ScalarSplit MultiPoly::scalar_split() const {
  if (is_zero()) throw Error("scalar split of the zero polynomial");
  Laurent g = content();
  MultiPoly core(nvars_);
  for (const auto& [m, c] : terms_) core.terms_.emplace(m, c.exact_div(g));
  // The remaining freedom is a unit c*q^k; pin it by the lowest term of the
  // leading coefficient.
  const Laurent& lead = core.leading_term().second;
  const auto& [e, c0] = *lead.terms().begin();
  Laurent unit(c0, e);
  MultiPoly canonical(nvars_);
  for (const auto& [m, c] : core.terms_) canonical.terms_.emplace(m, c.exact_div(unit));
  return ScalarSplit{g * unit, std::move(canonical)};
}

MultiPoly MultiPoly::canonical_form() const { return scalar_split().canonical; }

bool MultiPoly::unit_equivalent(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return canonical_form() == o.canonical_form();
}

const std::pair<const Monomial, Laurent>& MultiPoly::leading_term() const {
  if (is_zero()) throw Error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  int d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() != d) return std::nullopt;
  }
  return d;
}

int MultiPoly::total_degree() const {
  if (is_zero()) return -1;
  return terms_.rbegin()->first.total_degree();
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

int MultiPoly::min_exponent_in(int var) const {
  if (is_zero()) return 0;
  int d = terms_.begin()->first.exponent(var);
  for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(var));
  return d;
}

int MultiPoly::min_degree_in(const std::vector<int>& vars) const {
  if (is_zero()) return 0;
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int v : vars) d += m.exponent(v);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

std::vector<int> MultiPoly::support_vars() const {
  std::vector<bool> seen(static_cast<size_t>(nvars_), false);
  for (const auto& [m, c] : terms_) {
    for (int v : m.support()) seen[static_cast<size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < nvars_; ++v) {
    if (seen[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

MultiPoly MultiPoly::specialize_q(const Rational& q0) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, Laurent(c.eval(q0)));
  return r;
}

Laurent MultiPoly::eval(const std::vector<Laurent>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error("evaluation point size mismatch");
  Laurent acc;
  for (const auto& [m, c] : terms_) {
    Laurent t = c;
    for (int v = 0; v < nvars_; ++v) {
      for (int k = 0; k < m.exponent(v); ++k) t = t * point[static_cast<size_t>(v)];
    }
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::eval_poly(const std::vector<MultiPoly>& point) const {
  if (point.empty()) throw Error("evaluation point size mismatch");
  if (static_cast<int>(point.size()) != nvars_) throw Error("evaluation point size mismatch");
  const int out_vars = point.front().nvars();
  MultiPoly acc(out_vars);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(out_vars, c);
    for (int v = 0; v < nvars_; ++v) {
      for (int k = 0; k < m.exponent(v); ++k) t = t * point[static_cast<size_t>(v)];
    }
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::permute_vars(const std::vector<int>& perm) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> exps(static_cast<size_t>(nvars_), 0);
    for (int v = 0; v < nvars_; ++v) {
      exps[static_cast<size_t>(perm[static_cast<size_t>(v)])] = m.exponent(v);
    }
    r.add_term(Monomial(std::move(exps)), c);
  }
  return r;
}

std::string MultiPoly::render(const std::string& var_prefix) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    // Coefficients donate their sign to the joiner: single terms by their
    // sign, compound ones by the sign of their highest q-power.
    bool compound = c.term_count() > 1;
    Laurent body = c;
    bool negative = compound ? sgn(c.terms().rbegin()->second) < 0
                             : sgn(c.terms().begin()->second) < 0;
    if (negative) body = -c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string mono = m.render(var_prefix);
    if (compound) {
      out << "(" << body.render() << ")";
      if (!m.is_one()) out << "*" << mono;
    } else if (m.is_one()) {
      out << body.render();
    } else if (body.is_one()) {
      out << mono;
    } else {
      out << body.render() << "*" << mono;
    }
  }
  return out.str();
}

int compare(const MultiPoly& a, const MultiPoly& b) {
  auto ita = a.terms().rbegin();
  auto itb = b.terms().rbegin();
  GrevlexLess less;
  while (ita != a.terms().rend() && itb != b.terms().rend()) {
    if (ita->first != itb->first) return less(ita->first, itb->first) ? -1 : 1;
    if (ita->second != itb->second) return ita->second < itb->second ? -1 : 1;
    ++ita;
    ++itb;
  }
  if (ita != a.terms().rend()) return 1;
  if (itb != b.terms().rend()) return -1;
  return 0;
}

QuadraticForm::QuadraticForm(const MultiPoly& f) : n_(f.nvars()) {
  if (f.homogeneous_degree() != std::optional<int>(2)) {
    throw Error("quadratic form requires a nonzero homogeneous degree-2 polynomial");
  }
  m_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), Laurent());
  for (const auto& [mono, c] : f.terms()) {
    auto sup = mono.support();
    if (sup.size() == 1) {
      int i = sup[0];
      m_[idx(i, i)] = c + c;
    } else {
      int i = sup[0];
      int j = sup[1];
      m_[idx(i, j)] = c;
      m_[idx(j, i)] = c;
    }
  }
}

MultiPoly QuadraticForm::to_poly() const {
  MultiPoly acc(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      const Laurent& c = entry(i, j);
      if (c.is_zero()) continue;
      Monomial m = Monomial::variable(n_, i) * Monomial::variable(n_, j);
      if (i == j) {
        acc.add_term(m, c.exact_div(Laurent(Rational(2))));
      } else {
        acc.add_term(m, c);
      }
    }
  }
  return acc;
}

int QuadraticForm::rank() const {
  DenseMatrix<Laurent> m(n_, n_, Laurent());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m.at(i, j) = entry(i, j);
  }
  return ff_rank(m);
}

namespace {

// f = scalar * l^2 for a rank-1 form; returns (scalar, canonical l).
std::pair<Laurent, MultiPoly> extract_square(const MultiPoly& f, const QuadraticForm& gram) {
  int n = gram.nvars();
  int row = -1;
  for (int i = 0; i < n && row < 0; ++i) {
    if (!gram.entry(i, i).is_zero()) row = i;
  }
  // A rank-1 symmetric form over a field of characteristic 0 always has a
  // nonzero diagonal entry.
  if (row < 0) throw Error("degenerate rank-1 quadratic form");
  MultiPoly line(n);
  for (int j = 0; j < n; ++j) {
    if (!gram.entry(row, j).is_zero()) {
      line.add_term(Monomial::variable(n, j), gram.entry(row, j));
    }
  }
  MultiPoly canon = line.canonical_form();
  MultiPoly scalar_poly = f.exact_div(canon * canon);
  if (!scalar_poly.is_constant()) throw Error("rank detection mismatch in quadratic split");
  return {scalar_poly.constant_value(), canon};
}

}  // namespace

QuadraticSplit split_quadratic_form(const MultiPoly& f, const QConstraintSet& c) {
  QuadraticForm gram(f);
  const int n = f.nvars();
  const int r = gram.rank();
  QuadraticSplit out{QuadraticSplit::Kind::Irreducible, r, Laurent::one(), true, {}};
  if (r >= 3) return out;

  if (r == 1) {
    auto [scalar, line] = extract_square(f, gram);
    out.kind = QuadraticSplit::Kind::Square;
    out.scalar = scalar;
    out.scalar_is_unit = is_unit_under(scalar, c);
    out.factors = {line};
    return out;
  }

  // rank 2: try to produce two rational linear factors.
  int diag = -1;
  for (int i = 0; i < n && diag < 0; ++i) {
    if (!gram.entry(i, i).is_zero()) diag = i;
  }
  MultiPoly f1(n), f2(n);
  if (diag < 0) {
    // No square terms: f is a product of two linear forms in disjoint
    // variables; one factor is the gradient row of any occurring variable.
    int v = f.support_vars().front();
    MultiPoly g(n);
    for (int j = 0; j < n; ++j) {
      if (!gram.entry(v, j).is_zero()) g.add_term(Monomial::variable(n, j), gram.entry(v, j));
    }
    f1 = g.canonical_form();
    f2 = f.exact_div(f1).canonical_form();
  } else {
    MultiPoly row(n);
    for (int j = 0; j < n; ++j) {
      if (!gram.entry(diag, j).is_zero()) {
        row.add_term(Monomial::variable(n, j), gram.entry(diag, j));
      }
    }
    Laurent two_mii = gram.entry(diag, diag) + gram.entry(diag, diag);
    MultiPoly rest = f * two_mii - row * row;  // rank-1 complement, times -1
    if (rest.is_zero()) throw Error("rank detection mismatch in quadratic split");
    auto [s, line] = extract_square(rest, QuadraticForm(rest));
    auto t = laurent_sqrt(-s);
    if (!t) {
      out.kind = QuadraticSplit::Kind::SplitOverClosure;
      return out;
    }
    f1 = (row - line * (*t)).canonical_form();
    f2 = (row + line * (*t)).canonical_form();
  }
  out.kind = QuadraticSplit::Kind::ProductOfLinear;
  MultiPoly scalar_poly = f.exact_div(f1 * f2);
  if (!scalar_poly.is_constant()) throw Error("rank detection mismatch in quadratic split");
  out.scalar = scalar_poly.constant_value();
  out.scalar_is_unit = is_unit_under(out.scalar, c);
  out.factors = {f1, f2};
  return out;
}

}  // namespace ps
