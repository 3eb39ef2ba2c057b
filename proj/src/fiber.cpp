#include "ps/fiber.hpp"

#include <algorithm>

namespace ps {

RatFunc RatFunc::reduced(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) return {Laurent(), Laurent::one()};
  Laurent g = laurent_gcd(num, den);
  Laurent n = num.exact_div(g);
  Laurent d = den.exact_div(g);
  // Pin the remaining unit on the denominator side.
  Laurent u = d.unit_part();
  n = n.exact_div(u);
  d = d.exact_div(u);
  if (d.is_one()) return {n, Laurent::one()};
  // Constant denominators fold into the numerator.
  if (d.is_constant()) {
    return {n.exact_div(d), Laurent::one()};
  }
  return {n, d};
}

std::string RatFunc::render() const {
  if (den.is_one()) {
    return num.term_count() > 1 ? "(" + num.render() + ")" : num.render();
  }
  std::string n = num.term_count() > 1 ? "(" + num.render() + ")" : num.render();
  std::string d = den.term_count() > 1 ? "(" + den.render() + ")" : den.render();
  return n + "/" + d;
}

FiberResult kernel_at(const LinearFormMatrix& d, const std::vector<Rational>& alpha,
                      const std::optional<Rational>& q0, const QConstraintSet& constraints) {
  if (static_cast<int>(alpha.size()) != d.cols()) {
    throw Error("alpha has " + std::to_string(alpha.size()) + " coordinates, expected " +
                std::to_string(d.cols()));
  }
  bool all_zero = true;
  for (const auto& a : alpha) {
    if (!is_zero(a)) all_zero = false;
  }
  if (all_zero) throw Error("alpha must be a nonzero projective point");
  if (q0 && !constraints.admits(*q0)) {
    throw Error("q = " + render_rational(*q0) + " violates a declared constraint");
  }

  DenseMatrix<Laurent> m = d.evaluate(alpha);
  if (q0) {
    for (auto& e : m.a) e = Laurent(e.eval(*q0));
  }

  auto raw = ff_kernel_basis(m);
  FiberResult out;
  out.rank = d.cols() - static_cast<int>(raw.size());
  for (const auto& v : raw) {
    const Laurent* first = nullptr;
    for (const auto& e : v) {
      if (!e.is_zero()) {
        first = &e;
        break;
      }
    }
    if (!first) throw Error("internal: zero kernel vector");
    std::vector<RatFunc> vec;
    vec.reserve(v.size());
    for (const auto& e : v) vec.push_back(RatFunc::reduced(e, *first));
    out.basis.push_back(std::move(vec));
  }
  return out;
}

SymbolicFiber kernel_on_subspace(const LinearFormMatrix& d, const std::vector<int>& zero_vars) {
  DenseMatrix<MultiPoly> m = d.restrict_to_subspace(zero_vars);
  auto raw = ff_kernel_basis(m);
  SymbolicFiber out;
  out.rank = d.cols() - static_cast<int>(raw.size());
  for (auto& v : raw) {
    // Primitive normalization: common scalar content, common monomial
    // factor, common q-power, and a positive leading coefficient.
    Laurent scalar;
    std::optional<Monomial> mono;
    long emin = 0;
    bool emin_set = false;
    for (const auto& e : v) {
      if (e.is_zero()) continue;
      scalar = laurent_gcd(scalar, e.content());
      Monomial c = e.monomial_content();
      mono = mono ? Monomial::componentwise_min(*mono, c) : c;
      for (const auto& [mo, co] : e.terms()) {
        (void)mo;
        if (!emin_set || co.low_exponent() < emin) {
          emin = co.low_exponent();
          emin_set = true;
        }
      }
    }
    Laurent divisor = scalar.is_zero() ? Laurent::one() : scalar * Laurent::q(emin);
    std::vector<MultiPoly> vec = std::move(v);
    const MultiPoly* first = nullptr;
    for (auto& e : vec) {
      if (e.is_zero()) continue;
      if (mono && !mono->is_one()) e = e.divide_by_monomial(*mono);
      if (!divisor.is_one()) {
        MultiPoly reduced(e.nvars());
        for (const auto& [mo, co] : e.terms()) reduced.add_term(mo, co.exact_div(divisor));
        e = std::move(reduced);
      }
      if (!first) first = &e;
    }
    if (first && sgn(first->leading_term().second.terms().rbegin()->second) < 0) {
      for (auto& e : vec) e = -e;
    }
    out.basis.push_back(std::move(vec));
  }
  return out;
}

}  // namespace ps
