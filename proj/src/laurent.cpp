#include "ps/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ps {
namespace {

// Exponents stay far below this in practice; anything beyond is a bug or
// abuse, and exactness demands a hard stop rather than wraparound.
constexpr long kMaxExponent = 1L << 40;

long checked_add(long a, long b) {
  long r = 0;
  if (__builtin_add_overflow(a, b, &r) || r > kMaxExponent || r < -kMaxExponent) {
    throw ExponentOverflow("q-exponent overflow in Laurent arithmetic");
  }
  return r;
}

long checked_mul(long a, long b) {
  long r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kMaxExponent || r < -kMaxExponent) {
    throw ExponentOverflow("q-exponent overflow in Laurent arithmetic");
  }
  return r;
}

// Dense coefficient vector c[0..deg], c[0] != 0 unless empty (= zero poly).
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of a by b over Q[t]; b nonzero.
Dense poly_rem(Dense a, const Dense& b) {
  while (deg(a) >= deg(b)) {
    Rational f = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= f * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Dense poly_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) {
      // Monic normalization keeps the rationals small during Euclid.
      Rational lead = b.back();
      for (auto& c : b) c /= lead;
    }
  }
  return a;
}

// Laurent -> (low exponent, dense poly with nonzero constant term).
std::pair<long, Dense> to_dense(const Laurent& s) {
  long low = s.low_exponent();
  long high = s.high_exponent();
  Dense p(static_cast<size_t>(high - low + 1), Rational(0));
  for (const auto& [e, c] : s.terms()) p[static_cast<size_t>(e - low)] = c;
  return {low, p};
}

Laurent from_dense(long low, const Dense& p) {
  Laurent r;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!is_zero(p[i])) r.add_term(checked_add(low, static_cast<long>(i)), p[i]);
  }
  return r;
}

// Scales to integer coefficients with content 1 and positive constant term.
void make_primitive(Dense& p) {
  if (p.empty()) return;
  Integer den_lcm = 1;
  for (const auto& c : p) {
    if (!is_zero(c)) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Integer num_gcd = 0;
  for (auto& c : p) {
    c *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  for (auto& c : p) c /= num_gcd;
  // Lowest (constant) coefficient made positive.
  size_t first = 0;
  while (first < p.size() && is_zero(p[first])) ++first;
  if (first < p.size() && sgn(p[first]) < 0) {
    for (auto& c : p) c = -c;
  }
}

}  // namespace

Laurent::Laurent(const Rational& c) {
  if (!ps::is_zero(c)) terms_[0] = c;
}

Laurent::Laurent(const Rational& c, long exponent) {
  if (!ps::is_zero(c)) terms_[exponent] = c;
}

Laurent Laurent::q(long exponent) { return Laurent(Rational(1), exponent); }

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && ps::is_one(terms_.begin()->second);
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long Laurent::low_exponent() const {
  if (is_zero()) throw Error("low_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

long Laurent::high_exponent() const {
  if (is_zero()) throw Error("high_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

const Rational& Laurent::coeff(long exponent) const {
  static const Rational kZero(0);
  auto it = terms_.find(exponent);
  return it == terms_.end() ? kZero : it->second;
}

void Laurent::add_term(long exponent, const Rational& c) {
  if (ps::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (ps::is_zero(it->second)) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      r.add_term(checked_add(e1, e2), c1 * c2);
    }
  }
  return r;
}

std::optional<Laurent> Laurent::try_div(const Laurent& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return Laurent();
  auto [la, pa] = to_dense(*this);
  auto [lb, pb] = to_dense(o);
  if (pa.size() < pb.size()) return std::nullopt;
  // Long division over Q[t]; the quotient exists in Q[q,q^-1] iff the
  // polynomial remainder vanishes (q-power mismatches are absorbed into
  // the exponent shift).
  Dense quot(pa.size() - pb.size() + 1, Rational(0));
  Dense rem = pa;
  while (deg(rem) >= deg(pb)) {
    Rational f = rem.back() / pb.back();
    int shift = deg(rem) - deg(pb);
    quot[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= deg(pb); ++i) rem[i + shift] -= f * pb[i];
    trim(rem);
    if (rem.empty()) break;
  }
  if (!rem.empty()) return std::nullopt;
  return from_dense(checked_add(la, -lb), quot);
}

Laurent Laurent::exact_div(const Laurent& o) const {
  if (o.is_zero()) throw DivisionError("Laurent division by zero");
  auto q = try_div(o);
  if (!q) {
    throw DivisionError("inexact Laurent division: " + render() + " by " + o.render(),
                        o.render());
  }
  return *q;
}

Laurent Laurent::pow(long e) const {
  if (e == 0) return one();
  if (e < 0) {
    if (!is_monomial()) throw Error("negative power of a non-monomial Laurent polynomial");
    const auto& [exp, c] = *terms_.begin();
    return Laurent(rational_pow(c, e), checked_mul(exp, e));
  }
  Laurent r = one();
  Laurent base = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Laurent Laurent::unit_part() const {
  const auto& [e, c] = *terms_.begin();
  return Laurent(Rational(sgn(c) < 0 ? -1 : 1), e);
}

Laurent Laurent::unit_normal() const {
  if (is_zero()) return Laurent();
  return exact_div(unit_part());
}

Rational Laurent::eval(const Rational& q0) const {
  if (!is_zero() && low_exponent() < 0 && ps::is_zero(q0)) {
    throw Error("evaluation of a negative q-power at q = 0");
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * rational_pow(q0, e);
  return acc;
}

std::string Laurent::render() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponents, matching how the factors are usually written.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    if (e == 0) {
      out << render_rational(a);
    } else {
      if (!ps::is_one(a)) out << render_rational(a) << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  if (a.is_zero()) return laurent_gcd(b, a);
  if (b.is_zero()) {
    auto [la, pa] = to_dense(a);
    make_primitive(pa);
    return from_dense(0, pa);
  }
  auto [la, pa] = to_dense(a);
  auto [lb, pb] = to_dense(b);
  Dense g = poly_gcd(pa, pb);
  make_primitive(g);
  return from_dense(0, g);
}

std::optional<Laurent> laurent_sqrt(const Laurent& s) {
  if (s.is_zero()) return Laurent();
  long low = s.low_exponent();
  if (low % 2 != 0) return std::nullopt;
  auto [l, p] = to_dense(s);
  if (deg(p) % 2 != 0) return std::nullopt;
  auto c0 = rational_sqrt(p[0]);
  if (!c0 || is_zero(*c0)) return std::nullopt;
  int half = deg(p) / 2;
  Dense t(static_cast<size_t>(half + 1), Rational(0));
  t[0] = *c0;
  // Coefficient matching from the constant term upward.
  for (int k = 1; k <= half; ++k) {
    Rational acc = p[static_cast<size_t>(k)];
    for (int i = 1; i < k; ++i) acc -= t[static_cast<size_t>(i)] * t[static_cast<size_t>(k - i)];
    t[static_cast<size_t>(k)] = acc / (2 * t[0]);
  }
  Laurent cand = from_dense(low / 2, t);
  if (cand * cand == s) return cand;
  return std::nullopt;
}

QConstraintSet::QConstraintSet() { polys_.push_back(Laurent::q()); }

QConstraintSet::QConstraintSet(const std::vector<Laurent>& polys) : QConstraintSet() {
  for (const auto& p : polys) add(p);
}

void QConstraintSet::add(const Laurent& p) {
  if (p.is_zero()) throw Error("constraint polynomial must be nonzero");
  Laurent canon = p.unit_normal();
  if (canon.is_one()) return;  // a unit is vacuously nonzero (covers q^k)
  if (std::find(polys_.begin(), polys_.end(), canon) == polys_.end()) {
    polys_.push_back(canon);
  }
}

std::vector<Laurent> QConstraintSet::explicit_polys() const {
  return {polys_.begin() + 1, polys_.end()};
}

bool QConstraintSet::admits(const Rational& q0) const {
  if (ps::is_zero(q0)) return false;
  for (const auto& p : polys_) {
    if (ps::is_zero(p.eval(q0))) return false;
  }
  return true;
}

UnitSplit split_unit_under(const Laurent& s, const QConstraintSet& c) {
  if (s.is_zero()) throw Error("unit test on the zero scalar");
  Laurent residual = s.unit_normal();
  for (const auto& p : c.polys()) {
    if (p.is_constant()) continue;
    for (;;) {
      Laurent g = laurent_gcd(residual, p);
      if (g.is_constant()) break;
      residual = residual.exact_div(g).unit_normal();
    }
  }
  // Rational factors are units of the field; keep only the primitive part.
  residual = laurent_gcd(residual, Laurent());
  return UnitSplit{s.exact_div(residual), residual};
}

bool is_unit_under(const Laurent& s, const QConstraintSet& c) {
  return split_unit_under(s, c).residual.is_one();
}

}  // namespace ps
