#include "ps/rational.hpp"

namespace ps {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
}

std::string render_rational(const Rational& r) {
  return r.get_str();
}

Rational rational_pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (is_zero(r)) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return Rational(0);
  }
  Integer num, den;
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), mag);
  return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (is_zero(r)) return Rational(0);
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den().get_mpz_t())) {
    return std::nullopt;
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den().get_mpz_t());
  return make_rational(num, den);
}

}  // namespace ps
