#include <doctest.h>

#include "ps/parse.hpp"
#include "support/build.hpp"
#include "support/random_gen.hpp"

using namespace ps;
using namespace ps::testing;

namespace {

Presentation parse_rel(const std::string& body) {
  return parse_presentation("generators: x1 x2 x3 x4\nrel: " + body + "\n");
}

}  // namespace

TEST_CASE("relation words collect with coefficients") {
  Presentation p = parse_rel("x2*x1 - q*x1*x2");
  const Relation& r = p.relations()[0];
  CHECK(r.words().size() == 2);
  CHECK(r.coeff(1, 0) == L(1));
  CHECK(r.coeff(0, 1) == -Lq());
}

TEST_CASE("parenthesized Laurent coefficients") {
  Presentation p = parse_rel("x4*x1 - x1*x4 - (q - q^-1)*x2*x3");
  const Relation& r = p.relations()[0];
  CHECK(r.coeff(3, 0) == L(1));
  CHECK(r.coeff(0, 3) == -L(1));
  CHECK(r.coeff(1, 2) == -(Lq() - Lq(-1)));
}

TEST_CASE("degree errors") {
  CHECK_THROWS_AS(parse_rel("x1*x2*x3"), ParseError);
  CHECK_THROWS_AS(parse_rel("x1"), ParseError);
  CHECK_THROWS_AS(parse_rel("q*x1"), ParseError);
  CHECK_THROWS_AS(parse_rel("x1^2"), ParseError);
}

TEST_CASE("unknown generator and identifier errors") {
  CHECK_THROWS_AS(parse_rel("x5*x1"), ParseError);
  CHECK_THROWS_AS(parse_rel("y*x1"), ParseError);
  CHECK_THROWS_AS(parse_rel("(x1 + x2)*x3"), ParseError);
}

TEST_CASE("zero relation is rejected") {
  CHECK_THROWS_AS(parse_rel("x1*x2 - x1*x2"), ParseError);
}

TEST_CASE("malformed and zero constraints") {
  CHECK_THROWS_AS(parse_presentation("generators: x1 x2\nconstraint: q - q\nrel: x1*x2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x1 x2\nconstraint: x1\nrel: x1*x2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x1 x2\nconstraint: q +\nrel: x1*x2\n"),
                  ParseError);
}

TEST_CASE("structure errors carry line information") {
  try {
    parse_presentation("generators: x1 x2\nrel: x1*x2 +\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 0);
  }
  CHECK_THROWS_AS(parse_presentation("rel: x1*x2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x1 x2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: x2 x1\nrel: x1*x2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
}

TEST_CASE("like terms combine") {
  Presentation a = parse_rel("x1*x2 + x1*x2");
  Presentation b = parse_rel("2*x1*x2");
  CHECK(a == b);
}

TEST_CASE("whitespace and exponent synonyms do not change the parse") {
  Presentation a = parse_presentation(
      "generators: x1 x2 x3 x4\nconstraint: q^2 - 1\nrel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3\n");
  Presentation b = parse_presentation(
      "generators:   x1  x2 x3 x4\nconstraint: q**2-1\nrel:x4 * x1-x1*x4-( q - q**-1 )*x2*x3\n");
  CHECK(a == b);
}

TEST_CASE("comments and blank lines are ignored") {
  Presentation a = parse_presentation(
      "# header\ngenerators: x1 x2\n\n# a comment\nrel: x1*x2 # trailing\n");
  CHECK(a.generator_count() == 2);
  CHECK(a.relation_count() == 1);
}

TEST_CASE("rational and power coefficients") {
  Presentation p = parse_rel("3/2*x1*x2 + (1/2*q^2 - 2)*x2*x1 + (q + 1)^2*x3*x4");
  const Relation& r = p.relations()[0];
  CHECK(r.coeff(0, 1) == Laurent(make_rational(3, 2)));
  CHECK(r.coeff(1, 0) == Laurent(make_rational(1, 2), 2) - L(2));
  CHECK(r.coeff(2, 3) == (Lq() + L(1)) * (Lq() + L(1)));
}

TEST_CASE("round trip on fixed presentations") {
  const char* text =
      "generators: x1 x2 x3 x4\n"
      "constraint: q^2 - 1\n"
      "rel: x2*x1 - q*x1*x2\n"
      "rel: x2*x3 - x3*x2\n"
      "rel: x3*x1 - q*x1*x3\n"
      "rel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3\n"
      "rel: x4*x2 - q*x2*x4\n"
      "rel: x4*x3 - q*x3*x4\n";
  Presentation p = parse_presentation(text);
  CHECK(parse_presentation(render_presentation(p)) == p);

  Presentation single = parse_presentation("generators: x1\nrel: x1*x1\n");
  CHECK(parse_presentation(render_presentation(single)) == single);
}

TEST_CASE("round trip on random presentations") {
  Rng rng(4242);
  for (int i = 0; i < 100; ++i) {
    Presentation p = random_presentation(rng);
    CHECK(parse_presentation(render_presentation(p)) == p);
  }
}
