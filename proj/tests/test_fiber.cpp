#include <doctest.h>

#include "ps/corpus.hpp"
#include "ps/fiber.hpp"
#include "ps/parse.hpp"
#include "support/build.hpp"
#include "support/random_gen.hpp"
#include "support/sampling.hpp"

using namespace ps;
using namespace ps::testing;

namespace {

// g_k(alpha, beta) via direct bilinear evaluation, independent of the
// elimination path.  When beta was computed at a specialized q, the
// residual must be evaluated there as well.
bool relations_vanish(const Presentation& p, const std::vector<Laurent>& alpha,
                      const std::vector<Laurent>& beta,
                      const std::optional<Rational>& q0 = std::nullopt) {
  for (const auto& rel : p.relations()) {
    Laurent value = multilinearize(rel).eval(alpha, beta);
    if (q0) {
      if (!is_zero(value.eval(*q0))) return false;
    } else if (!value.is_zero()) {
      return false;
    }
  }
  return true;
}

std::vector<Laurent> to_laurent(const std::vector<Rational>& v) {
  std::vector<Laurent> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("kernel at a vertex of the first corpus scheme") {
  Presentation p = corpus_presentation("prop1");
  LinearFormMatrix d = build_matrix(p);
  FiberResult fr = kernel_at(d, {Rational(1), Rational(0), Rational(0), Rational(0)},
                             Rational(2), p.constraints());
  CHECK(fr.rank == 3);
  REQUIRE(fr.basis.size() == 1);
  const auto& beta = fr.basis[0];
  CHECK(beta[0].num == Laurent::one());
  CHECK(beta[1].is_zero());
  CHECK(beta[2].is_zero());
  CHECK(beta[3].is_zero());
}

TEST_CASE("off-scheme points have full rank and empty kernel") {
  Presentation p = corpus_presentation("prop1");
  LinearFormMatrix d = build_matrix(p);
  // (1,1,1,2): quadric value 1*1 - 1*2 != 0 and no coordinates vanish.
  FiberResult fr = kernel_at(d, {Rational(1), Rational(1), Rational(1), Rational(2)},
                             Rational(2), p.constraints());
  CHECK(fr.rank == 4);
  CHECK(fr.basis.empty());
}

TEST_CASE("kernel on the third corpus line component") {
  Presentation p = corpus_presentation("prop3");
  LinearFormMatrix d = build_matrix(p);
  FiberResult fr = kernel_at(d, {Rational(0), Rational(1), Rational(0), Rational(0)},
                             Rational(3), p.constraints());
  CHECK(fr.rank <= 3);
  REQUIRE(!fr.basis.empty());
  for (const auto& v : fr.basis) {
    std::vector<Laurent> beta;
    for (const auto& e : v) {
      REQUIRE(e.den == Laurent::one());
      beta.push_back(e.num);
    }
    std::vector<Laurent> alpha = {Laurent(), Laurent(Rational(1)), Laurent(), Laurent()};
    CHECK(relations_vanish(p, alpha, beta, Rational(3)));
  }
}

TEST_CASE("input validation") {
  Presentation p = corpus_presentation("prop1");
  LinearFormMatrix d = build_matrix(p);
  CHECK_THROWS_AS(
      kernel_at(d, {Rational(0), Rational(0), Rational(0), Rational(0)}, Rational(2),
                p.constraints()),
      Error);
  // q = 1 violates q^2 != 1; q = 0 violates invertibility.
  CHECK_THROWS_AS(kernel_at(d, {Rational(1), Rational(0), Rational(0), Rational(0)},
                            Rational(1), p.constraints()),
                  Error);
  CHECK_THROWS_AS(kernel_at(d, {Rational(1), Rational(0), Rational(0), Rational(0)},
                            Rational(0), p.constraints()),
                  Error);
  CHECK_THROWS_AS(kernel_at(d, {Rational(1), Rational(0)}, Rational(2), p.constraints()),
                  Error);
}

TEST_CASE("symbolic q kernels") {
  Presentation p = corpus_presentation("prop1");
  LinearFormMatrix d = build_matrix(p);
  // On the quadric with q symbolic: (1, 1, 1, 1) since 1*1 = 1*1.
  FiberResult fr = kernel_at(d, {Rational(1), Rational(1), Rational(1), Rational(1)},
                             std::nullopt, p.constraints());
  CHECK(fr.rank == 3);
  REQUIRE(fr.basis.size() == 1);
  std::vector<Laurent> alpha(4, Laurent(Rational(1)));
  // Clear denominators: scale beta by the product of denominators.
  std::vector<Laurent> beta;
  Laurent common = Laurent::one();
  for (const auto& e : fr.basis[0]) common = common * e.den;
  for (const auto& e : fr.basis[0]) beta.push_back(e.num * common.exact_div(e.den));
  CHECK(relations_vanish(p, alpha, beta));
}

TEST_CASE("kernel is independent of row order") {
  Presentation p = corpus_presentation("prop2");
  // Reversed relation order gives the same normalized kernel.
  std::vector<Relation> rev(p.relations().rbegin(), p.relations().rend());
  Presentation shuffled(p.generator_count(), rev, p.constraints());
  LinearFormMatrix d1 = build_matrix(p);
  LinearFormMatrix d2 = build_matrix(shuffled);
  std::vector<Rational> alpha = {Rational(1), Rational(2), Rational(1), Rational(2)};
  // alpha lies on the quadric x1*x2 - x3*x4 = 0.
  FiberResult f1 = kernel_at(d1, alpha, Rational(5), p.constraints());
  FiberResult f2 = kernel_at(d2, alpha, Rational(5), p.constraints());
  CHECK(f1.rank == f2.rank);
  REQUIRE(f1.basis.size() == f2.basis.size());
  for (size_t i = 0; i < f1.basis.size(); ++i) {
    CHECK(f1.basis[i] == f2.basis[i]);
  }
}

TEST_CASE("symbolic kernel over a whole subspace component") {
  Presentation p = corpus_presentation("prop1");
  LinearFormMatrix d = build_matrix(p);
  // V(x2, x3): alpha = (a1, 0, 0, a4) with a1, a4 symbolic.
  SymbolicFiber sf = kernel_on_subspace(d, {1, 2});
  CHECK(sf.rank == 3);
  REQUIRE(sf.basis.size() == 1);
  // The fiber over the generic point of the line: beta = (a1, 0, 0, a4).
  CHECK(sf.basis[0][0] == PM({1, 0, 0, 0}));
  CHECK(sf.basis[0][1].is_zero());
  CHECK(sf.basis[0][2].is_zero());
  CHECK(sf.basis[0][3] == PM({0, 0, 0, 1}));

  // Every relation vanishes identically at (alpha, beta) as polynomials.
  std::vector<MultiPoly> alpha;
  for (int v = 0; v < 4; ++v) {
    alpha.push_back((v == 1 || v == 2) ? MultiPoly(4) : MultiPoly::variable(4, v));
  }
  for (const auto& rel : p.relations()) {
    CHECK(multilinearize(rel).eval_poly(alpha, sf.basis[0]).is_zero());
  }
}

TEST_CASE("sampled fiber points satisfy every relation") {
  Rng rng(321);
  for (const char* name : {"prop1", "prop3", "prop5"}) {
    Presentation p = corpus_presentation(name);
    LinearFormMatrix d = build_matrix(p);
    SchemeDescription desc = point_scheme(p);
    Rational q0 = random_admissible_q(rng, p.constraints());
    for (const auto& comp : desc.components) {
      for (int i = 0; i < 5; ++i) {
        auto alpha = sample_on_component(rng, comp, q0);
        REQUIRE(alpha.has_value());
        FiberResult fr = kernel_at(d, *alpha, q0, p.constraints());
        CHECK(fr.rank <= 3);
        for (const auto& v : fr.basis) {
          std::vector<Laurent> beta;
          for (const auto& e : v) {
            REQUIRE(e.den == Laurent::one());
            beta.push_back(e.num);
          }
          CHECK(relations_vanish(p, to_laurent(*alpha), beta, q0));
        }
      }
    }
  }
}
