#include <doctest.h>

#include "ps/elim.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"

using namespace ps;
using namespace ps::testing;

namespace {

DenseMatrix<Rational> random_matrix(Rng& rng, int rows, int cols) {
  DenseMatrix<Rational> m(rows, cols, Rational(0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng, 5);
  }
  return m;
}

DenseMatrix<Rational> product(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b) {
  DenseMatrix<Rational> m(a.rows, b.cols, Rational(0));
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) {
      Rational acc(0);
      for (int k = 0; k < a.cols; ++k) acc += a.at(i, k) * b.at(k, j);
      m.at(i, j) = acc;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("kernel vectors annihilate the matrix exactly") {
  Rng rng(777);
  for (int t = 0; t < 150; ++t) {
    int rows = rand_int(rng, 1, 6);
    int cols = rand_int(rng, 1, 6);
    // Half the cases are forced rank-deficient via a low-rank product.
    DenseMatrix<Rational> m(0, 0, Rational(0));
    if (t % 2 == 0) {
      m = random_matrix(rng, rows, cols);
    } else {
      int r = rand_int(rng, 0, std::min(rows, cols));
      if (r == 0) {
        m = DenseMatrix<Rational>(rows, cols, Rational(0));
      } else {
        m = product(random_matrix(rng, rows, r), random_matrix(rng, r, cols));
      }
    }
    int rank = ff_rank(m);
    CHECK(rank == minor_rank(m));
    auto basis = ff_kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == cols - rank);
    for (const auto& v : basis) {
      bool nonzero = false;
      for (const auto& e : v) {
        if (!is_zero(e)) nonzero = true;
      }
      CHECK(nonzero);
      for (int i = 0; i < rows; ++i) {
        Rational acc(0);
        for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[static_cast<size_t>(j)];
        CHECK(is_zero(acc));
      }
    }
  }
}

TEST_CASE("fraction-free determinant over the rationals") {
  Rng rng(778);
  for (int t = 0; t < 100; ++t) {
    int n = rand_int(rng, 1, 5);
    DenseMatrix<Rational> m = random_matrix(rng, n, n);
    CHECK(ff_determinant(m) == cofactor_determinant(m));
  }
}

TEST_CASE("kernel of symbolic matrices annihilates exactly") {
  Rng rng(779);
  for (int t = 0; t < 40; ++t) {
    int rows = rand_int(rng, 2, 4);
    int cols = rand_int(rng, 2, 4);
    DenseMatrix<MultiPoly> m(rows, cols, MultiPoly(cols));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m.at(i, j) = random_linear_entry(rng, cols);
    }
    auto basis = ff_kernel_basis(m);
    for (const auto& v : basis) {
      for (int i = 0; i < rows; ++i) {
        MultiPoly acc(cols);
        for (int j = 0; j < cols; ++j) acc = acc + m.at(i, j) * v[static_cast<size_t>(j)];
        CHECK(acc.is_zero());
      }
    }
  }
}
