#pragma once

/*
 * elim.hpp
 * --------
 * Fraction-free (Bareiss) elimination over an exact integral domain:
 * determinants, ranks and kernel bases with no intermediate fractions.
 * Every division performed is exact by Sylvester's determinant identity.
 *
 * Instantiated with Rational, Laurent and MultiPoly entries.
 */

#include <vector>

#include "ps/error.hpp"
#include "ps/laurent.hpp"
#include "ps/multipoly.hpp"
#include "ps/rational.hpp"

namespace ps {

template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational div_exact(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingTraits<Laurent> {
  static Laurent zero_like(const Laurent&) { return Laurent(); }
  static Laurent one_like(const Laurent&) { return Laurent::one(); }
  static bool is_zero(const Laurent& a) { return a.is_zero(); }
  static Laurent div_exact(const Laurent& a, const Laurent& b) { return a.exact_div(b); }
};

template <>
struct RingTraits<MultiPoly> {
  static MultiPoly zero_like(const MultiPoly& a) { return MultiPoly::zero(a.nvars()); }
  static MultiPoly one_like(const MultiPoly& a) {
    return MultiPoly::constant(a.nvars(), Laurent::one());
  }
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
  static MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b) { return a.exact_div(b); }
};

template <typename R>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<R> a;

  DenseMatrix(int r, int c, const R& fill)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

  R& at(int i, int j) { return a[static_cast<size_t>(i) * cols + static_cast<size_t>(j)]; }
  const R& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + static_cast<size_t>(j)];
  }
  void swap_rows(int i, int j) {
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
};

// Exact determinant of a square matrix by one-step Bareiss elimination.
template <typename R>
R ff_determinant(DenseMatrix<R> m) {
  using T = RingTraits<R>;
  if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) throw Error("determinant of an empty matrix");
  R prev = T::one_like(m.at(0, 0));
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (!T::is_zero(m.at(r, k))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return T::zero_like(m.at(0, 0));
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) =
            T::div_exact(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
      }
      m.at(i, k) = T::zero_like(prev);
    }
    prev = m.at(k, k);
  }
  R det = m.at(n - 1, n - 1);
  return negate ? T::zero_like(det) - det : det;
}

template <typename R>
struct FFReduction {
  int rank = 0;
  std::vector<int> pivot_cols;
  R denom;  // common pivot value of the reduced matrix
  DenseMatrix<R> mat;
};

// Fraction-free Gauss-Jordan (Bareiss two-sided) reduction.  On return the
// pivot rows are the first `rank` rows, every pivot entry equals `denom`,
// all other entries in pivot columns are zero, and the remaining rows are
// identically zero.
template <typename R>
FFReduction<R> ff_gauss_jordan(DenseMatrix<R> m) {
  using T = RingTraits<R>;
  if (m.a.empty()) throw Error("elimination on an empty matrix");
  R prev = T::one_like(m.a.front());
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < m.cols && pr < m.rows; ++c) {
    int pivot = -1;
    for (int r = pr; r < m.rows; ++r) {
      if (!T::is_zero(m.at(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != pr) m.swap_rows(pivot, pr);
    const R p = m.at(pr, c);
    for (int i = 0; i < m.rows; ++i) {
      if (i == pr) continue;
      const R factor = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) {
        m.at(i, j) = T::div_exact(m.at(i, j) * p - factor * m.at(pr, j), prev);
      }
    }
    prev = p;
    pivots.push_back(c);
    ++pr;
  }
  FFReduction<R> red{static_cast<int>(pivots.size()), pivots, prev, std::move(m)};
  return red;
}

template <typename R>
int ff_rank(const DenseMatrix<R>& m) {
  return ff_gauss_jordan(m).rank;
}

// Basis of the right kernel, one vector per free column; entries are exact
// ring elements (no normalization applied).
template <typename R>
std::vector<std::vector<R>> ff_kernel_basis(const DenseMatrix<R>& m) {
  using T = RingTraits<R>;
  FFReduction<R> red = ff_gauss_jordan(m);
  const R zero = T::zero_like(red.denom);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int c : red.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<R>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<R> v(static_cast<size_t>(m.cols), zero);
    v[static_cast<size_t>(f)] = red.denom;
    for (int t = 0; t < red.rank; ++t) {
      v[static_cast<size_t>(red.pivot_cols[static_cast<size_t>(t)])] =
          zero - red.mat.at(t, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ps
