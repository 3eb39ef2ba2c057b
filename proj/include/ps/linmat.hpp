#pragma once

/*
 * linmat.hpp
 * ----------
 * Multilinearization of quadratic relations at p = (alpha, beta), the
 * matrix D of alpha-linear forms with D * beta = (g_1(p), ..., g_m(p)),
 * and the exact computation of all maximal minors of D.
 */

#include <optional>
#include <vector>

#include "ps/elim.hpp"
#include "ps/multipoly.hpp"
#include "ps/presentation.hpp"

namespace ps {

// Coefficient matrix B with g(alpha, beta) = alpha^T B beta.
class BilinearForm {
 public:
  explicit BilinearForm(const Relation& r);

  int nvars() const { return n_; }
  const Laurent& entry(int i, int j) const { return b_[idx(i, j)]; }

  // Exact evaluation; alpha and beta entries may be symbolic polynomials.
  Laurent eval(const std::vector<Laurent>& alpha, const std::vector<Laurent>& beta) const;
  MultiPoly eval_poly(const std::vector<MultiPoly>& alpha,
                      const std::vector<MultiPoly>& beta) const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }
  int n_;
  std::vector<Laurent> b_;
};

inline BilinearForm multilinearize(const Relation& r) { return BilinearForm(r); }

// m x n matrix whose (k, j) entry is the alpha-linear form sum_i c^k_ij a_i.
class LinearFormMatrix {
 public:
  explicit LinearFormMatrix(const Presentation& p);
  LinearFormMatrix(int rows, int cols, std::vector<MultiPoly> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const MultiPoly& entry(int k, int j) const {
    return entries_[static_cast<size_t>(k) * cols_ + static_cast<size_t>(j)];
  }

  // D with a_v set to zero in every entry.
  LinearFormMatrix substitute_zero(int var) const;
  LinearFormMatrix specialize_q(const Rational& q0) const;

  // Entries evaluated at a rational alpha (q stays symbolic).
  DenseMatrix<Laurent> evaluate(const std::vector<Rational>& alpha) const;
  // Entries with the variables in `zero_vars` set to zero, as polynomials
  // in the remaining (symbolic) coordinates.
  DenseMatrix<MultiPoly> restrict_to_subspace(const std::vector<int>& zero_vars) const;

 private:
  int rows_;
  int cols_;
  std::vector<MultiPoly> entries_;  // row-major
};

LinearFormMatrix build_matrix(const Presentation& p);

// Exact determinant of the selected square row subset (ascending order).
MultiPoly subset_determinant(const LinearFormMatrix& d, const std::vector<int>& rows);

struct MinorSet {
  // One entry per n-row subset, in lexicographic subset order.
  struct Entry {
    std::vector<int> rows;  // 0-based, ascending
    MultiPoly value;
  };
  std::vector<Entry> minors;

  // Distinct nonzero minors up to Laurent units: canonical forms paired
  // with every row subset that produced them, ordered by first appearance.
  struct Reduced {
    MultiPoly canonical;        // unit-normalized
    MultiPoly representative;   // raw minor of the first producing subset
    std::vector<std::vector<int>> rows;
  };
  std::vector<Reduced> nonzero_reduced;

  int zero_count = 0;
};

// All C(m, n) maximal minors; requires m >= n (the rank can drop nowhere
// otherwise and the point scheme is all of P^{n-1}).
MinorSet maximal_minors(const LinearFormMatrix& d);

std::vector<std::vector<int>> row_subsets(int m, int n);  // lexicographic

}  // namespace ps
