#pragma once

/*
 * Independent oracles for the test suites.  These deliberately use naive
 * algorithms (cofactor expansion, exhaustive subset enumeration, minor-rank
 * search) so they share no code path with the implementations they check.
 */

#include <algorithm>
#include <vector>

#include "ps/elim.hpp"
#include "ps/monomial.hpp"

namespace ps::testing {

// Determinant by recursive Laplace expansion along the first row.
template <typename R>
R cofactor_determinant(const DenseMatrix<R>& m) {
  using T = RingTraits<R>;
  const int n = m.rows;
  if (n == 1) return m.at(0, 0);
  R acc = T::zero_like(m.at(0, 0));
  for (int j = 0; j < n; ++j) {
    if (T::is_zero(m.at(0, j))) continue;
    DenseMatrix<R> sub(n - 1, n - 1, T::zero_like(m.at(0, 0)));
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    R term = m.at(0, j) * cofactor_determinant(sub);
    if (j % 2 == 0) {
      acc = acc + term;
    } else {
      acc = acc - term;
    }
  }
  return acc;
}

// Rank as the largest k admitting a nonzero k x k minor.
template <typename R>
int minor_rank(const DenseMatrix<R>& m) {
  using T = RingTraits<R>;
  auto subsets = [](int total, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    for (;;) {
      out.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[static_cast<size_t>(i)] == total - k + i) --i;
      if (i < 0) break;
      ++cur[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
      }
    }
    return out;
  };
  for (int k = std::min(m.rows, m.cols); k >= 1; --k) {
    for (const auto& rows : subsets(m.rows, k)) {
      for (const auto& cols : subsets(m.cols, k)) {
        DenseMatrix<R> sub(k, k, m.at(0, 0));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            sub.at(i, j) = m.at(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
          }
        }
        if (!T::is_zero(cofactor_determinant(sub))) return k;
      }
    }
  }
  return 0;
}

// All minimal hitting sets by exhaustive enumeration over 2^n subsets.
inline std::vector<std::vector<int>> hitting_set_oracle(
    const std::vector<std::vector<int>>& supports, int nvars) {
  std::vector<std::vector<int>> hitting;
  for (unsigned mask = 1; mask < (1u << nvars); ++mask) {
    bool hits_all = true;
    for (const auto& s : supports) {
      bool hit = false;
      for (int v : s) {
        if (mask & (1u << v)) hit = true;
      }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (!hits_all) continue;
    std::vector<int> set;
    for (int v = 0; v < nvars; ++v) {
      if (mask & (1u << v)) set.push_back(v);
    }
    hitting.push_back(std::move(set));
  }
  std::vector<std::vector<int>> minimal;
  for (const auto& a : hitting) {
    bool is_min = true;
    for (const auto& b : hitting) {
      if (a == b) continue;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace ps::testing
