#include "ps/linmat.hpp"

#include <algorithm>

namespace ps {

BilinearForm::BilinearForm(const Relation& r) : n_(r.generator_count()) {
  b_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), Laurent());
  for (const auto& [word, c] : r.words()) {
    b_[idx(word.first, word.second)] = c;
  }
}

Laurent BilinearForm::eval(const std::vector<Laurent>& alpha,
                           const std::vector<Laurent>& beta) const {
  if (static_cast<int>(alpha.size()) != n_ || static_cast<int>(beta.size()) != n_) {
    throw Error("bilinear evaluation point size mismatch");
  }
  Laurent acc;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Laurent& c = entry(i, j);
      if (!c.is_zero()) {
        acc = acc + c * alpha[static_cast<size_t>(i)] * beta[static_cast<size_t>(j)];
      }
    }
  }
  return acc;
}

MultiPoly BilinearForm::eval_poly(const std::vector<MultiPoly>& alpha,
                                  const std::vector<MultiPoly>& beta) const {
  if (alpha.empty() || static_cast<int>(alpha.size()) != n_ ||
      static_cast<int>(beta.size()) != n_) {
    throw Error("bilinear evaluation point size mismatch");
  }
  MultiPoly acc(alpha.front().nvars());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Laurent& c = entry(i, j);
      if (!c.is_zero()) {
        acc = acc + alpha[static_cast<size_t>(i)] * beta[static_cast<size_t>(j)] * c;
      }
    }
  }
  return acc;
}

LinearFormMatrix::LinearFormMatrix(const Presentation& p)
    : rows_(p.relation_count()), cols_(p.generator_count()) {
  const int n = cols_;
  entries_.assign(static_cast<size_t>(rows_) * static_cast<size_t>(n), MultiPoly(n));
  for (int k = 0; k < rows_; ++k) {
    const Relation& rel = p.relations()[static_cast<size_t>(k)];
    for (const auto& [word, c] : rel.words()) {
      // g(alpha, beta) = sum c_ij a_i b_j, so column j picks up c_ij * a_i.
      entries_[static_cast<size_t>(k) * n + static_cast<size_t>(word.second)]
          .add_term(Monomial::variable(n, word.first), c);
    }
  }
}

LinearFormMatrix::LinearFormMatrix(int rows, int cols, std::vector<MultiPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_)) {
    throw Error("linear form matrix entry count mismatch");
  }
}

LinearFormMatrix LinearFormMatrix::substitute_zero(int var) const {
  std::vector<MultiPoly> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.substitute_zero(var));
  return LinearFormMatrix(rows_, cols_, std::move(out));
}

LinearFormMatrix LinearFormMatrix::specialize_q(const Rational& q0) const {
  std::vector<MultiPoly> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.specialize_q(q0));
  return LinearFormMatrix(rows_, cols_, std::move(out));
}

DenseMatrix<Laurent> LinearFormMatrix::evaluate(const std::vector<Rational>& alpha) const {
  std::vector<Laurent> point;
  point.reserve(alpha.size());
  for (const auto& a : alpha) point.emplace_back(a);
  DenseMatrix<Laurent> m(rows_, cols_, Laurent());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = entry(i, j).eval(point);
  }
  return m;
}

DenseMatrix<MultiPoly> LinearFormMatrix::restrict_to_subspace(
    const std::vector<int>& zero_vars) const {
  DenseMatrix<MultiPoly> m(rows_, cols_, MultiPoly(cols_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      MultiPoly e = entry(i, j);
      for (int v : zero_vars) e = e.substitute_zero(v);
      m.at(i, j) = std::move(e);
    }
  }
  return m;
}

LinearFormMatrix build_matrix(const Presentation& p) { return LinearFormMatrix(p); }

MultiPoly subset_determinant(const LinearFormMatrix& d, const std::vector<int>& rows) {
  const int n = d.cols();
  if (static_cast<int>(rows.size()) != n) throw Error("row subset size must equal column count");
  DenseMatrix<MultiPoly> m(n, n, MultiPoly(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = d.entry(rows[static_cast<size_t>(i)], j);
  }
  return ff_determinant(m);
}

std::vector<std::vector<int>> row_subsets(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

MinorSet maximal_minors(const LinearFormMatrix& d) {
  const int m = d.rows();
  const int n = d.cols();
  if (m < n) {
    throw Error("fewer relations than generators: every maximal minor is undefined and the "
                "point scheme is all of projective space");
  }
  MinorSet out;
  for (const auto& subset : row_subsets(m, n)) {
    out.minors.push_back({subset, subset_determinant(d, subset)});
  }
  for (const auto& entry : out.minors) {
    if (entry.value.is_zero()) {
      ++out.zero_count;
      continue;
    }
    MultiPoly canon = entry.value.canonical_form();
    auto it = std::find_if(out.nonzero_reduced.begin(), out.nonzero_reduced.end(),
                           [&](const MinorSet::Reduced& r) { return r.canonical == canon; });
    if (it == out.nonzero_reduced.end()) {
      out.nonzero_reduced.push_back({std::move(canon), entry.value, {entry.rows}});
    } else {
      it->rows.push_back(entry.rows);
    }
  }
  return out;
}

}  // namespace ps
