#pragma once

/*
 * presentation.hpp
 * ----------------
 * A quadratic algebra presentation: n generators x1..xn, m noncommutative
 * degree-2 relations with Laurent coefficients, and the declared
 * nonvanishing constraints on q.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ps/laurent.hpp"

namespace ps {

// One relation sum c_{ij} * x_i * x_j with 0-based word indices.
class Relation {
 public:
  using WordMap = std::map<std::pair<int, int>, Laurent>;

  explicit Relation(int n) : n_(n) {}

  int generator_count() const { return n_; }
  const WordMap& words() const { return words_; }
  bool is_zero() const { return words_.empty(); }

  void add_word(int i, int j, const Laurent& c);  // combines like terms

  const Laurent& coeff(int i, int j) const;

  bool operator==(const Relation& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Relation& o) const { return !(*this == o); }

 private:
  int n_;
  WordMap words_;  // (i, j) -> nonzero coefficient
};

class Presentation {
 public:
  Presentation(int n, std::vector<Relation> relations, QConstraintSet constraints)
      : n_(n), relations_(std::move(relations)), constraints_(std::move(constraints)) {}

  int generator_count() const { return n_; }
  int relation_count() const { return static_cast<int>(relations_.size()); }
  const std::vector<Relation>& relations() const { return relations_; }
  const QConstraintSet& constraints() const { return constraints_; }
  std::string generator_name(int i) const { return "x" + std::to_string(i + 1); }

  // Relabels generators by v -> perm[v] (a bijection on 0..n-1).
  Presentation permute_generators(const std::vector<int>& perm) const;

  bool operator==(const Presentation& o) const {
    return n_ == o.n_ && relations_ == o.relations_ && constraints_ == o.constraints_;
  }
  bool operator!=(const Presentation& o) const { return !(*this == o); }

 private:
  int n_;
  std::vector<Relation> relations_;  // order preserved; defines matrix rows
  QConstraintSet constraints_;
};

}  // namespace ps
