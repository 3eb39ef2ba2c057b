#include "ps/presentation.hpp"

namespace ps {

void Relation::add_word(int i, int j, const Laurent& c) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw Error("relation word index out of range");
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto [it, inserted] = words_.emplace(key, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) words_.erase(it);
  }
}

const Laurent& Relation::coeff(int i, int j) const {
  static const Laurent kZero;
  auto it = words_.find({i, j});
  return it == words_.end() ? kZero : it->second;
}

Presentation Presentation::permute_generators(const std::vector<int>& perm) const {
  std::vector<Relation> rels;
  rels.reserve(relations_.size());
  for (const auto& r : relations_) {
    Relation pr(n_);
    for (const auto& [w, c] : r.words()) {
      pr.add_word(perm[static_cast<size_t>(w.first)], perm[static_cast<size_t>(w.second)], c);
    }
    rels.push_back(std::move(pr));
  }
  return Presentation(n_, std::move(rels), constraints_);
}

}  // namespace ps
