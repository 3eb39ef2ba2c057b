#pragma once

/*
 * monomial.hpp
 * ------------
 * Exponent vectors for the commuting coordinates a1..an, ordered by graded
 * reverse lexicographic order (ties in total degree broken by the rightmost
 * differing exponent).  The fixed order keeps every rendering and golden
 * file byte-stable.
 */

#include <string>
#include <vector>

#include "ps/error.hpp"

namespace ps {

class Monomial {
 public:
  explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
  static Monomial variable(int nvars, int v, int power = 1) {
    Monomial m(nvars);
    m.exps_[static_cast<size_t>(v)] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int v) const { return exps_[static_cast<size_t>(v)]; }
  const std::vector<int>& exponents() const { return exps_; }

  int total_degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
  }
  bool is_one() const { return total_degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
  }

  // this / o; requires o.divides(*this).
  Monomial exact_div(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < exps_.size(); ++i) {
      r.exps_[i] -= o.exps_[i];
      if (r.exps_[i] < 0) throw DivisionError("inexact monomial division");
    }
    return r;
  }

  static Monomial componentwise_min(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exps_.size(); ++i) {
      if (b.exps_[i] < r.exps_[i]) r.exps_[i] = b.exps_[i];
    }
    return r;
  }

  // Indices of variables with positive exponent.
  std::vector<int> support() const {
    std::vector<int> s;
    for (size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > 0) s.push_back(static_cast<int>(i));
    }
    return s;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // "a1^2*a3" with 1-based variable numbering; "1" for the empty monomial.
  std::string render(const std::string& var_prefix = "a") const {
    if (is_one()) return "1";
    std::string out;
    for (size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += var_prefix + std::to_string(i + 1);
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out;
  }

 private:
  std::vector<int> exps_;
};

// Graded reverse lexicographic "less than".
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree();
    int db = b.total_degree();
    if (da != db) return da < db;
    for (int i = a.nvars() - 1; i >= 0; --i) {
      int ea = a.exponent(i);
      int eb = b.exponent(i);
      if (ea != eb) return ea > eb;  // larger rightmost exponent = smaller
    }
    return false;
  }
};

inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  return GrevlexLess{}(b, a);
}

}  // namespace ps
