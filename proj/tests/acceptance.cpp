/*
 * Acceptance suite: end-to-end checks of the full pipeline against the
 * published component lists, plus the randomized oracle equivalences.
 * Prints one PASS/FAIL line per criterion; exit status is the number of
 * failures.
 */

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ps/corpus.hpp"
#include "ps/fiber.hpp"
#include "ps/parse.hpp"
#include "ps/scheme.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"
#include "support/sampling.hpp"

using namespace ps;
using namespace ps::testing;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct MinorData {
  const char* name;
  std::vector<int> quadric_pos;
  std::vector<int> quadric_neg;
  std::vector<std::vector<int>> monomials;
};

// The published seven-minor lists: monomial * quadric up to units.
const std::vector<MinorData>& minor_data() {
  static const std::vector<MinorData> kData = {
      {"prop1",
       {0, 1, 1, 0},
       {1, 0, 0, 1},
       {{0, 0, 2, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 2, 0, 0},
        {1, 0, 1, 0}}},
      {"prop2",
       {1, 1, 0, 0},
       {0, 0, 1, 1},
       {{0, 0, 2, 0}, {0, 2, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1},
        {0, 0, 1, 1}}},
      {"prop3",
       {2, 0, 0, 0},
       {0, 1, 0, 1},
       {{2, 0, 0, 0}, {0, 0, 2, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
        {0, 0, 1, 1}}},
      {"prop4",
       {2, 0, 0, 0},
       {0, 0, 1, 1},
       {{0, 0, 2, 0}, {0, 2, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1},
        {0, 0, 1, 1}}},
      {"prop5",
       {2, 0, 0, 0},
       {0, 1, 1, 0},
       {{0, 0, 2, 0}, {0, 2, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1},
        {0, 0, 1, 1}}},
      {"prop6",
       {2, 0, 0, 0},
       {0, 1, 1, 0},
       {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 1, 0, 1},
        {1, 0, 0, 1}}},
  };
  return kData;
}

MultiPoly quadric_of(const MinorData& d) {
  return P(4, {{d.quadric_pos, L(1)}, {d.quadric_neg, L(-1)}});
}

bool check_minor_list(const MinorData& data, std::string& detail) {
  auto start = Clock::now();
  Presentation p = corpus_presentation(data.name);
  MinorSet ms = maximal_minors(build_matrix(p));
  double elapsed = ms_since(start);
  if (ms.nonzero_reduced.size() != 7) {
    detail = std::string(data.name) + ": expected 7 distinct minors, got " +
             std::to_string(ms.nonzero_reduced.size());
    return false;
  }
  MultiPoly quadric = quadric_of(data);
  for (const auto& mono : data.monomials) {
    MultiPoly expected =
        (quadric * MultiPoly::from_monomial(Monomial(mono), Laurent::one())).canonical_form();
    bool found = false;
    for (const auto& r : ms.nonzero_reduced) {
      if (r.canonical == expected) found = true;
    }
    if (!found) {
      detail = std::string(data.name) + ": missing minor " + expected.render();
      return false;
    }
  }
  if (elapsed >= 1000.0) {
    detail = std::string(data.name) + ": took " + std::to_string(elapsed) + " ms";
    return false;
  }
  return true;
}

struct SchemeData {
  const char* name;
  std::vector<std::vector<int>> subspaces;  // zero-variable sets (0-based)
  std::vector<int> quadric_pos;
  std::vector<int> quadric_neg;
  bool double_line;
};

const std::vector<SchemeData>& scheme_data() {
  static const std::vector<SchemeData> kData = {
      {"prop1", {{1, 2}}, {0, 1, 1, 0}, {1, 0, 0, 1}, false},
      {"prop2", {{1, 2}}, {1, 1, 0, 0}, {0, 0, 1, 1}, true},
      {"prop3", {{0, 2}}, {2, 0, 0, 0}, {0, 1, 0, 1}, false},
      {"prop4", {{1, 2}}, {2, 0, 0, 0}, {0, 0, 1, 1}, false},
      {"prop5", {{1, 2}}, {2, 0, 0, 0}, {0, 1, 1, 0}, false},
      {"prop6", {{0, 1}}, {2, 0, 0, 0}, {0, 1, 1, 0}, true},
  };
  return kData;
}

bool check_scheme(const SchemeData& data, std::string& detail) {
  Presentation p = corpus_presentation(data.name);
  SchemeDescription desc = point_scheme(p);
  MultiPoly quadric = P(4, {{data.quadric_pos, L(1)}, {data.quadric_neg, L(-1)}});
  size_t expected_count = data.subspaces.size() + 1;
  if (desc.components.size() != expected_count) {
    detail = std::string(data.name) + ": expected " + std::to_string(expected_count) +
             " components, got " + std::to_string(desc.components.size());
    return false;
  }
  bool quadric_found = false;
  for (const auto& c : desc.components) {
    if (c.kind() == SchemeComponent::Kind::Hypersurface && c.vars.empty() &&
        *c.equation == quadric) {
      quadric_found = true;
    }
  }
  if (!quadric_found) {
    detail = std::string(data.name) + ": quadric component missing";
    return false;
  }
  for (const auto& vars : data.subspaces) {
    bool found = false;
    for (const auto& c : desc.components) {
      if (c.kind() == SchemeComponent::Kind::CoordinateSubspace && c.vars == vars) {
        found = true;
        if (c.double_line != data.double_line) {
          detail = std::string(data.name) + ": double-line flag mismatch on " + c.render();
          return false;
        }
      }
    }
    if (!found) {
      detail = std::string(data.name) + ": subspace component missing";
      return false;
    }
  }
  size_t expected_containments = data.double_line ? 1 : 0;
  if (desc.containments.size() != expected_containments) {
    detail = std::string(data.name) + ": containment count mismatch";
    return false;
  }
  if (!desc.warnings.empty()) {
    detail = std::string(data.name) + ": unexpected warnings";
    return false;
  }
  return true;
}

bool criterion_minors_prop1(std::string& detail) { return check_minor_list(minor_data()[0], detail); }

bool criterion_minors_rest(std::string& detail) {
  for (size_t i = 1; i < minor_data().size(); ++i) {
    if (!check_minor_list(minor_data()[static_cast<size_t>(i)], detail)) return false;
  }
  return true;
}

bool criterion_substitution(std::string& detail) {
  Presentation p = corpus_presentation("prop1");
  MinorSet ms = maximal_minors(build_matrix(p));
  std::vector<MultiPoly> substituted;
  for (const auto& r : ms.nonzero_reduced) {
    MultiPoly s = r.representative.substitute_zero(2);  // a3 = 0
    if (!s.is_zero()) substituted.push_back(s.canonical_form());
  }
  std::vector<MultiPoly> expected = {PM({1, 2, 0, 1}), PM({2, 1, 0, 1}), PM({1, 1, 0, 2})};
  for (const auto& e : expected) {
    if (std::count(substituted.begin(), substituted.end(), e) != 1) {
      detail = "missing substituted minor " + e.render();
      return false;
    }
  }
  // Up to duplicates, nothing else survives.
  for (const auto& s : substituted) {
    if (std::count(expected.begin(), expected.end(), s) != 1) {
      detail = "unexpected substituted minor " + s.render();
      return false;
    }
  }
  return true;
}

bool criterion_schemes(std::string& detail) {
  auto start = Clock::now();
  for (const auto& data : scheme_data()) {
    if (!check_scheme(data, detail)) return false;
  }
  std::ostringstream sink;
  int status = run_corpus(sink);
  if (status != 0) {
    detail = "corpus exit status " + std::to_string(status);
    return false;
  }
  double elapsed = ms_since(start);
  if (elapsed >= 5000.0) {
    detail = "took " + std::to_string(elapsed) + " ms";
    return false;
  }
  return true;
}

bool criterion_determinant_oracle(std::string& detail) {
  Rng rng(11071);
  for (int i = 0; i < 200; ++i) {
    DenseMatrix<MultiPoly> m(4, 4, MultiPoly(4));
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m.at(r, c) = random_linear_entry(rng, 4);
    }
    if (!(ff_determinant(m) == cofactor_determinant(m))) {
      detail = "disagreement at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion_hitting_oracle(std::string& detail) {
  Rng rng(22081);
  for (int i = 0; i < 200; ++i) {
    int n = rand_int(rng, 2, 6);
    int count = rand_int(rng, 1, 7);
    std::vector<Monomial> monomials;
    std::vector<std::vector<int>> supports;
    for (int k = 0; k < count; ++k) {
      Monomial m(0);
      do {
        m = random_monomial(rng, n, 2);
      } while (m.is_one());
      monomials.push_back(m);
      supports.push_back(m.support());
    }
    if (monomial_primes(monomials).primes != hitting_set_oracle(supports, n)) {
      detail = "disagreement at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion_rank_sampling(std::string& detail) {
  Rng rng(33091);
  for (const auto& data : scheme_data()) {
    Presentation p = corpus_presentation(data.name);
    LinearFormMatrix d = build_matrix(p);
    SchemeDescription desc = point_scheme(p);
    for (int qi = 0; qi < 3; ++qi) {
      Rational q0 = random_admissible_q(rng, p.constraints());
      for (int i = 0; i < 25; ++i) {
        const auto& comp =
            desc.components[static_cast<size_t>(i) % desc.components.size()];
        auto alpha = sample_on_component(rng, comp, q0);
        if (!alpha) {
          detail = std::string(data.name) + ": failed to sample on " + comp.render();
          return false;
        }
        if (rank_at(d, *alpha, q0) > 3) {
          detail = std::string(data.name) + ": full rank on component " + comp.render();
          return false;
        }
      }
      for (int i = 0; i < 25; ++i) {
        auto alpha = sample_off_components(rng, desc.components, 4, q0);
        if (!alpha) {
          detail = std::string(data.name) + ": failed to sample off-scheme";
          return false;
        }
        if (rank_at(d, *alpha, q0) != 4) {
          detail = std::string(data.name) + ": rank dropped off-scheme";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_fiber(std::string& detail) {
  Rng rng(44101);
  for (const auto& data : scheme_data()) {
    Presentation p = corpus_presentation(data.name);
    LinearFormMatrix d = build_matrix(p);
    SchemeDescription desc = point_scheme(p);
    Rational q0 = random_admissible_q(rng, p.constraints());
    for (int i = 0; i < 25; ++i) {
      const auto& comp = desc.components[static_cast<size_t>(i) % desc.components.size()];
      auto alpha = sample_on_component(rng, comp, q0);
      if (!alpha) {
        detail = std::string(data.name) + ": failed to sample on " + comp.render();
        return false;
      }
      FiberResult fr = kernel_at(d, *alpha, q0, p.constraints());
      if (fr.rank > 3 || fr.basis.empty()) {
        detail = std::string(data.name) + ": no kernel on " + comp.render();
        return false;
      }
      std::vector<Laurent> alpha_l;
      for (const auto& a : *alpha) alpha_l.emplace_back(a);
      for (const auto& v : fr.basis) {
        std::vector<Laurent> beta;
        for (const auto& e : v) {
          if (!(e.den == Laurent::one())) {
            detail = std::string(data.name) + ": non-polynomial kernel entry";
            return false;
          }
          beta.push_back(e.num);
        }
        for (const auto& rel : p.relations()) {
          if (!is_zero(multilinearize(rel).eval(alpha_l, beta).eval(q0))) {
            detail = std::string(data.name) + ": relation violated at sampled fiber";
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool criterion_parser_roundtrip(std::string& detail) {
  Rng rng(55111);
  for (int i = 0; i < 500; ++i) {
    Presentation p = random_presentation(rng);
    Presentation back = parse_presentation(render_presentation(p));
    if (!(back == p)) {
      detail = "round trip failed at case " + std::to_string(i);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<bool(std::string&)> fn;
  };
  std::vector<Criterion> criteria = {
      {"1. prop1 minors match the published seven-element list (< 1 s)",
       criterion_minors_prop1},
      {"2. prop2..prop6 minors match their published lists (< 1 s each)",
       criterion_minors_rest},
      {"3. prop1 minors at a3 = 0 reduce to the three survivors", criterion_substitution},
      {"4. all six point schemes match, corpus exits 0 (< 5 s)", criterion_schemes},
      {"5. fraction-free determinant == cofactor oracle (200 random 4x4)",
       criterion_determinant_oracle},
      {"6. monomial primes == exhaustive hitting sets (200 random, n <= 6)",
       criterion_hitting_oracle},
      {"7. rank <= 3 on components, rank 4 off (25 + 25 points, 3 q values)",
       criterion_rank_sampling},
      {"8. sampled fibers satisfy every relation exactly", criterion_fiber},
      {"9. parser round trip on 500 random presentations", criterion_parser_roundtrip},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    auto start = Clock::now();
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = ms_since(start);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name;
    std::cout << "  (" << static_cast<long>(elapsed) << " ms)";
    if (!ok && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return failures;
}
