#pragma once

/*
 * report.hpp
 * ----------
 * Human-readable and structured (JSON, schema version 1) reports for the
 * CLI: minor lists, scheme descriptions and fiber results.  Generators are
 * rendered x1..xn on output.
 */

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ps/fiber.hpp"
#include "ps/linmat.hpp"
#include "ps/presentation.hpp"
#include "ps/scheme.hpp"

namespace ps {

// Exact multiplicative structure of one minor:
//   raw = scalar * monomial * product(cofactors^multiplicity).
struct FactoredMinor {
  Laurent scalar;
  Monomial monomial{0};
  std::vector<std::pair<MultiPoly, int>> cofactors;
  bool unfactored = false;  // a residual outside the supported factor class
};

FactoredMinor factor_minor(const MultiPoly& raw, const QConstraintSet& c);

// One line per distinct nonzero minor: the factored form with q-power units
// dropped, e.g. "(q^2 - 1)*x3^2*(x2*x3 - x1*x4)".
std::string render_minors_text(const MinorSet& ms, const QConstraintSet& c, bool expanded);

std::string render_scheme_text(const SchemeDescription& desc);

std::string render_fiber_text(const FiberResult& fr);

nlohmann::json minors_json(const Presentation& p, const MinorSet& ms);
nlohmann::json scheme_json(const Presentation& p, const MinorSet& ms,
                           const SchemeDescription& desc);
nlohmann::json fiber_json(const std::vector<Rational>& alpha, const std::optional<Rational>& q0,
                          const FiberResult& fr);

}  // namespace ps
