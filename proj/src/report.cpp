#include "ps/report.hpp"

#include <sstream>

namespace ps {
namespace {

// Drops the q-power unit and sign: min exponent 0, positive top coefficient.
Laurent display_scalar(const Laurent& s) {
  long low = s.low_exponent();
  int sign = sgn(s.terms().rbegin()->second);
  return s.exact_div(Laurent(Rational(sign < 0 ? -1 : 1), low));
}

std::string render_factor(const MultiPoly& f, int mult, const std::string& prefix) {
  std::string body = f.render(prefix);
  if (f.term_count() > 1) body = "(" + body + ")";
  if (mult > 1) body += "^" + std::to_string(mult);
  return body;
}

std::string render_factored_line(const FactoredMinor& fm, const std::string& prefix) {
  std::vector<std::string> parts;
  Laurent ds = display_scalar(fm.scalar);
  if (!ds.is_one()) parts.push_back("(" + ds.render() + ")");
  if (!fm.monomial.is_one()) parts.push_back(fm.monomial.render(prefix));
  for (const auto& [f, mult] : fm.cofactors) parts.push_back(render_factor(f, mult, prefix));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

nlohmann::json factored_json(const FactoredMinor& fm) {
  nlohmann::json cofs = nlohmann::json::array();
  for (const auto& [f, mult] : fm.cofactors) {
    cofs.push_back({{"factor", f.render("x")}, {"multiplicity", mult}});
  }
  nlohmann::json j = {{"unit", fm.scalar.render()},
                      {"monomial", fm.monomial.render("x")},
                      {"cofactors", cofs}};
  if (fm.unfactored) j["unfactored"] = true;
  return j;
}

nlohmann::json header_json(const Presentation& p) {
  nlohmann::json gens = nlohmann::json::array();
  for (int i = 0; i < p.generator_count(); ++i) gens.push_back(p.generator_name(i));
  nlohmann::json cons = nlohmann::json::array();
  for (const auto& c : p.constraints().polys()) cons.push_back(c.render());
  return {{"schema", 1}, {"generators", gens}, {"constraints", cons}};
}

nlohmann::json minors_array_json(const MinorSet& ms, const QConstraintSet& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : ms.nonzero_reduced) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& subset : r.rows) {
      nlohmann::json one = nlohmann::json::array();
      for (int idx : subset) one.push_back(idx + 1);  // 1-based relation rows
      rows.push_back(one);
    }
    arr.push_back({{"rows", rows},
                   {"factored", factored_json(factor_minor(r.representative, c))},
                   {"expanded", r.canonical.render("x")}});
  }
  return arr;
}

}  // namespace

FactoredMinor factor_minor(const MultiPoly& raw, const QConstraintSet& c) {
  if (raw.is_zero()) throw Error("factoring the zero minor");
  FactoredMinor out;
  auto split = raw.scalar_split();
  out.scalar = split.scalar;
  out.monomial = split.canonical.monomial_content();
  MultiPoly residual = split.canonical.divide_by_monomial(out.monomial);
  if (residual.is_constant()) return out;  // scalar * monomial only

  int deg = residual.total_degree();
  if (deg == 2 && residual.homogeneous_degree()) {
    QuadraticSplit qs = split_quadratic_form(residual, c);
    switch (qs.kind) {
      case QuadraticSplit::Kind::Square:
        out.scalar = out.scalar * qs.scalar;
        out.cofactors = {{qs.factors[0], 2}};
        return out;
      case QuadraticSplit::Kind::ProductOfLinear:
        out.scalar = out.scalar * qs.scalar;
        if (qs.factors[0] == qs.factors[1]) {
          out.cofactors = {{qs.factors[0], 2}};
        } else {
          out.cofactors = {{qs.factors[0], 1}, {qs.factors[1], 1}};
        }
        return out;
      default:
        out.cofactors = {{residual, 1}};
        return out;
    }
  }
  out.cofactors = {{residual, 1}};
  if (deg >= 3) out.unfactored = true;
  return out;
}

std::string render_minors_text(const MinorSet& ms, const QConstraintSet& c, bool expanded) {
  std::ostringstream out;
  for (const auto& r : ms.nonzero_reduced) {
    if (expanded) {
      out << r.canonical.render("x") << "\n";
    } else {
      out << render_factored_line(factor_minor(r.representative, c), "x") << "\n";
    }
  }
  return out.str();
}

std::string render_scheme_text(const SchemeDescription& desc) {
  std::ostringstream out;
  out << "point scheme (" << desc.components.size()
      << (desc.components.size() == 1 ? " component" : " components") << "):\n";
  for (size_t i = 0; i < desc.components.size(); ++i) {
    const auto& c = desc.components[i];
    out << "  " << (i + 1) << ". " << c.render("x");
    if (c.double_line) out << "  [double line]";
    if (c.unfactored) out << "  [unfactored]";
    out << "\n";
  }
  for (const auto& [inner, outer] : desc.containments) {
    const auto& li = desc.components[static_cast<size_t>(inner)];
    const auto& lo = desc.components[static_cast<size_t>(outer)];
    out << lo.render("x") << " contains the "
        << (li.double_line ? "double line " : "component ") << li.render("x") << "\n";
  }
  for (const auto& w : desc.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render_fiber_text(const FiberResult& fr) {
  std::ostringstream out;
  out << "rank " << fr.rank << ", kernel dimension " << fr.basis.size() << "\n";
  for (const auto& v : fr.basis) {
    out << "beta = (";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out << ", ";
      out << v[i].render();
    }
    out << ")\n";
  }
  return out.str();
}

nlohmann::json minors_json(const Presentation& p, const MinorSet& ms) {
  nlohmann::json j = header_json(p);
  j["minors"] = minors_array_json(ms, p.constraints());
  j["zero_minors"] = ms.zero_count;
  j["subsets"] = static_cast<int>(ms.minors.size());
  return j;
}

nlohmann::json scheme_json(const Presentation& p, const MinorSet& ms,
                           const SchemeDescription& desc) {
  nlohmann::json j = header_json(p);
  j["minors"] = minors_array_json(ms, p.constraints());
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : desc.components) {
    nlohmann::json jc;
    switch (c.kind()) {
      case SchemeComponent::Kind::Ambient:
        jc["kind"] = "ambient";
        break;
      case SchemeComponent::Kind::CoordinateSubspace:
        jc["kind"] = "subspace";
        break;
      case SchemeComponent::Kind::Hypersurface:
        jc["kind"] = "hypersurface";
        break;
    }
    if (!c.vars.empty()) {
      nlohmann::json vars = nlohmann::json::array();
      for (int v : c.vars) vars.push_back("x" + std::to_string(v + 1));
      jc["vars"] = vars;
    }
    if (c.equation) {
      jc["equation"] = c.equation->render("x");
      nlohmann::json factored = nlohmann::json::array();
      for (const auto& [f, mult] : c.factored) {
        factored.push_back({{"factor", f.render("x")}, {"multiplicity", mult}});
      }
      jc["factored"] = factored;
    }
    jc["double"] = c.double_line;
    if (c.unfactored) jc["unfactored"] = true;
    comps.push_back(jc);
  }
  j["components"] = comps;
  nlohmann::json cont = nlohmann::json::array();
  for (const auto& [inner, outer] : desc.containments) cont.push_back({inner, outer});
  j["containments"] = cont;
  j["warnings"] = desc.warnings;
  return j;
}

nlohmann::json fiber_json(const std::vector<Rational>& alpha, const std::optional<Rational>& q0,
                          const FiberResult& fr) {
  nlohmann::json j = {{"schema", 1}};
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : alpha) a.push_back(render_rational(x));
  j["alpha"] = a;
  j["q"] = q0 ? nlohmann::json(render_rational(*q0)) : nlohmann::json(nullptr);
  j["rank"] = fr.rank;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : fr.basis) {
    nlohmann::json vec = nlohmann::json::array();
    for (const auto& e : v) vec.push_back(e.render());
    basis.push_back(vec);
  }
  j["kernel"] = basis;
  return j;
}

}  // namespace ps
