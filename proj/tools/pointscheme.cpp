/*
 * pointscheme
 * -----------
 * Command-line front end: compute the maximal-minor list, the point scheme
 * decomposition, or a beta fiber for a quadratic algebra presentation, and
 * check the built-in corpus against its golden reports.
 *
 * Exit codes: 0 success, 1 parse/input error, 2 pipeline warning under
 * --strict, 3 golden mismatch in `corpus`.
 */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ps/corpus.hpp"
#include "ps/fiber.hpp"
#include "ps/parse.hpp"
#include "ps/report.hpp"
#include "ps/scheme.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ps::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<ps::Rational> parse_alpha(const std::string& text) {
  std::vector<ps::Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(ps::parse_rational(part));
  return out;
}

int warn_status(const std::vector<std::string>& warnings, bool strict) {
  if (!strict || warnings.empty()) return 0;
  std::cerr << "error: warnings treated as errors (--strict):\n";
  for (const auto& w : warnings) std::cerr << "  " << w << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point schemes of quadratic algebras from their relations"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool expanded = false;
  bool strict = false;
  int split_budget = -1;

  auto* minors_cmd = app.add_subcommand("minors", "print the distinct nonzero maximal minors");
  minors_cmd->add_option("file", file, "presentation file")->required();
  minors_cmd->add_flag("--json", json, "structured output");
  minors_cmd->add_flag("--expanded", expanded, "expanded polynomials instead of factored form");

  auto* scheme_cmd = app.add_subcommand("scheme", "decompose the point scheme into components");
  scheme_cmd->add_option("file", file, "presentation file")->required();
  scheme_cmd->add_flag("--json", json, "structured output");
  scheme_cmd->add_flag("--strict", strict, "treat pipeline warnings as errors");
  scheme_cmd->add_option("--split-budget", split_budget, "case-split recursion depth");

  std::string alpha_text;
  std::string q_text;
  auto* fiber_cmd = app.add_subcommand("fiber", "solve D(alpha) * beta = 0 at a point");
  fiber_cmd->add_option("file", file, "presentation file")->required();
  fiber_cmd->add_option("--alpha", alpha_text, "comma-separated rational coordinates")
      ->required();
  fiber_cmd->add_option("--q", q_text, "rational value for q (symbolic when omitted)");
  fiber_cmd->add_flag("--json", json, "structured output");

  bool dump = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "check the built-in presentations");
  corpus_cmd->add_flag("--dump", dump, "print current reports instead of comparing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (minors_cmd->parsed() || scheme_cmd->parsed()) {
      ps::Presentation p = ps::parse_presentation(read_file(file));
      ps::LinearFormMatrix d = ps::build_matrix(p);
      if (minors_cmd->parsed()) {
        ps::MinorSet ms = ps::maximal_minors(d);
        if (json) {
          std::cout << ps::minors_json(p, ms).dump(2) << "\n";
        } else {
          std::cout << ps::render_minors_text(ms, p.constraints(), expanded);
        }
        return 0;
      }
      if (d.rows() < d.cols()) {
        ps::SchemeDescription desc = ps::point_scheme(p, split_budget);
        if (json) {
          std::cout << ps::scheme_json(p, ps::MinorSet{}, desc).dump(2) << "\n";
        } else {
          std::cout << ps::render_scheme_text(desc);
        }
        return warn_status(desc.warnings, strict);
      }
      ps::MinorSet ms = ps::maximal_minors(d);
      ps::SchemeDescription desc = ps::decompose(ms, p.constraints(), split_budget);
      if (json) {
        std::cout << ps::scheme_json(p, ms, desc).dump(2) << "\n";
      } else {
        std::cout << ps::render_scheme_text(desc);
      }
      return warn_status(desc.warnings, strict);
    }
    if (fiber_cmd->parsed()) {
      ps::Presentation p = ps::parse_presentation(read_file(file));
      ps::LinearFormMatrix d = ps::build_matrix(p);
      std::vector<ps::Rational> alpha = parse_alpha(alpha_text);
      std::optional<ps::Rational> q0;
      if (!q_text.empty()) q0 = ps::parse_rational(q_text);
      ps::FiberResult fr = ps::kernel_at(d, alpha, q0, p.constraints());
      if (json) {
        std::cout << ps::fiber_json(alpha, q0, fr).dump(2) << "\n";
      } else {
        std::cout << ps::render_fiber_text(fr);
      }
      return 0;
    }
    if (corpus_cmd->parsed()) {
      return ps::run_corpus(std::cout, dump);
    }
  } catch (const ps::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
