#pragma once

/*
 * parse.hpp
 * ---------
 * Text format for quadratic algebra presentations.
 *
 * Line-oriented, UTF-8, '#' starts a comment:
 *
 *     generators: x1 x2 x3 x4
 *     constraint: q^2 - 1          # asserted nonzero; q != 0 is implicit
 *     rel: x2*x1 - q*x1*x2
 *     rel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3
 *
 * A relation is a signed sum of terms `coef * xi * xj`; the coefficient is
 * a Laurent expression in q with integer or rational literals, parentheses
 * and `^` (or `**`) powers.  Multiplication is always explicit `*`.
 */

#include <string>

#include "ps/error.hpp"
#include "ps/presentation.hpp"

namespace ps {

struct ParseError : Error {
  ParseError(int line_, int column_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
              msg),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

Presentation parse_presentation(const std::string& text);

// Canonical rendering; parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const Presentation& p);

// Renders one Laurent scalar the way relation coefficients are written.
std::string render_coefficient(const Laurent& c);

}  // namespace ps
