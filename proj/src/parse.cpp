#include "ps/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace ps {
namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, Slash, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

class Lexer {
 public:
  Lexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_end() const { return tok_.kind == Tok::End; }
  int line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_no_, tok_.column, msg);
  }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size()) {
      tok_ = {Tok::End, "", col};
      return;
    }
    char c = line_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      tok_ = {Tok::Number, line_.substr(start, pos_ - start), col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < line_.size() &&
             std::isalnum(static_cast<unsigned char>(line_[pos_]))) {
        ++pos_;
      }
      tok_ = {Tok::Name, line_.substr(start, pos_ - start), col};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Tok::Plus, "+", col}; return;
      case '-': tok_ = {Tok::Minus, "-", col}; return;
      case '*':
        if (pos_ < line_.size() && line_[pos_] == '*') {  // ** is a synonym for ^
          ++pos_;
          tok_ = {Tok::Caret, "**", col};
        } else {
          tok_ = {Tok::Star, "*", col};
        }
        return;
      case '^': tok_ = {Tok::Caret, "^", col}; return;
      case '(': tok_ = {Tok::LParen, "(", col}; return;
      case ')': tok_ = {Tok::RParen, ")", col}; return;
      case '/': tok_ = {Tok::Slash, "/", col}; return;
      case ':': tok_ = {Tok::Colon, ":", col}; return;
      default:
        throw ParseError(line_no_, col, std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& line_;
  int line_no_;
  size_t pos_ = 0;
  Token tok_{Tok::End, "", 1};
};

long parse_exponent(Lexer& lex) {
  bool neg = false;
  if (lex.peek().kind == Tok::Minus) {
    lex.take();
    neg = true;
  }
  if (lex.peek().kind != Tok::Number) lex.fail("expected integer exponent");
  Token t = lex.take();
  long e = 0;
  try {
    e = std::stol(t.text);
  } catch (const std::exception&) {
    throw ParseError(lex.line_no(), t.column, "exponent out of range");
  }
  return neg ? -e : e;
}

Laurent parse_scalar_expr(Lexer& lex);

Laurent parse_scalar_factor(Lexer& lex) {
  const Token& t = lex.peek();
  if (t.kind == Tok::Number) {
    Token num = lex.take();
    Rational value(Integer(num.text));
    if (lex.peek().kind == Tok::Slash) {
      lex.take();
      if (lex.peek().kind != Tok::Number) lex.fail("expected denominator after '/'");
      Token den = lex.take();
      Integer d(den.text);
      if (sgn(d) == 0) throw ParseError(lex.line_no(), den.column, "zero denominator");
      value = make_rational(value.get_num(), d);
    }
    Laurent base(value);
    if (lex.peek().kind == Tok::Caret) {
      lex.take();
      return base.pow(parse_exponent(lex));
    }
    return base;
  }
  if (t.kind == Tok::Name) {
    if (t.text == "q") {
      lex.take();
      long e = 1;
      if (lex.peek().kind == Tok::Caret) {
        lex.take();
        e = parse_exponent(lex);
      }
      return Laurent::q(e);
    }
    if (t.text[0] == 'x') lex.fail("generator '" + t.text + "' inside a scalar expression");
    lex.fail("unknown identifier '" + t.text + "'");
  }
  if (t.kind == Tok::LParen) {
    lex.take();
    Laurent inner = parse_scalar_expr(lex);
    if (lex.peek().kind != Tok::RParen) lex.fail("expected ')'");
    lex.take();
    if (lex.peek().kind == Tok::Caret) {
      lex.take();
      long e = parse_exponent(lex);
      if (e < 0 && !inner.is_monomial()) lex.fail("negative power of a non-monomial scalar");
      return inner.pow(e);
    }
    return inner;
  }
  lex.fail("expected a scalar factor");
}

Laurent parse_scalar_term(Lexer& lex) {
  Laurent acc = parse_scalar_factor(lex);
  while (lex.peek().kind == Tok::Star) {
    lex.take();
    acc = acc * parse_scalar_factor(lex);
  }
  return acc;
}

Laurent parse_scalar_expr(Lexer& lex) {
  bool neg = false;
  if (lex.peek().kind == Tok::Plus || lex.peek().kind == Tok::Minus) {
    neg = lex.take().kind == Tok::Minus;
  }
  Laurent acc = parse_scalar_term(lex);
  if (neg) acc = -acc;
  while (lex.peek().kind == Tok::Plus || lex.peek().kind == Tok::Minus) {
    bool minus = lex.take().kind == Tok::Minus;
    Laurent term = parse_scalar_term(lex);
    acc = minus ? acc - term : acc + term;
  }
  return acc;
}

// Index of generator "x<k>" (0-based), or -1 when the name is not one.
int generator_index(const std::string& name, int n, int column, int line_no) {
  if (name.size() < 2 || name[0] != 'x') return -1;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
  }
  int k = std::stoi(name.substr(1));
  if (k < 1 || k > n) {
    throw ParseError(line_no, column, "unknown generator '" + name + "' (have x1..x" +
                                          std::to_string(n) + ")");
  }
  return k - 1;
}

// One signed product of scalar factors and exactly two generators.
void parse_relation_term(Lexer& lex, int line_no, int n, bool negative, Relation& rel) {
  Laurent coeff = Laurent::one();
  std::vector<int> gens;
  for (;;) {
    const Token& t = lex.peek();
    if (t.kind == Tok::Name && t.text != "q") {
      int idx = generator_index(t.text, n, t.column, line_no);
      if (idx < 0) lex.fail("unknown identifier '" + t.text + "'");
      lex.take();
      if (lex.peek().kind == Tok::Caret) {
        lex.fail("generators cannot carry exponents; write x1*x1");
      }
      gens.push_back(idx);
    } else {
      coeff = coeff * parse_scalar_factor(lex);
    }
    if (lex.peek().kind != Tok::Star) break;
    lex.take();
  }
  if (gens.size() != 2) {
    throw ParseError(line_no, lex.peek().column,
                     "each relation term must be quadratic (got " +
                         std::to_string(gens.size()) + " generator factors)");
  }
  if (negative) coeff = -coeff;
  rel.add_word(gens[0], gens[1], coeff);
}

Relation parse_relation(Lexer& lex, int line_no, int n) {
  Relation rel(n);
  bool neg = false;
  if (lex.peek().kind == Tok::Plus || lex.peek().kind == Tok::Minus) {
    neg = lex.take().kind == Tok::Minus;
  }
  parse_relation_term(lex, line_no, n, neg, rel);
  while (!lex.at_end()) {
    const Token& t = lex.peek();
    if (t.kind != Tok::Plus && t.kind != Tok::Minus) lex.fail("expected '+' or '-'");
    bool minus = lex.take().kind == Tok::Minus;
    parse_relation_term(lex, line_no, n, minus, rel);
  }
  return rel;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n = 0;
  bool have_generators = false;
  std::vector<Relation> relations;
  QConstraintSet constraints;

  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    Lexer lex(line, line_no);
    if (lex.at_end()) continue;

    if (lex.peek().kind != Tok::Name) lex.fail("expected 'generators:', 'constraint:' or 'rel:'");
    Token head = lex.take();
    if (lex.peek().kind != Tok::Colon) lex.fail("expected ':' after '" + head.text + "'");
    lex.take();

    if (head.text == "generators") {
      if (have_generators) throw ParseError(line_no, head.column, "duplicate generators line");
      int next = 1;
      while (!lex.at_end()) {
        const Token& t = lex.peek();
        if (t.kind != Tok::Name || t.text != "x" + std::to_string(next)) {
          lex.fail("generators must be named x1..xn in order");
        }
        lex.take();
        ++next;
      }
      n = next - 1;
      if (n < 1) throw ParseError(line_no, head.column, "at least one generator required");
      have_generators = true;
    } else if (head.text == "constraint") {
      if (!have_generators) {
        throw ParseError(line_no, head.column, "generators must be declared first");
      }
      Laurent p = parse_scalar_expr(lex);
      if (!lex.at_end()) lex.fail("trailing input after constraint");
      if (p.is_zero()) throw ParseError(line_no, head.column, "constraint polynomial is zero");
      constraints.add(p);
    } else if (head.text == "rel") {
      if (!have_generators) {
        throw ParseError(line_no, head.column, "generators must be declared first");
      }
      Relation rel = parse_relation(lex, line_no, n);
      if (rel.is_zero()) {
        throw ParseError(line_no, head.column, "relation cancels to zero");
      }
      relations.push_back(std::move(rel));
    } else {
      throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_generators) throw ParseError(line_no, 1, "missing generators line");
  if (relations.empty()) throw ParseError(line_no, 1, "at least one relation required");
  return Presentation(n, std::move(relations), std::move(constraints));
}

std::string render_coefficient(const Laurent& c) {
  if (c.term_count() > 1) return "(" + c.render() + ")";
  return c.render();
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (int i = 0; i < p.generator_count(); ++i) out << " " << p.generator_name(i);
  out << "\n";
  for (const auto& c : p.constraints().explicit_polys()) {
    out << "constraint: " << c.render() << "\n";
  }
  for (const auto& rel : p.relations()) {
    out << "rel:";
    bool first = true;
    for (const auto& [word, c] : rel.words()) {
      // Single-term coefficients donate their sign to the joiner; compound
      // ones are negated as a block when their leading term is negative.
      Laurent body = c;
      bool negative = false;
      if (c.term_count() == 1) {
        if (sgn(c.terms().begin()->second) < 0) {
          negative = true;
          body = -c;
        }
      } else if (sgn(c.terms().rbegin()->second) < 0) {
        negative = true;
        body = -c;
      }
      out << (first ? (negative ? " -" : " ") : (negative ? " - " : " + "));
      first = false;
      std::string word_text = "x" + std::to_string(word.first + 1) + "*x" +
                              std::to_string(word.second + 1);
      if (body.is_one()) {
        out << word_text;
      } else {
        out << render_coefficient(body) << "*" << word_text;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ps
