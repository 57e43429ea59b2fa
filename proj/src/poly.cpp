#include "poly.hpp"

#include <cctype>

namespace absinc {

PolyP poly_reduce_mod_p(const PolyQ& p, std::uint64_t prime) {
  FpOps f{prime};
  PolyP out(f);
  for (const auto& [m, c] : p.terms()) out.add_term(m, f.from_rational(c));
  return out;
}

namespace {

struct Token {
  enum Type { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } type;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (i_ >= s_.size()) {
      t.type = Token::End;
      return t;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) advance();
      if (i_ < s_.size() && s_[i_] == '/') {
        std::size_t save = i_;
        int save_line = line_, save_col = col_;
        advance();
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) advance();
        } else {
          // lone '/': not part of a rational literal
          i_ = save;
          line_ = save_line;
          col_ = save_col;
        }
      }
      t.type = Token::Number;
      t.text = s_.substr(start, i_ - start);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) advance();
      t.type = Token::Ident;
      t.text = s_.substr(start, i_ - start);
      return t;
    }
    advance();
    switch (c) {
      case '+': t.type = Token::Plus; return t;
      case '-': t.type = Token::Minus; return t;
      case '*': t.type = Token::Star; return t;
      case '^': t.type = Token::Caret; return t;
      case '(': t.type = Token::LParen; return t;
      case ')': t.type = Token::RParen; return t;
      default:
        fail(ErrKind::Parse, "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) +
                                 ": unexpected character '" + std::string(1, c) + "'");
    }
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }

  const std::string& s_;
  std::size_t i_{0};
  int line_{1};
  int col_{1};
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { shift(); }

  PolyQ parse() {
    PolyQ p = expr();
    expect(Token::End, "end of input");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrKind::Parse, "line " + std::to_string(tok_.line) + ", col " + std::to_string(tok_.col) +
                             ": " + msg);
  }
  void shift() { tok_ = lex_.next(); }
  void expect(Token::Type t, const std::string& what) {
    if (tok_.type != t) error("expected " + what);
  }

  PolyQ expr() {
    bool negate = false;
    while (tok_.type == Token::Plus || tok_.type == Token::Minus) {
      if (tok_.type == Token::Minus) negate = !negate;
      shift();
    }
    PolyQ acc = term();
    if (negate) acc = -acc;
    while (tok_.type == Token::Plus || tok_.type == Token::Minus) {
      bool minus = tok_.type == Token::Minus;
      shift();
      PolyQ t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  PolyQ term() {
    PolyQ acc = factor();
    while (tok_.type == Token::Star) {
      shift();
      acc = acc * factor();
    }
    return acc;
  }

  PolyQ factor() {
    bool negate = false;
    while (tok_.type == Token::Plus || tok_.type == Token::Minus) {
      if (tok_.type == Token::Minus) negate = !negate;
      shift();
    }
    PolyQ base = primary();
    if (tok_.type == Token::Caret) {
      shift();
      expect(Token::Number, "an integer exponent");
      if (tok_.text.find('/') != std::string::npos) error("exponent must be an integer");
      unsigned long e = std::stoul(tok_.text);
      if (e > 64) error("exponent too large");
      shift();
      base = base.pow(static_cast<unsigned>(e));
    }
    return negate ? -base : base;
  }

  PolyQ primary() {
    switch (tok_.type) {
      case Token::Number: {
        Rational q = rational_from_string(tok_.text);
        shift();
        return PolyQ::constant(QOps{}, q);
      }
      case Token::Ident: {
        std::string name = tok_.text;
        shift();
        return PolyQ::variable(QOps{}, name);
      }
      case Token::LParen: {
        shift();
        PolyQ p = expr();
        expect(Token::RParen, "')'");
        shift();
        return p;
      }
      default: error("expected a number, variable, or '('");
    }
  }

  Lexer lex_;
  Token tok_{};
};

}  // namespace

PolyQ parse_poly(const std::string& text) { return Parser(text).parse(); }

std::pair<std::string, unsigned> parse_pure_power(const std::string& text) {
  PolyQ p = parse_poly(text);
  if (p.terms().size() != 1)
    fail(ErrKind::InvalidRule, "\"" + text + "\" is not a pure variable power");
  const auto& [m, c] = *p.terms().begin();
  if (c != 1 || m.exponents().size() != 1)
    fail(ErrKind::InvalidRule, "\"" + text + "\" is not a pure variable power");
  const auto& [var, e] = *m.exponents().begin();
  return {var, e};
}

}  // namespace absinc
