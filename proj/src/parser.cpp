#include "germ/parser.hpp"

#include <cctype>
#include <map>

namespace germ {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Number, src.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, src.substr(start, i - start), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw SyntaxError(start, "'+', '-', '*', '/', '^', '(', ')', number, or variable");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& variables)
      : tokens_(std::move(tokens)), num_vars_(variables.size()) {
    for (std::size_t i = 0; i < variables.size(); ++i) var_index_[variables[i]] = i;
  }

  Polynomial run() {
    Polynomial p = parse_expr();
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  Token advance() { return tokens_[cursor_++]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw SyntaxError(peek().pos, what);
    ++cursor_;
  }

  unsigned parse_nat_token(const char* what) {
    if (peek().kind != Tok::Number) throw SyntaxError(peek().pos, what);
    Token t = advance();
    Int n(t.text);
    if (!n.fits_uint_p()) throw SyntaxError(t.pos, "exponent small enough to represent");
    return static_cast<unsigned>(n.get_ui());
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = advance().kind == Tok::Minus;
      Polynomial t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (peek().kind == Tok::Star) {
      advance();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus:
        advance();
        return -parse_factor();
      case Tok::Number: {
        Token num = advance();
        Rational c(Int(num.text));
        if (peek().kind == Tok::Slash) {
          advance();
          if (peek().kind != Tok::Number) throw SyntaxError(peek().pos, "denominator");
          Token den = advance();
          Int d(den.text);
          if (d == 0) throw SyntaxError(den.pos, "nonzero denominator");
          c /= Rational(d);
        }
        return Polynomial::constant(num_vars_, c);
      }
      case Tok::Ident: {
        Token name = advance();
        auto it = var_index_.find(name.text);
        if (it == var_index_.end()) throw UnknownVariable(name.text);
        Polynomial v = Polynomial::variable(num_vars_, it->second);
        if (peek().kind == Tok::Caret) {
          advance();
          return v.pow(parse_nat_token("exponent"));
        }
        return v;
      }
      case Tok::LParen: {
        advance();
        Polynomial inner = parse_expr();
        expect(Tok::RParen, "')'");
        if (peek().kind == Tok::Caret) {
          advance();
          return inner.pow(parse_nat_token("exponent"));
        }
        return inner;
      }
      default:
        throw SyntaxError(t.pos, "number, variable, '(', or '-'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::size_t num_vars_;
  std::map<std::string, std::size_t> var_index_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(tokenize(text), variables).run();
}

std::vector<std::string> scan_variables(const std::string& text) {
  std::vector<std::string> vars;
  for (const Token& t : tokenize(text)) {
    if (t.kind != Tok::Ident) continue;
    bool seen = false;
    for (const auto& v : vars) {
      if (v == t.text) {
        seen = true;
        break;
      }
    }
    if (!seen) vars.push_back(t.text);
  }
  return vars;
}

}  // namespace germ
