#include "gbsect/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "gbsect/errors.hpp"

namespace gbsect {

namespace {

enum class Tok { ident, integer, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::integer, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

constexpr unsigned kMaxExponent = 10000;

class Parser {
 public:
  Parser(std::string_view text, ContextPtr context) : tokens_(tokenize(text)), ctx_(std::move(context)) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::end) {
      if (starts_factor(peek().kind)) throw ParseError("implicit multiplication is not supported", peek().pos);
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token next() { return tokens_[index_++]; }
  static bool starts_factor(Tok k) { return k == Tok::ident || k == Tok::integer || k == Tok::lparen; }

  Polynomial expr() {
    bool negate = false;
    if (peek().kind == Tok::minus) {
      next();
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      if (minus)
        acc -= term();
      else
        acc += term();
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek().kind == Tok::star) {
        next();
        acc *= factor();
      } else if (peek().kind == Tok::slash) {
        const std::size_t pos = next().pos;
        const Polynomial divisor = factor();
        if (!divisor.is_constant()) throw ParseError("division by a variable-containing expression", pos);
        if (divisor.is_zero()) throw ParseError("division by zero", pos);
        acc = acc.scaled(divisor.leading_coefficient().inverse());
      } else if (starts_factor(peek().kind)) {
        throw ParseError("implicit multiplication is not supported", peek().pos);
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek().kind != Tok::caret) return b;
    next();
    const Token& t = peek();
    if (t.kind == Tok::minus) throw ParseError("negative exponent", t.pos);
    if (t.kind != Tok::integer) throw ParseError("exponent must be a non-negative integer literal", t.pos);
    next();
    if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent) throw ParseError("exponent too large", t.pos);
    return b.pow(static_cast<unsigned>(std::stoul(t.text)));
  }

  Polynomial base() {
    const Token t = next();
    switch (t.kind) {
      case Tok::integer:
        return Polynomial::constant(ctx_, Rational(mpz_class(t.text)));
      case Tok::ident:
        if (ctx_->variable_index(t.text)) return Polynomial::variable(ctx_, t.text);
        if (ctx_->parameter_index(t.text)) return Polynomial::parameter(ctx_, t.text);
        throw ParseError("unknown identifier '" + t.text + "'", t.pos);
      case Tok::lparen: {
        Polynomial inner = expr();
        if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
        next();
        return inner;
      }
      case Tok::end:
        throw ParseError("unexpected end of expression", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  ContextPtr ctx_;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const ContextPtr& context) {
  return Parser(text, context).parse();
}

}  // namespace gbsect
