#include <cctype>

#include "logres/poly.hpp"

namespace logres {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

  Poly run() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_space();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    if (accept('-')) return -factor();
    Poly b = base();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 10000) throw ParseError("exponent too large", start);
        ++pos_;
      }
      if (pos_ == start) throw ParseError("expected exponent", pos_);
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Poly base() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ring_.size(), number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      int idx = ring_.index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
      return ring_.var(static_cast<std::size_t>(idx));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class num(text_.substr(start, pos_ - start));
    // A '/' directly followed by digits is part of the rational literal.
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t dstart = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class den(text_.substr(dstart, pos_ - dstart));
      if (den == 0) throw ParseError("zero denominator", dstart);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  const std::string& text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(const std::string& expr, const Ring& ring) { return Parser(expr, ring).run(); }

Poly parse(const std::string& expr, const std::vector<std::string>& vars) { return parse(expr, Ring(vars)); }

Rational parse_rational(const std::string& text) {
  Poly p = parse(text, Ring{});
  if (!p.is_constant()) throw ParseError("not a rational literal", 0);
  return p.constant_term();
}

}  // namespace logres
