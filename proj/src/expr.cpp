#include "betaexp/expr.hpp"

#include <cctype>
#include <string>

#include "betaexp/error.hpp"
#include "betaexp/polynomial.hpp"

namespace betaexp {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Beta& beta) : s_(text), beta_(beta) {}

  FieldValue parse() {
    FieldValue v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldValue expr() {
    FieldValue v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  FieldValue term() {
    FieldValue v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v = divide(v, unary());
      } else {
        return v;
      }
    }
  }

  FieldValue unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FieldValue power() {
    FieldValue base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) negative = true;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    FieldValue result = FieldValue::one(beta_);
    FieldValue b = negative ? inverse(base) : base;
    while (e) {
      if (e & 1U) result *= b;
      e >>= 1U;
      if (e) b *= b;
    }
    return result;
  }

  FieldValue atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      FieldValue v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    const char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "beta" || name == "b") return FieldValue::generator(beta_);
      pos_ = start;
      fail("unknown name '" + std::string(name) + "'");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return FieldValue::rational(beta_, parse_rational(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Beta& beta_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldValue evaluate_expression(std::string_view text, const Beta& beta) { return Parser(text, beta).parse(); }

}  // namespace betaexp
