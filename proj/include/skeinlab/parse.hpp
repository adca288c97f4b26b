#pragma once
// Character-level recursive-descent parsing shared by scalars, diagrams and algebra expressions.

#include "skeinlab/scalar.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skeinlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t line, size_t column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_, column_;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Next character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get_raw() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (peek_raw() == '-' || peek_raw() == '+') neg = get_raw() == '-';
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 17) fail("integer too large");
    long v = std::stol(digits);
    return neg ? -v : v;
  }

  // Unsigned decimal or fraction literal such as 3 or 3/2.
  Rational number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    std::string s(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      size_t ds = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string d(text_.substr(ds, pos_ - ds));
      mpz_class den(d);
      if (den == 0) fail("zero denominator");
      Rational r(mpz_class(s), den);
      r.canonicalize();
      return r;
    }
    return Rational(mpz_class(s));
  }

  bool starts_number() {
    return std::isdigit(static_cast<unsigned char>(peek()));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  size_t position() const { return pos_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

// Ring-generic expression grammar:
//   expr    := ["+"|"-"] term (("+"|"-") term)*
//   term    := unary ("*" unary)*
//   unary   := "-" unary | power
//   power   := primary ["^" INT]
//   primary := NUMBER | atom | "(" expr ")"
// Traits supply: T, from_scalar(HalfLaurent), atom(name, Cursor&), pow(T, long), and ring operators.
template <class Traits>
class ExprParser {
 public:
  using T = typename Traits::T;

  explicit ExprParser(Cursor& c) : c_(c) {}

  T parse_all() {
    T v = expr();
    if (!c_.at_end()) c_.fail("unexpected trailing input");
    return v;
  }

  T expr() {
    T acc;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (c_.accept('+')) {
      } else if (c_.accept('-')) {
        neg = true;
      } else if (!first) {
        break;
      }
      T t = term();
      acc = first ? (neg ? T(-t) : t) : (neg ? T(acc - t) : T(acc + t));
      first = false;
      char p = c_.peek();
      if (p != '+' && p != '-') break;
    }
    return acc;
  }

 private:
  Cursor& c_;

  T term() {
    T v = unary();
    while (c_.accept('*')) v = Traits::mul(v, unary());
    return v;
  }

  T unary() {
    if (c_.accept('-')) return -unary();
    return power();
  }

  T power() {
    T base = primary();
    if (c_.accept('^')) {
      long e = c_.integer();
      return Traits::pow(base, e);
    }
    return base;
  }

  T primary() {
    if (c_.accept('(')) {
      T v = expr();
      c_.expect(')');
      return v;
    }
    if (c_.starts_number()) return Traits::from_scalar(HalfLaurent(c_.number()));
    if (!std::isalpha(static_cast<unsigned char>(c_.peek()))) c_.fail("expected operand");
    std::string name = c_.identifier();
    if (name == "s") return Traits::from_scalar(HalfLaurent::s_pow(1));
    if (name == "q") return Traits::from_scalar(HalfLaurent::q_pow(1));
    return Traits::atom(name, c_);
  }
};

struct ScalarTraits {
  using T = HalfLaurent;
  static T from_scalar(const HalfLaurent& x) { return x; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T pow(const T& a, long e) {
    if (e < 0 && !a.is_monomial()) throw std::domain_error("negative power of a non-monomial");
    return a.pow(e);
  }
  [[noreturn]] static T atom(const std::string& name, Cursor& c) { c.fail("unknown scalar symbol '" + name + "'"); }
};

inline HalfLaurent parse_scalar(std::string_view text) {
  Cursor c(text);
  ExprParser<ScalarTraits> p(c);
  return p.parse_all();
}

}  // namespace skeinlab
