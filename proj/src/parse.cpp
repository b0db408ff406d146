#include "ncgb/parse.hpp"

#include <cctype>
#include <vector>

namespace ncgb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int max_variable) : text_(text), max_variable_(max_variable) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc;
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial first = product();
    acc = negate ? -first : first;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial next = product();
      if (c == '+')
        acc += next;
      else
        acc -= next;
    }
    return acc;
  }

  static bool starts_atom(char c) {
    return c == 'x' || c == '(' || c == '[' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_atom(c)) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      expect(')');
      return p;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Polynomial> args;
      args.push_back(expr());
      while (peek() == ',') {
        ++pos_;
        args.push_back(expr());
      }
      if (args.size() < 2) fail("a commutator needs at least two arguments");
      expect(']');
      return commutator(args);
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 3) fail("variable index too large");
      int v = std::stoi(d);
      if (v < 1 || v > kMaxVariable || (max_variable_ > 0 && v > max_variable_))
        throw ParseError("variable x" + d + " out of range", at);
      return Polynomial::variable(v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      Rational q(num);
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        Rational d(den);
        if (is_zero(d)) fail("division by zero");
        q /= d;
      }
      q.canonicalize();
      return Polynomial(q);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int max_variable_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int max_variable) {
  return Parser(text, max_variable).parse();
}

}  // namespace ncgb
