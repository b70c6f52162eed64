#include "descartes/expression.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "descartes/factorization.hpp"

namespace descartes {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Rational parse() {
    Rational value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Rational expr() {
    Rational value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Rational term() {
    Rational value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const Rational divisor = unary();
        if (divisor == Rational(0)) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Rational unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Rational power() {
    Rational base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::string digits = take_digits();
    if (digits.empty()) fail("expected an exponent");
    const Integer e = parse_integer(digits);
    if (e > 4096) fail("exponent too large");
    return pow(base, e.convert_to<unsigned>());
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational atom() {
    skip_space();
    if (accept('(')) {
      Rational inner = expr();
      expect(')');
      return inner;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return Rational(parse_integer(take_digits()));
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a number, '(' or a function name");
    expect('(');
    const Rational arg = expr();
    expect(')');
    if (arg.denominator() != 1 || arg.numerator() < 1) {
      fail(std::string(name) + " needs a positive integer argument");
    }
    const Integer& n = arg.numerator();
    if (name == "sigma") return Rational(sigma(factorize(n)));
    if (name == "abund") return abundancy(factorize(n));
    if (name == "f") return f_of_p(n);
    if (name == "omega") return Rational(Integer(factorize(n).omega()));
    fail("unknown function '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational evaluate(std::string_view expression) { return Parser(expression).parse(); }

}  // namespace descartes
