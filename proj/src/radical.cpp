#include "dessinry/radical.hpp"

#include <cctype>

#include "dessinry/error.hpp"

namespace dessinry {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := ('+' | '-') unary | power
// power  := atom ('^' ['-'] integer)?
// atom   := integer | '(' expr ')' | name '(' args ')'
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  BigFloat parse() {
    BigFloat v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "'" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  BigFloat expr() {
    BigFloat v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  BigFloat term() {
    BigFloat v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        BigFloat d = unary();
        if (d == 0) throw Error(ErrorKind::InvalidArgument, "division by zero in '" + s_ + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }

  BigFloat unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  BigFloat power() {
    BigFloat base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    long long e = integer();
    BigFloat v = boost::multiprecision::pow(base, static_cast<int>(e));
    return negative ? BigFloat(1) / v : v;
  }

  BigFloat root(int k, const BigFloat& x) {
    if (x < 0 && k % 2 == 0) throw Error(ErrorKind::InvalidArgument, "even root of a negative value in '" + s_ + "'");
    if (x == 0) return 0;
    BigFloat r = boost::multiprecision::pow(boost::multiprecision::abs(x), BigFloat(1) / k);
    return x < 0 ? -r : r;
  }

  BigFloat atom() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return BigFloat(integer());
    if (eat('(')) {
      BigFloat v = expr();
      expect(')');
      return v;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a number, '(' or a function");
    expect('(');
    BigFloat v;
    if (name == "sqrt") {
      v = boost::multiprecision::sqrt(check_even(expr()));
    } else if (name == "root4") {
      v = root(4, expr());
    } else if (name == "root") {
      int k = static_cast<int>(integer());
      if (k < 1) fail("root index must be positive");
      expect(',');
      v = root(k, expr());
    } else {
      fail("unknown function '" + name + "'");
    }
    expect(')');
    return v;
  }

  BigFloat check_even(BigFloat x) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "square root of a negative value in '" + s_ + "'");
    return x;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

BigFloat evaluate_radical(const std::string& expression) { return Parser(expression).parse(); }

}  // namespace dessinry
