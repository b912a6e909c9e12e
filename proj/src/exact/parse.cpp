#include <cctype>

#include "wmk/exact.hpp"

namespace wmk {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
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

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (accept('*')) r *= unary();
      else if (accept('/')) r /= unary();
      else return r;
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    skip();
    bool neg = false;
    if (accept('(')) {
      neg = accept('-');
      long k = integer();
      if (!accept(')')) fail("expected ')'");
      return base.pow(static_cast<int>(neg ? -k : k));
    }
    neg = accept('-');
    skip();
    long k = integer();
    return base.pow(static_cast<int>(neg ? -k : k));
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }
    size_t start = pos_;
    while (pos_ < s_.size()) {
      unsigned char ch = static_cast<unsigned char>(s_[pos_]);
      if (std::isalnum(ch) || ch == '_' || ch >= 0x80) ++pos_;
      else break;
    }
    if (start == pos_) fail("unexpected '" + std::string(1, c) + "'");
    std::string name = s_.substr(start, pos_ - start);
    auto v = var_from_name(name);
    if (!v) fail("unknown variable '" + name + "'");
    return RatFunc::var(*v);
  }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& s) { return Parser(s).run(); }

LaurentPoly parse_poly(const std::string& s) {
  RatFunc f = parse_ratfunc(s);
  if (!f.is_polynomial()) throw ParseError("not a Laurent polynomial: " + s);
  return f.num().scaled(1 / f.den().constant_term());
}

}  // namespace wmk
