#include "qvt/parse.hpp"

#include <cctype>

namespace qvt {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    RatFunc r = expr();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      skip();
      return true;
    }
    return false;
  }

  RatFunc expr() {
    bool negate = accept('-');
    RatFunc r = term();
    if (negate) r = -r;
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = factor();
    for (;;) {
      if (accept('*')) {
        r *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc factor() {
    RatFunc a = atom();
    if (!accept('^')) return a;
    bool neg = accept('-');
    std::size_t at = pos_;
    Int e = uint_lit();
    if (e > 100000) throw ParseError("exponent too large", at);
    int n = static_cast<int>(e.get_si());
    if (neg && a.is_zero()) throw ParseError("division by zero", at);
    return a.pow(neg ? -n : n);
  }

  Int uint_lit() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    Int z(std::string(s_.substr(start, pos_ - start)));
    skip();
    return z;
  }

  RatFunc atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == 'v' || c == 't') {
      ++pos_;
      skip();
      return c == 'v' ? RatFunc(LPoly::var_v()) : RatFunc(LPoly::var_t());
    }
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rat(uint_lit()));
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

RatFunc parse_coeff(std::string_view text) { return Parser(text).run(); }

}  // namespace qvt
