#pragma once

#include "qvt/lpoly.hpp"

#include <string>

namespace qvt {

// Element of Q(v,t) in canonical form: the denominator is a polynomial with
// minimal exponents zero, primitive over Z, with positive leading coefficient
// in degree-lex order (v before t); Laurent shifts live in the numerator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static RatFunc normalize(const LPoly& num, const LPoly& den);

  const LPoly& num() const { return num_; }
  const LPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_t_free() const { return num_.is_t_free() && den_.is_t_free(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  RatFunc pow(int n) const;
  RatFunc shifted(int dv, int dt) const;
  RatFunc bar() const;
  RatFunc scaled(int d) const;
  // Substitutes t = 1; throws std::domain_error on a pole at t = 1.
  RatFunc at_t1() const;

  std::string str() const;

 private:
  LPoly num_;
  LPoly den_;
};

RatFunc monomial(int v, int t, const Rat& c = 1);

}  // namespace qvt
