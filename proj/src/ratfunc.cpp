#include "qvt/ratfunc.hpp"

#include <stdexcept>

namespace qvt {

namespace {

// Scalar s making p*s primitive over Z with positive degree-lex leading term.
Rat primitive_scale(const LPoly& p) {
  Int l = 1, g = 0;
  for (const auto& x : p.terms()) l = lcm(l, Int(x.c.get_den()));
  for (const auto& x : p.terms()) g = gcd(g, Int(x.c * l));
  const LPoly::Term* lead = &p.terms()[0];
  for (const auto& x : p.terms()) {
    int dx = x.v + x.t, dl = lead->v + lead->t;
    if (dx > dl || (dx == dl && x.v > lead->v)) lead = &x;
  }
  Rat s = Rat(l) / Rat(g);
  return sgn(lead->c) < 0 ? Rat(-s) : s;
}

}  // namespace

RatFunc RatFunc::normalize(const LPoly& num, const LPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  RatFunc r;
  if (num.is_zero()) return r;
  const int sv = num.min_v() - den.min_v();
  const int st = num.min_t() - den.min_t();
  LPoly n = num.shifted(-num.min_v(), -num.min_t());
  LPoly d = den.shifted(-den.min_v(), -den.min_t());
  if (d.is_constant()) {
    r.num_ = (n * Rat(1 / d.lead().c)).shifted(sv, st);
    return r;
  }
  if (!n.is_constant()) {
    LPoly g = gcd(n, d);
    if (!g.is_one()) {
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
    // Dividing out a common factor may leave fresh monomial content.
    if (d.is_constant()) {
      r.num_ = (n * Rat(1 / d.lead().c)).shifted(sv, st);
      return r;
    }
  }
  Rat s = primitive_scale(d);
  r.num_ = (n * s).shifted(sv, st);
  r.den_ = d * s;
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    return *this = normalize(num_ + o.num_, den_);
  }
  if (o.den_.is_one()) return *this = normalize(num_ + o.num_ * den_, den_);
  if (den_.is_one()) return *this = normalize(num_ * o.den_ + o.num_, o.den_);
  // Both denominators are canonical, so their gcd is too.
  LPoly g = gcd(den_, o.den_);
  LPoly a = divide_exact(o.den_, g);
  LPoly b = divide_exact(den_, g);
  return *this = normalize(num_ * a + o.num_ * b, den_ * a);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.num_.is_monomial() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (num_.is_monomial() && den_.is_one()) {
    LPoly m = num_;
    *this = o;
    num_ = num_ * m;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return normalize(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

RatFunc RatFunc::shifted(int dv, int dt) const {
  RatFunc r = *this;
  r.num_ = r.num_.shifted(dv, dt);
  return r;
}

RatFunc RatFunc::bar() const {
  if (den_.is_one()) return RatFunc(num_.bar());
  return normalize(num_.bar(), den_.bar());
}

RatFunc RatFunc::scaled(int d) const {
  if (den_.is_one()) return RatFunc(num_.scaled(d));
  return normalize(num_.scaled(d), den_.scaled(d));
}

RatFunc RatFunc::at_t1() const {
  LPoly d = den_.at_t1();
  if (d.is_zero()) throw std::domain_error("pole at t = 1");
  return normalize(num_.at_t1(), d);
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc monomial(int v, int t, const Rat& c) { return RatFunc(LPoly::monomial(c, v, t)); }

}  // namespace qvt
