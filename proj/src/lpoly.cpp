#include "qvt/lpoly.hpp"

#include "modp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qvt {

namespace {

bool precedes(int av, int at, int bv, int bt) { return av > bv || (av == bv && at > bt); }

bool precedes(const LPoly::Term& a, const LPoly::Term& b) { return precedes(a.v, a.t, b.v, b.t); }

// Merge two sorted term lists computing a + s*b.
std::vector<LPoly::Term> merge(const std::vector<LPoly::Term>& a, std::span<const LPoly::Term> b,
                               int sign) {
  std::vector<LPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && precedes(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || precedes(b[j], a[i])) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().c = -out.back().c;
    } else {
      Rat c = sign < 0 ? Rat(a[i].c - b[j].c) : Rat(a[i].c + b[j].c);
      if (sgn(c) != 0) out.push_back({a[i].v, a[i].t, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LPoly::LPoly(long c) {
  if (c != 0) terms_.push_back({0, 0, Rat(c)});
}

LPoly::LPoly(const Rat& c) {
  if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

LPoly LPoly::monomial(const Rat& c, int v, int t) {
  LPoly p;
  if (sgn(c) != 0) p.terms_.push_back({v, t, c});
  return p;
}

LPoly LPoly::from_terms(std::vector<Term> terms) {
  LPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return precedes(a, b); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Rat c = terms_[i].c;
    while (j < terms_.size() && terms_[j].v == terms_[i].v && terms_[j].t == terms_[i].t) {
      c += terms_[j].c;
      ++j;
    }
    if (sgn(c) != 0) {
      int v = terms_[i].v, t = terms_[i].t;
      terms_[out++] = {v, t, std::move(c)};
    }
    i = j;
  }
  terms_.resize(out);
}

bool LPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].v == 0 && terms_[0].t == 0 && terms_[0].c == 1;
}

bool LPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].v == 0 && terms_[0].t == 0);
}

bool LPoly::is_t_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.t == 0; });
}

bool LPoly::has_integer_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& x) { return x.c.get_den() == 1; });
}

int LPoly::min_v() const { return terms_.empty() ? 0 : terms_.back().v; }

int LPoly::max_v() const { return terms_.empty() ? 0 : terms_.front().v; }

int LPoly::min_t() const {
  if (terms_.empty()) return 0;
  int m = terms_[0].t;
  for (const auto& x : terms_) m = std::min(m, x.t);
  return m;
}

int LPoly::max_t() const {
  if (terms_.empty()) return 0;
  int m = terms_[0].t;
  for (const auto& x : terms_) m = std::max(m, x.t);
  return m;
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& x : r.terms_) x.c = -x.c;
  return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LPoly& LPoly::operator*=(const LPoly& o) { return *this = *this * o; }

LPoly& LPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& x : terms_) x.c *= c;
  }
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LPoly& small = a.size() <= b.size() ? a : b;
  const LPoly& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    const auto& m = small.terms_[0];
    LPoly r = big;
    for (auto& x : r.terms_) {
      x.v += m.v;
      x.t += m.t;
      if (m.c != 1) x.c *= m.c;
    }
    return r;
  }
  const LPoly::Product p{&a, &b};
  return LPoly::sum_of_products(std::span(&p, 1));
}

LPoly LPoly::sum_of_products(std::span<const Product> ps) {
  bool integral = true;
  int v0 = 0, v1 = 0, t0 = 0, t1 = 0;
  std::size_t work = 0;
  bool any = false;
  for (const auto& p : ps) {
    if (p.a->is_zero() || p.b->is_zero()) continue;
    integral = integral && p.a->has_integer_coeffs() && p.b->has_integer_coeffs();
    int lv = p.a->min_v() + p.b->min_v(), hv = p.a->max_v() + p.b->max_v();
    int lt = p.a->min_t() + p.b->min_t(), ht = p.a->max_t() + p.b->max_t();
    if (!any) {
      v0 = lv, v1 = hv, t0 = lt, t1 = ht;
      any = true;
    } else {
      v0 = std::min(v0, lv), v1 = std::max(v1, hv), t0 = std::min(t0, lt), t1 = std::max(t1, ht);
    }
    work += p.a->size() * p.b->size();
  }
  if (!any) return {};
  const std::size_t wv = static_cast<std::size_t>(v1 - v0 + 1), wt = static_cast<std::size_t>(t1 - t0 + 1);
  if (!integral || wv * wt > 8 * work + 64) {
    std::vector<Term> out;
    out.reserve(work);
    for (const auto& p : ps)
      for (const auto& x : p.a->terms_)
        for (const auto& y : p.b->terms_) {
          Rat c = x.c * y.c;
          if (p.negate) c = -c;
          out.push_back({x.v + y.v, x.t + y.t, std::move(c)});
        }
    return from_terms(std::move(out));
  }
  // Cell (v, t) lives at index (v1 - v) * wt + (t1 - t), so a forward scan is
  // already in term order.
  std::vector<Int> acc(wv * wt);
  for (const auto& p : ps)
    for (const auto& x : p.a->terms_) {
      const mpz_srcptr xc = x.c.get_num_mpz_t();
      for (const auto& y : p.b->terms_) {
        const std::size_t k = static_cast<std::size_t>(v1 - x.v - y.v) * wt +
                              static_cast<std::size_t>(t1 - x.t - y.t);
        if (p.negate) {
          mpz_submul(acc[k].get_mpz_t(), xc, y.c.get_num_mpz_t());
        } else {
          mpz_addmul(acc[k].get_mpz_t(), xc, y.c.get_num_mpz_t());
        }
      }
    }
  LPoly r;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (sgn(acc[k]) == 0) continue;
    r.terms_.push_back({v1 - static_cast<int>(k / wt), t1 - static_cast<int>(k % wt), Rat(acc[k])});
  }
  return r;
}

bool operator==(const LPoly& a, const LPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.v != y.v || x.t != y.t || x.c != y.c) return false;
  }
  return true;
}

LPoly LPoly::shifted(int dv, int dt) const {
  LPoly r = *this;
  for (auto& x : r.terms_) {
    x.v += dv;
    x.t += dt;
  }
  return r;
}

LPoly LPoly::pow(unsigned n) const {
  LPoly result(1), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

LPoly LPoly::bar() const {
  auto ts = terms_;
  for (auto& x : ts) x.v = -x.v;
  return from_terms(std::move(ts));
}

LPoly LPoly::scaled(int d) const {
  LPoly r = *this;
  for (auto& x : r.terms_) {
    x.v *= d;
    x.t *= d;
  }
  if (d < 0) r.normalize();
  return r;
}

LPoly LPoly::at_t1() const {
  auto ts = terms_;
  for (auto& x : ts) x.t = 0;
  return from_terms(std::move(ts));
}

LPoly LPoly::t_coefficient(int b) const {
  LPoly r;
  for (const auto& x : terms_)
    if (x.t == b) r.terms_.push_back({x.v, 0, x.c});
  return r;
}

std::size_t LPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& x : terms_) {
    h = h * 1000003U ^ std::hash<int>()(x.v * 7919 + x.t);
    h = h * 1000003U ^ std::hash<std::string>()(x.c.get_str());
  }
  return h;
}

namespace {

void append_power(std::ostringstream& os, char var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  first_factor = false;
}

}  // namespace

std::string LPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& x : terms_) {
    Rat c = x.c;
    if (first) {
      if (sgn(c) < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    bool first_factor = true;
    if (c != 1 || (x.v == 0 && x.t == 0)) {
      os << c.get_str();
      first_factor = false;
    }
    append_power(os, 'v', x.v, first_factor);
    append_power(os, 't', x.t, first_factor);
  }
  return os.str();
}

bool try_divide(const LPoly& a, const LPoly& b, LPoly& q) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  q = LPoly();
  if (a.is_zero()) return true;
  auto ta = a.terms();
  auto tb = b.terms();
  if (tb.size() == 1) {
    std::vector<LPoly::Term> out(ta.begin(), ta.end());
    for (auto& x : out) {
      x.v -= tb[0].v;
      x.t -= tb[0].t;
      x.c /= tb[0].c;
    }
    q = LPoly::from_terms(std::move(out));
    return true;
  }
  // Quotient terms are produced in decreasing order; none may fall below
  // lo(a)/lo(b) if the division is exact.
  const int floor_v = ta.back().v - tb.back().v;
  const int floor_t = ta.back().t - tb.back().t;
  std::vector<LPoly::Term> r(ta.begin(), ta.end());
  std::vector<LPoly::Term> qt;
  std::vector<LPoly::Term> mb(tb.size());
  while (!r.empty()) {
    const auto& lr = r.front();
    int mv = lr.v - tb[0].v, mt = lr.t - tb[0].t;
    if (precedes(floor_v, floor_t, mv, mt)) return false;
    Rat mc = lr.c / tb[0].c;
    for (std::size_t k = 0; k < tb.size(); ++k) mb[k] = {tb[k].v + mv, tb[k].t + mt, tb[k].c * mc};
    r = merge(r, mb, -1);
    qt.push_back({mv, mt, std::move(mc)});
  }
  q.terms_ = std::move(qt);
  return true;
}

LPoly divide_exact(const LPoly& a, const LPoly& b) {
  LPoly q;
  if (!try_divide(a, b, q)) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace {

std::uint64_t signed_pow(std::uint64_t x, std::uint64_t xinv, int e) {
  return e >= 0 ? modp::pow(x, static_cast<std::uint64_t>(e))
                : modp::pow(xinv, static_cast<std::uint64_t>(-static_cast<long>(e)));
}

}  // namespace

std::uint64_t eval_mod(const LPoly& p, std::uint64_t x, std::uint64_t y) {
  std::uint64_t xinv = modp::inv(x), yinv = modp::inv(y);
  std::uint64_t acc = 0;
  for (const auto& term : p.terms()) {
    std::uint64_t c = 0;
    if (!modp::reduce(term.c, c))
      throw std::domain_error("coefficient denominator vanishes modulo evaluation prime");
    c = modp::mul(c, modp::mul(signed_pow(x, xinv, term.v), signed_pow(y, yinv, term.t)));
    acc = modp::add(acc, c);
  }
  return acc;
}

}  // namespace qvt
