// Polynomial gcd over Q[v,t]. The heuristic integer gcd (evaluate, take an
// integer gcd, reinterpret its balanced digits as a polynomial, verify by
// division) handles almost every input; the primitive pseudo-remainder
// sequence on Q[v][t] is the fallback.
#include "qvt/lpoly.hpp"

#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace qvt {

namespace {

// Dense polynomial in v over Q, index = exponent.
using UPoly = std::vector<Rat>;
// Dense polynomial in t with UPoly coefficients.
using BPoly = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// a = q*b + r.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  const Rat& lb = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    Rat c = r.back() / lb;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
}

UPoly monic(UPoly a) {
  if (a.empty()) return a;
  Rat l = a.back();
  for (auto& c : a) c /= l;
  return a;
}

// Image modulo p of the primitive integer multiple of a (low to high).
std::vector<std::uint64_t> image(const UPoly& a) {
  Int l = 1, g = 0;
  for (const auto& c : a) l = lcm(l, Int(c.get_den()));
  for (const auto& c : a) g = gcd(g, Int(c * l));
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = modp::reduce(Int(a[i] * l / g));
  return out;
}

// Certifies coprimality: if p does not divide the leading coefficient of the
// primitive integer form of a, every factor of gcd(a, b) survives modulo p.
bool certified_coprime(const UPoly& a, const UPoly& b) {
  auto ia = image(a), ib = image(b);
  if (ia.empty() || ib.empty() || ia.back() == 0) return false;
  return modp::gcd_degree(std::move(ia), std::move(ib)) == 0;
}

UPoly ugcd(UPoly a, UPoly b) {
  if (a.size() > 1 && b.size() > 1 && certified_coprime(a, b)) return UPoly{Rat(1)};
  while (!b.empty()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.empty()) throw std::logic_error("gcd: inexact univariate division");
  return q;
}

UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? monic(c) : ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly divide_content(const BPoly& p, const UPoly& c) {
  BPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) r[i] = exact_div(p[i], c);
  return r;
}

// Pseudo-remainder of a by b with respect to t.
BPoly prem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& c : a) c = mul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(la, b[i]));
    trim(a);
  }
  return a;
}

BPoly primitive(const BPoly& p) { return divide_content(p, content(p)); }

// Evaluates an integer-coefficient polynomial at x modulo p.
std::uint64_t eval_image_int(const UPoly& c, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = modp::add(modp::mul(acc, x), modp::reduce(Int(c[i])));
  return acc;
}

// True when gcd(a, b) certifiably has t-degree zero: a and b are primitive
// integer polynomials and v is specialised at a point keeping lc_t(a) alive.
bool certified_t_coprime(const BPoly& a, const BPoly& b) {
  for (std::uint64_t x : {1000003ULL, 998244353ULL, 123456789123ULL}) {
    std::vector<std::uint64_t> ia(a.size()), ib(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) ia[i] = eval_image_int(a[i], x);
    for (std::size_t i = 0; i < b.size(); ++i) ib[i] = eval_image_int(b[i], x);
    if (ia.back() == 0) continue;
    return modp::gcd_degree(std::move(ia), std::move(ib)) == 0;
  }
  return false;
}

// Scale to a primitive integer polynomial with positive degree-lex leading term.
LPoly canonical(const LPoly& p) {
  if (p.is_zero()) return p;
  Int l = 1, g = 0;
  for (const auto& x : p.terms()) l = lcm(l, Int(x.c.get_den()));
  for (const auto& x : p.terms()) g = gcd(g, Int(x.c * l));
  const LPoly::Term* lead = &p.terms()[0];
  for (const auto& x : p.terms()) {
    int dx = x.v + x.t, dl = lead->v + lead->t;
    if (dx > dl || (dx == dl && x.v > lead->v)) lead = &x;
  }
  Rat s = Rat(l) / Rat(g);
  if (sgn(lead->c) < 0) s = -s;
  return p * s;
}

BPoly to_bpoly(const LPoly& p, int dv, int dt) {
  BPoly r;
  for (const auto& x : p.terms()) {
    auto ti = static_cast<std::size_t>(x.t - dt);
    auto vi = static_cast<std::size_t>(x.v - dv);
    if (r.size() <= ti) r.resize(ti + 1);
    if (r[ti].size() <= vi) r[ti].resize(vi + 1);
    r[ti][vi] = x.c;
  }
  return r;
}

LPoly from_bpoly(const BPoly& p) {
  std::vector<LPoly::Term> ts;
  for (std::size_t ti = 0; ti < p.size(); ++ti)
    for (std::size_t vi = 0; vi < p[ti].size(); ++vi)
      if (sgn(p[ti][vi]) != 0)
        ts.push_back({static_cast<int>(vi), static_cast<int>(ti), p[ti][vi]});
  return LPoly::from_terms(std::move(ts));
}

// Heuristic gcd on primitive integer polynomials.
using ZPoly = std::vector<Int>;

Int max_norm(const ZPoly& p) {
  Int m = 0;
  for (const auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

Int eval_at(const ZPoly& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Balanced base-x digits of n, least significant first.
ZPoly digits(Int n, const Int& x) {
  ZPoly out;
  Int half = x / 2;
  while (n != 0) {
    Int d;
    mpz_fdiv_r(d.get_mpz_t(), n.get_mpz_t(), x.get_mpz_t());
    if (d > half) d -= x;
    out.push_back(d);
    n = (n - d) / x;
  }
  return out;
}

LPoly to_lpoly(const std::vector<ZPoly>& p) {  // p[t][v]
  std::vector<LPoly::Term> ts;
  for (std::size_t ti = 0; ti < p.size(); ++ti)
    for (std::size_t vi = 0; vi < p[ti].size(); ++vi)
      if (p[ti][vi] != 0) ts.push_back({static_cast<int>(vi), static_cast<int>(ti), Rat(p[ti][vi])});
  return LPoly::from_terms(std::move(ts));
}

Int int_content(const LPoly& p) {
  Int g = 0;
  for (const auto& x : p.terms()) g = gcd(g, Int(x.c.get_num()));
  return g;
}

// Trial division of integer polynomials (no negative exponents) in lex order;
// h is primitive, so by Gauss's lemma an exact quotient has integer coefficients.
bool poly_divide(const LPoly& f, const LPoly& h, LPoly* quot = nullptr) {
  if (h.is_zero()) return false;
  if (f.is_zero()) {
    if (quot) *quot = LPoly();
    return true;
  }
  if (h.max_v() > f.max_v() || h.max_t() > f.max_t()) return false;
  const LPoly::Term hl = h.lead();
  LPoly r = f;
  std::vector<LPoly::Term> q;
  while (!r.is_zero()) {
    const LPoly::Term& rl = r.lead();
    int dv = rl.v - hl.v, dt = rl.t - hl.t;
    if (dv < 0 || dt < 0) return false;
    Rat c = rl.c / hl.c;
    if (c.get_den() != 1) return false;
    q.push_back({dv, dt, c});
    r -= h.shifted(dv, dt) * c;
  }
  if (quot) *quot = LPoly::from_terms(std::move(q));
  return true;
}

bool divides(const LPoly& h, const LPoly& f) { return poly_divide(f, h); }

Int next_point(const Int& x) {
  Int r = sqrt(Int(sqrt(x)));
  return Int(73794) * x * r / 27011;
}

// Large enough that a primitive candidate dividing both inputs is the gcd.
Int start_point(const Int& fn, const Int& gn) { return 2 * std::min(fn, gn) + 29; }

// Univariate in v on primitive inputs; returns false on failure.
bool heu_primitive(const ZPoly& f, const ZPoly& g, ZPoly& h) {
  Int x = start_point(max_norm(f), max_norm(g));
  LPoly lf = to_lpoly({f}), lg = to_lpoly({g});
  for (int attempt = 0; attempt < 6; ++attempt, x = next_point(x)) {
    Int ff = eval_at(f, x), gg = eval_at(g, x);
    if (ff == 0 || gg == 0) continue;
    Int hh = gcd(ff, gg);
    ZPoly cand = digits(hh, x);
    LPoly lh = to_lpoly({cand});
    if (!lh.is_zero()) {
      lh *= Rat(1) / Rat(int_content(lh));
      if (divides(lh, lf) && divides(lh, lg)) {
        h.assign(static_cast<std::size_t>(lh.max_v()) + 1, Int(0));
        for (const auto& term : lh.terms()) h[static_cast<std::size_t>(term.v)] = term.c.get_num();
        return true;
      }
    }
    // Cofactor route: f / gcd evaluates to ff / hh.
    LPoly cf = to_lpoly({digits(ff / hh, x)});
    if (!cf.is_zero()) {
      LPoly q;
      cf *= Rat(1) / Rat(int_content(cf));
      if (poly_divide(lf, cf, &q)) {
        q *= Rat(1) / Rat(int_content(q));
        if (divides(q, lg)) {
          h.assign(static_cast<std::size_t>(q.max_v()) + 1, Int(0));
          for (const auto& term : q.terms()) h[static_cast<std::size_t>(term.v)] = term.c.get_num();
          return true;
        }
      }
    }
  }
  return false;
}

Int zcontent(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

// Univariate in v, including the integer content; returns false on failure.
bool heu_univariate(ZPoly f, ZPoly g, ZPoly& h) {
  Int cf = zcontent(f), cg = zcontent(g), c = gcd(cf, cg);
  for (auto& x : f) x /= cf;
  for (auto& x : g) x /= cg;
  if (heu_primitive(f, g, h)) {
    for (auto& x : h) x *= c;
    return true;
  }
  return false;
}

// p[t][v] with integer coefficients; bivariate heuristic gcd.
bool heu_bivariate(const LPoly& a, const LPoly& b, LPoly& out) {
  auto split = [](const LPoly& p) {
    std::vector<ZPoly> r(static_cast<std::size_t>(p.max_t()) + 1);
    for (const auto& x : p.terms()) {
      auto& row = r[static_cast<std::size_t>(x.t)];
      if (row.size() <= static_cast<std::size_t>(x.v)) row.resize(static_cast<std::size_t>(x.v) + 1, Int(0));
      row[static_cast<std::size_t>(x.v)] = x.c.get_num();
    }
    return r;
  };
  auto norm = [](const LPoly& p) {
    Int m = 0;
    for (const auto& x : p.terms())
      if (abs(Int(x.c.get_num())) > m) m = abs(Int(x.c.get_num()));
    return m;
  };
  std::vector<ZPoly> pa = split(a), pb = split(b);
  Int x = start_point(norm(a), norm(b));
  for (int attempt = 0; attempt < 6; ++attempt, x = next_point(x)) {
    // Substitute t = x.
    auto subst = [&](const std::vector<ZPoly>& p) {
      ZPoly r;
      Int pw = 1;
      for (const auto& row : p) {
        if (r.size() < row.size()) r.resize(row.size(), Int(0));
        for (std::size_t i = 0; i < row.size(); ++i) r[i] += row[i] * pw;
        pw *= x;
      }
      while (!r.empty() && r.back() == 0) r.pop_back();
      return r;
    };
    ZPoly fa = subst(pa), fb = subst(pb);
    if (fa.empty() || fb.empty()) continue;
    ZPoly h;
    if (!heu_univariate(fa, fb, h)) continue;
    // Each integer coefficient of h(v) becomes a polynomial in t.
    std::vector<LPoly::Term> ts;
    for (std::size_t vi = 0; vi < h.size(); ++vi) {
      ZPoly d = digits(h[vi], x);
      for (std::size_t ti = 0; ti < d.size(); ++ti)
        if (d[ti] != 0) ts.push_back({static_cast<int>(vi), static_cast<int>(ti), Rat(d[ti])});
    }
    LPoly cand = LPoly::from_terms(std::move(ts));
    if (cand.is_zero()) continue;
    cand *= Rat(1) / Rat(int_content(cand));
    if (divides(cand, a) && divides(cand, b)) {
      out = cand;
      return true;
    }
  }
  return false;
}

}  // namespace

LPoly gcd(const LPoly& a, const LPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return canonical(b.shifted(-b.min_v(), -b.min_t()));
  if (b.is_zero()) return canonical(a.shifted(-a.min_v(), -a.min_t()));
  {
    LPoly ca = canonical(a.shifted(-a.min_v(), -a.min_t()));
    LPoly cb = canonical(b.shifted(-b.min_v(), -b.min_t()));
    if (ca.is_constant() || cb.is_constant()) return LPoly(1);
    LPoly h;
    if (heu_bivariate(ca, cb, h)) return canonical(h);
  }
  BPoly pa = to_bpoly(a, a.min_v(), a.min_t());
  BPoly pb = to_bpoly(b, b.min_v(), b.min_t());
  trim(pa);
  trim(pb);
  UPoly c = ugcd(content(pa), content(pb));
  if (pa.size() > 1 && pb.size() > 1) {
    BPoly ia = to_bpoly(canonical(a.shifted(-a.min_v(), -a.min_t())), 0, 0);
    BPoly ib = to_bpoly(canonical(b.shifted(-b.min_v(), -b.min_t())), 0, 0);
    if (certified_t_coprime(ia, ib)) {
      LPoly r = from_bpoly(BPoly{c});
      return canonical(r.shifted(-r.min_v(), -r.min_t()));
    }
  }
  BPoly x = primitive(pa), y = primitive(pb);
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    BPoly r = prem(x, y);
    x = std::move(y);
    y = r.empty() ? BPoly{} : primitive(r);
    if (y.empty()) break;
  }
  // y constant in t (nonzero) means the primitive parts are coprime.
  BPoly g = y.empty() ? x : BPoly{UPoly{Rat(1)}};
  for (auto& coef : g) coef = mul(coef, c);
  trim(g);
  LPoly r = from_bpoly(g);
  return canonical(r.shifted(-r.min_v(), -r.min_t()));
}

}  // namespace qvt
