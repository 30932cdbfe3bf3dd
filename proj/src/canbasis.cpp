#include "qvt/canbasis.hpp"

#include "qvt/qint.hpp"
#include "qvt/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qvt {

std::string CBLabel::str() const {
  if (side == 0) return "theta_" + std::to_string(a) + "^(" + std::to_string(b) + ")";
  return "side" + std::to_string(side) + "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

bool is_a2(const CartanData& c) { return c.omega() == Matrix{{1, -1}, {0, 1}}; }

FreeElem a2_element(const Cartan& c, const CBLabel& l) {
  if (!is_a2(*c)) throw std::invalid_argument("a2_element needs Omega = [[1,-1],[0,1]]");
  if (l.a < 0 || l.c < 0 || l.a + l.c > l.b || (l.side != 1 && l.side != 2))
    throw std::invalid_argument("not an A2 label: " + l.str());
  const int outer = l.side == 1 ? 0 : 1;
  const int inner = 1 - outer;
  // Side 2 reads theta_j^{(c)} theta_i^{(b)} theta_j^{(a)}.
  const int first = l.side == 1 ? l.a : l.c;
  const int last = l.side == 1 ? l.c : l.a;
  return divided_power(c, outer, first) * divided_power(c, inner, l.b) *
         divided_power(c, outer, last) * monomial(0, -l.a * (l.b + l.c));
}

std::vector<CBCandidate> a2_basis(const Cartan& c, const Degree& nu) {
  if (!is_a2(*c)) throw std::invalid_argument("a2_basis needs Omega = [[1,-1],[0,1]]");
  if (nu.size() != 2 || nu[0] < 0 || nu[1] < 0) throw std::invalid_argument("bad degree");
  std::vector<CBCandidate> out;
  // Side 1 has degree (a+c, b), side 2 has degree (b, a+c).
  if (nu[0] <= nu[1])
    for (int a = 0; a <= nu[0]; ++a) {
      CBLabel l{1, a, nu[1], nu[0] - a};
      out.push_back({a2_element(c, l), l});
    }
  const std::size_t side1 = out.size();
  if (nu[1] <= nu[0])
    for (int a = 0; a <= nu[1]; ++a) {
      CBLabel l{2, a, nu[0], nu[1] - a};
      FreeElem x = a2_element(c, l);
      bool dup = false;
      for (std::size_t k = 0; k < side1 && !dup; ++k) dup = eq_in_f(out[k].element, x);
      if (!dup) out.push_back({std::move(x), l});
    }
  return out;
}

std::vector<CBCandidate> canonical_family(const Cartan& c, const Degree& nu) {
  if (c->rank() == 1) {
    if (nu.size() != 1 || nu[0] < 0) throw std::invalid_argument("bad degree");
    CBLabel l{0, 0, nu[0], 0};
    return {{divided_power(c, 0, nu[0]), l}};
  }
  if (is_a2(*c)) return a2_basis(c, nu);
  throw std::invalid_argument("no closed-form canonical family for this Omega");
}

bool in_laurent_ring(const RatFunc& x) { return x.is_laurent() && x.num().has_integer_coeffs(); }

namespace {

// prod over maximal runs i^n of w of [n]^!_{v_i,t_i}.
LPoly run_factorials(const CartanData& c, const Word& w) {
  LPoly f(1);
  for (std::size_t p = 0; p < w.size();) {
    std::size_t q = p;
    while (q < w.size() && w[q] == w[p]) ++q;
    f *= qfactorial(static_cast<int>(q - p), QFlavor::VT, c.scale(w[p]));
    p = q;
  }
  return f;
}

}  // namespace

std::vector<FreeElem> divided_monomials(const Cartan& c, const Degree& nu) {
  if (static_cast<int>(nu.size()) != c->rank() || std::any_of(nu.begin(), nu.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("bad degree");
  std::vector<std::pair<int, Word>> found;
  Degree left = nu;
  Word w;
  int runs = 0;
  auto rec = [&](auto&& self, int prev) -> void {
    if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
      found.emplace_back(runs, w);
      return;
    }
    for (int i = 0; i < c->rank(); ++i) {
      auto& li = left[static_cast<std::size_t>(i)];
      if (i == prev || li == 0) continue;
      const int avail = li;
      for (int n = 1; n <= avail; ++n) {
        li -= n;
        w.append(static_cast<std::size_t>(n), static_cast<char>(i));
        ++runs;
        self(self, i);
        --runs;
        w.resize(w.size() - static_cast<std::size_t>(n));
        li += n;
      }
    }
  };
  rec(rec, -1);
  // Lexicographic order on words agrees with lexicographic order on
  // (vertex, exponent) sequences only up to run boundaries; sort on the runs.
  auto runs_of = [](const Word& x) {
    std::vector<std::pair<int, int>> r;
    for (std::size_t p = 0; p < x.size();) {
      std::size_t q = p;
      while (q < x.size() && x[q] == x[p]) ++q;
      r.emplace_back(x[p], static_cast<int>(q - p));
      p = q;
    }
    return r;
  };
  std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return runs_of(x.second) < runs_of(y.second);
  });
  std::vector<FreeElem> out;
  out.reserve(found.size());
  for (const auto& [k, word] : found)
    out.push_back(FreeElem::word(c, word, RatFunc::normalize(LPoly(1), run_factorials(*c, word))));
  return out;
}

bool is_integral(const FreeElem& x) {
  if (x.is_zero()) return true;
  const Cartan& c = x.cartan();
  const bool direct = std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& kv) {
    return in_laurent_ring(kv.second * RatFunc(run_factorials(*c, kv.first)));
  });
  if (direct) return true;
  const Degree nu = x.degree();
  const auto mons = divided_monomials(c, nu);
  QuotientSpan span(c, nu, mons);
  auto coeffs = span.expand(x);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(), in_laurent_ring);
}

bool almost_delta(const RatFunc& f, bool diagonal, int order) {
  if (f.is_zero()) return !diagonal;
  if (!f.is_t_free()) return false;
  const VSeries s = series_in_vinv_upto(f, order);
  if (s.lead < 0) return false;
  if (!(s.at(0) == RatFunc(diagonal ? 1 : 0))) return false;
  return s.integral();
}

RatFunc mirror_pair(const FreeElem& x, const FreeElem& y) {
  const RatFunc p = pair(bar(x), bar(y));
  if (p.is_zero()) return p;
  const CartanData& c = *x.cartan();
  const Degree nu = x.degree();
  int e = 0;
  for (int i = 0; i < c.rank(); ++i) e += 2 * c.scale(i) * nu[static_cast<std::size_t>(i)];
  return p.bar() * monomial(e, 0, trace(nu) % 2 ? -1 : 1);
}

CBReport cb_verify(const FreeElem& x, int series_order) {
  if (!x.is_homogeneous()) throw std::invalid_argument("cb_verify needs a homogeneous element");
  CBReport r;
  r.integral = is_integral(x);
  r.bar_invariant = eq_in_f(bar(x), x);
  r.norm = pair(x, x);
  r.t_free_norm = r.norm.is_t_free();
  r.norm_ok = r.t_free_norm && almost_delta(r.norm, true, series_order);
  r.mirror_norm_ok = almost_delta(mirror_pair(x, x), true, series_order);
  return r;
}

bool near_orthonormality(const std::vector<CBCandidate>& basis, int series_order) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      if (!almost_delta(pair(basis[a].element, basis[b].element), a == b, series_order)) return false;
  return true;
}

bool near_orthonormality_mirror(const std::vector<CBCandidate>& basis, int series_order) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      if (!almost_delta(mirror_pair(basis[a].element, basis[b].element), a == b, series_order))
        return false;
  return true;
}

int membership_filtration(const FreeElem& x, int i) {
  if (is_zero_in_f(x)) throw std::invalid_argument("membership_filtration of an element zero in f");
  const Cartan& c = x.cartan();
  const Degree nu = x.degree();
  c->unit(i);
  const int top = nu[static_cast<std::size_t>(i)];
  for (int n = 1; n <= top; ++n) {
    Degree rest = nu;
    rest[static_cast<std::size_t>(i)] -= n;
    const Word prefix(static_cast<std::size_t>(n), static_cast<char>(i));
    std::vector<FreeElem> spanning;
    for (const auto& w : words_of_degree(rest)) spanning.push_back(FreeElem::word(c, prefix + w));
    if (!QuotientSpan(c, nu, spanning).contains(x)) return n - 1;
  }
  return top;
}

std::vector<BasisTerm> expand_in_family(const FreeElem& y) {
  if (y.is_zero()) return {};
  const Cartan& c = y.cartan();
  const Degree nu = y.degree();
  auto family = canonical_family(c, nu);
  std::vector<FreeElem> elems;
  for (const auto& b : family) elems.push_back(b.element);
  auto coeffs = QuotientSpan(c, nu, elems).expand(y);
  if (!coeffs) throw std::invalid_argument("element outside the span of the canonical family");
  std::vector<BasisTerm> out;
  for (std::size_t k = 0; k < family.size(); ++k)
    if (!(*coeffs)[k].is_zero()) out.push_back({family[k], (*coeffs)[k]});
  return out;
}

std::vector<BasisTerm> pi_expansion(const CBCandidate& b, int i, int n) {
  const Cartan& c = b.element.cartan();
  if (n < 0) throw std::invalid_argument("negative n");
  if (membership_filtration(b.element, i) != 0)
    throw std::invalid_argument("pi_expansion needs b at filtration level 0");
  const Degree bd = b.element.degree();
  const FreeElem y = divided_power(c, i, n) * b.element * monomial(0, -n * c->bracket(c->unit(i), bd));
  auto terms = expand_in_family(y);
  for (auto& t : terms) t.level = membership_filtration(t.basis.element, i);
  return terms;
}

namespace {

std::optional<std::size_t> leading_index(const std::vector<BasisTerm>& terms, int n) {
  std::optional<std::size_t> lead;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    if (t.level == n && t.coeff.is_one() && !lead) {
      lead = k;
    } else if (t.level < n + 1 || !in_laurent_ring(t.coeff)) {
      return std::nullopt;
    }
  }
  return lead;
}

}  // namespace

std::optional<CBCandidate> pi_image(const CBCandidate& b, int i, int n) {
  auto terms = pi_expansion(b, i, n);
  auto k = leading_index(terms, n);
  if (!k) return std::nullopt;
  return terms[*k].basis;
}

bool pi_leading_term_check(const CBCandidate& b, int i, int n, const CBCandidate& target) {
  auto terms = pi_expansion(b, i, n);
  auto k = leading_index(terms, n);
  return k && eq_in_f(terms[*k].basis.element, target.element);
}

std::vector<BasisTerm> structure_constants(const CBCandidate& b, const CBCandidate& bp) {
  return expand_in_family(b.element * bp.element);
}

std::vector<CoproductTerm> coproduct_constants(const CBCandidate& b) {
  const Cartan& c = b.element.cartan();
  const TensorElem r = coproduct(b.element);
  // Split by (|x1|, |x2|), then group the left factors by the right word.
  std::map<std::pair<Degree, Degree>, std::map<Word, FreeElem>> split;
  for (const auto& [k, coeff] : r.terms()) {
    auto& by_right = split[{word_degree(k.first, c->rank()), word_degree(k.second, c->rank())}];
    auto it = by_right.try_emplace(k.second, c).first;
    it->second.add(k.first, coeff);
  }
  std::vector<CoproductTerm> out;
  for (const auto& [degs, by_right] : split) {
    const auto lf = canonical_family(c, degs.first);
    const auto rf = canonical_family(c, degs.second);
    std::vector<FreeElem> le, re;
    for (const auto& x : lf) le.push_back(x.element);
    for (const auto& x : rf) re.push_back(x.element);
    const QuotientSpan ls(c, degs.first, le), rs(c, degs.second, re);
    std::vector<FreeElem> right_parts(lf.size(), FreeElem(c));
    for (const auto& [w, left] : by_right) {
      auto a = ls.expand(left);
      if (!a) throw std::logic_error("left coproduct factor outside the family span");
      for (std::size_t k = 0; k < lf.size(); ++k)
        if (!(*a)[k].is_zero()) right_parts[k].add(w, (*a)[k]);
    }
    for (std::size_t k = 0; k < lf.size(); ++k) {
      if (right_parts[k].is_zero()) continue;
      auto d = rs.expand(right_parts[k]);
      if (!d) throw std::logic_error("right coproduct factor outside the family span");
      for (std::size_t m = 0; m < rf.size(); ++m)
        if (!(*d)[m].is_zero()) out.push_back({lf[k], rf[m], (*d)[m]});
    }
  }
  return out;
}

bool positive_in_v(const RatFunc& c, int t_exp) {
  const RatFunc u = c * monomial(0, -t_exp);
  if (!u.is_t_free() || !in_laurent_ring(u)) return false;
  for (const auto& x : u.num().terms())
    if (sgn(x.c) < 0) return false;
  return true;
}

}  // namespace qvt
