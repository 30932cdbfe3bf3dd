#include "qvt/serre.hpp"

#include "qvt/qint.hpp"

#include <map>
#include <stdexcept>

namespace qvt {

namespace {

void check_pair(const Cartan& c, int i, int j) {
  c->unit(i);
  c->unit(j);
  if (i == j) throw std::invalid_argument("Serre elements need i != j");
}

int serre_n(const CartanData& c, int i, int j) { return -2 * c.dot(i, j) / c.dot(i, i); }

}  // namespace

SerreElem serre_elem(const Cartan& c, int i, int j) {
  check_pair(c, i, j);
  const int d = c->scale(i);
  SerreElem s{i, j, Rat(-c->angle(i, j), d), Rat(-c->angle(j, i), d), serre_n(*c, i, j), FreeElem(c)};
  s.a1.canonicalize();
  s.a2.canonicalize();
  const int m = s.N + 1;
  for (int p = 0; p <= m; ++p) {
    const int q = m - p;
    // t_i^{-p(p' + a' - a'')} with d_i a' = -<i,j>, d_i a'' = -<j,i>
    int te = -p * (d * q - c->angle(i, j) + c->angle(j, i));
    RatFunc coeff = RatFunc::normalize(LPoly::monomial(p % 2 ? -1 : 1, 0, te),
                                       qfactorial(p, QFlavor::VT, d) * qfactorial(q, QFlavor::VT, d));
    Word w(static_cast<std::size_t>(p), static_cast<char>(i));
    w.push_back(static_cast<char>(j));
    w.append(static_cast<std::size_t>(q), static_cast<char>(i));
    s.element.add(w, coeff);
  }
  return s;
}

bool serre_derivation_check(const SerreElem& s, Side side) {
  const Cartan& c = s.element.cartan();
  for (int k = 0; k < c->rank(); ++k) {
    FreeElem d = side == Side::Right ? deriv_r(k, s.element) : deriv_l(k, s.element);
    if (!d.is_zero()) return false;
  }
  return true;
}

bool serre_in_radical(const SerreElem& s) { return is_zero_in_f(s.element); }

IdealComparison compare_serre_ideal(const Cartan& c, const Degree& nu, int tr_bound) {
  if (trace(nu) > tr_bound) throw std::invalid_argument("degree exceeds the trace bound");
  const int n = c->rank();
  std::vector<Word> words = words_of_degree(nu);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;

  // Generators u S_ij w; distinct (u, S, w) give the rows.
  PolyMatrix rows;
  std::vector<FreeElem> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      SerreElem s = serre_elem(c, i, j);
      Degree ds = s.element.degree();
      Degree rest = nu - ds;
      bool ok = true;
      for (int x : rest) ok = ok && x >= 0;
      if (!ok) continue;
      for (const Degree& left : degrees_below(rest)) {
        auto lw = words_of_degree(left), rw = words_of_degree(rest - left);
        for (const auto& u : lw)
          for (const auto& w : rw) {
            std::vector<RatFunc> row(words.size());
            for (const auto& [word, coeff] : s.element.terms()) row[index.at(u + word + w)] = coeff;
            rows.push_back(clear_denominators(row));
            FreeElem g(c);
            for (const auto& [word, coeff] : s.element.terms()) g.add(u + word + w, coeff);
            gens.push_back(std::move(g));
          }
      }
    }

  IdealComparison out;
  out.words = words.size();
  GramBlock g = gram(c, nu);
  RankRadical rr = rank_and_radical(g);
  out.gram_rank = rr.rank;
  RowReduction ideal(rows, words.size());
  out.ideal_rank = ideal.rank();
  out.ideal_in_radical = true;
  for (std::size_t r : ideal.pivot_rows())
    if (!is_zero_in_f(gens[r])) out.ideal_in_radical = false;
  out.radical_in_ideal = true;
  for (const auto& k : rr.radical) {
    std::vector<RatFunc> row(words.size());
    for (const auto& [word, coeff] : k.terms()) row[index.at(word)] = coeff;
    if (!ideal.contains(clear_denominators(row))) out.radical_in_ideal = false;
  }
  return out;
}

bool radical_equals_serre_ideal(const Cartan& c, const Degree& nu, int tr_bound) {
  return compare_serre_ideal(c, nu, tr_bound).equal();
}

FreeElem binomial_serre_elem(const Cartan& c, int i, int j) {
  check_pair(c, i, j);
  const int d = c->scale(i);
  const int m = serre_n(*c, i, j) + 1;
  FreeElem e(c);
  for (int p = 0; p <= m; ++p) {
    int te = p * (c->angle(i, j) - c->angle(j, i));
    LPoly coeff = qbinom(m, p, QFlavor::V, d).shifted(0, te) * Rat(p % 2 ? -1 : 1);
    Word w(static_cast<std::size_t>(p), static_cast<char>(i));
    w.push_back(static_cast<char>(j));
    w.append(static_cast<std::size_t>(m - p), static_cast<char>(i));
    e.add(w, coeff);
  }
  return e;
}

bool serre_forms_equivalent(const FreeElem& e, const SerreElem& s, RatFunc* unit) {
  if (e.is_zero() || s.element.is_zero()) return false;
  const int d = s.element.cartan()->scale(s.i);
  FreeElem scaled = s.element * RatFunc(qfactorial(s.N + 1, QFlavor::VT, d));
  const Word& w = scaled.terms().begin()->first;
  RatFunc u = e.coeff(w) / scaled.coeff(w);
  if (!u.is_laurent() || !u.num().is_monomial()) return false;
  const Rat& c = u.num().lead().c;
  if (c != 1 && c != -1) return false;
  if (!(scaled * u == e)) return false;
  if (unit) *unit = u;
  return true;
}

bool serre_form_equivalence(const Cartan& c, int i, int j) {
  return serre_forms_equivalent(binomial_serre_elem(c, i, j), serre_elem(c, i, j));
}

}  // namespace qvt
