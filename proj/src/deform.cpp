#include "qvt/deform.hpp"

#include <map>

namespace qvt {

int cocycle_sigma(const CartanData& c, const Word& w) {
  // Accumulate [deg of prefix, letter] so the cost stays linear in |w|.
  const int n = c.rank();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  int s = 0;
  for (char l : w) {
    for (int k = 0; k < n; ++k)
      if (seen[static_cast<std::size_t>(k)]) s += seen[static_cast<std::size_t>(k)] * c.bracket(k, l);
    ++seen[static_cast<std::size_t>(l)];
  }
  return s;
}

FreeElem star_mul(const FreeElem& x, const FreeElem& y) {
  require_same_cartan(x.cartan(), y.cartan());
  const CartanData& c = *x.cartan();
  FreeElem out(x.cartan());
  for (const auto& [dx, cx] : x.components())
    for (const auto& [dy, cy] : y.components())
      out += (cx * cy) * monomial(0, -c.bracket(dx, dy));
  return out;
}

FreeElem cocycle_twist(const FreeElem& x, TwistDirection dir) {
  const CartanData& c = *x.cartan();
  const int sign = dir == TwistDirection::ToF ? 1 : -1;
  return x.map([&](const Word& w, const RatFunc& a) { return a.shifted(0, sign * cocycle_sigma(c, w)); });
}

FreeElem specialize_t1(const FreeElem& x) {
  return x.map([](const Word&, const RatFunc& a) { return a.at_t1(); });
}

RatFunc pair_star(const FreeElem& x, const FreeElem& y) {
  require_same_cartan(x.cartan(), y.cartan());
  const Cartan& c = x.cartan();
  FreeElem tx = cocycle_twist(x, TwistDirection::ToF), ty = cocycle_twist(y, TwistDirection::ToF);
  std::map<Degree, RatFunc> by_degree;
  for (const auto& [u, a] : tx.terms())
    for (const auto& [w, b] : ty.terms()) {
      if (u.size() != w.size()) continue;
      LPoly p = pair_words_poly(c, u, w);
      if (p.is_zero()) continue;
      by_degree[word_degree(u, c->rank())] += a * b * RatFunc(p.at_t1());
    }
  RatFunc total;
  for (const auto& [d, v] : by_degree) total += v * pair_scale(c, d);
  return total;
}

bool in_untwisted_lattice(const FreeElem& x) {
  const FreeElem tx = cocycle_twist(x, TwistDirection::ToF);
  for (const auto& [w, a] : tx.terms())
    if (!a.is_t_free()) return false;
  return true;
}

bool forms_agree_check(const FreeElem& x, const FreeElem& y) {
  if (!in_untwisted_lattice(x) || !in_untwisted_lattice(y))
    throw PreconditionError("forms_agree_check: argument is not t-free after the cocycle twist");
  return pair(x, y) == pair_star(x, y);
}

TensorElem twisted_coproduct(const FreeElem& x) {
  const CartanData& c = *x.cartan();
  TensorElem r = coproduct(x);
  TensorElem out(x.cartan());
  for (const auto& [k, a] : r.terms()) {
    int te = c.bracket(word_degree(k.first, c.rank()), word_degree(k.second, c.rank()));
    out.add(k.first, k.second, a.shifted(0, te));
  }
  return out;
}

TensorElem star_tensor_mul(const TensorElem& a, const TensorElem& b) {
  require_same_cartan(a.cartan(), b.cartan());
  const CartanData& c = *a.cartan();
  const int n = c.rank();
  TensorElem out(a.cartan());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Degree x1 = word_degree(ka.first, n), x2 = word_degree(ka.second, n);
      Degree y1 = word_degree(kb.first, n), y2 = word_degree(kb.second, n);
      int ve = c.dot(y1, x2);
      int te = -c.bracket(x1, y1) - c.bracket(x2, y2);
      out.add(ka.first + kb.first, ka.second + kb.second, (ca * cb).shifted(-ve, te));
    }
  return out;
}

}  // namespace qvt
