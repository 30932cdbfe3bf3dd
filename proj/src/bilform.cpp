#include "qvt/bilform.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace qvt {

namespace {

struct PairCache {
  std::mutex mu;
  std::unordered_map<std::string, LPoly> values;
};

std::mutex registry_mu;
std::map<Matrix, std::shared_ptr<PairCache>>& registry() {
  static std::map<Matrix, std::shared_ptr<PairCache>> r;
  return r;
}

std::shared_ptr<PairCache> cache_for(const CartanData& c) {
  std::lock_guard lock(registry_mu);
  auto& slot = registry()[c.omega()];
  if (!slot) slot = std::make_shared<PairCache>();
  return slot;
}

LPoly peel(const CartanData& c, PairCache& cache, const Word& x, const Word& y) {
  if (x.size() != y.size()) return {};
  if (x.empty()) return LPoly(1);
  const int n = c.rank();
  if (x.size() == 1) return x == y ? LPoly(1) : LPoly();
  std::string key = x;
  key.push_back('\x7f');
  key += y;
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  // (x' theta_i, y) = t^{2[|x'|,i]} (x', r_i(y)) (theta_i, theta_i)
  const int i = x.back();
  const Word head = x.substr(0, x.size() - 1);
  Degree dh = word_degree(head, n), dy = word_degree(y, n);
  LPoly result;
  if (dh + c.unit(i) == dy) {
    Degree suffix = c.zero();
    for (std::size_t p = y.size(); p-- > 0;) {
      const int letter = y[p];
      if (letter == i) {
        LPoly sub = peel(c, cache, head, y.substr(0, p) + y.substr(p + 1));
        if (!sub.is_zero()) {
          int ve = 0, te = 0;
          for (int k = 0; k < n; ++k) {
            int dk = suffix[static_cast<std::size_t>(k)];
            ve += dk * c.dot(i, k);
            te += dk * (c.angle(k, i) - c.angle(i, k));
          }
          result += sub.shifted(-ve, te);
        }
      }
      ++suffix[static_cast<std::size_t>(letter)];
    }
    result = result.shifted(0, 2 * c.bracket(dh, c.unit(i)));
  }
  std::lock_guard lock(cache.mu);
  cache.values.emplace(std::move(key), result);
  return result;
}

RatFunc inv_one_minus(int d) {
  // 1 / (1 - v^{-2d}) = v^{2d} / (v^{2d} - 1)
  return RatFunc::normalize(LPoly::monomial(1, 2 * d, 0), LPoly::monomial(1, 2 * d, 0) - LPoly(1));
}

}  // namespace

void clear_pair_cache() {
  std::lock_guard lock(registry_mu);
  registry().clear();
}

LPoly pair_words_poly(const Cartan& c, const Word& x, const Word& y) {
  word_degree(x, c->rank());
  word_degree(y, c->rank());
  auto cache = cache_for(*c);
  return peel(*c, *cache, x, y);
}

RatFunc pair_scale(const Cartan& c, const Degree& nu) {
  RatFunc s(1);
  for (int i = 0; i < c->rank(); ++i) {
    int k = nu[static_cast<std::size_t>(i)];
    if (k) s *= inv_one_minus(c->scale(i)).pow(k);
  }
  return s;
}

RatFunc pair_words(const Cartan& c, const Word& x, const Word& y) {
  LPoly p = pair_words_poly(c, x, y);
  if (p.is_zero()) return {};
  return RatFunc(p) * pair_scale(c, word_degree(x, c->rank()));
}

RatFunc pair(const FreeElem& x, const FreeElem& y) {
  require_same_cartan(x.cartan(), y.cartan());
  const Cartan& c = x.cartan();
  std::map<Degree, RatFunc> by_degree;
  for (const auto& [u, a] : x.terms())
    for (const auto& [w, b] : y.terms()) {
      if (u.size() != w.size()) continue;
      LPoly p = pair_words_poly(c, u, w);
      if (p.is_zero()) continue;
      by_degree[word_degree(u, c->rank())] += a * b * RatFunc(p);
    }
  RatFunc total;
  for (const auto& [d, v] : by_degree) total += v * pair_scale(c, d);
  return total;
}

RatFunc pair_tensor(const TensorElem& a, const TensorElem& b) {
  require_same_cartan(a.cartan(), b.cartan());
  const Cartan& c = a.cartan();
  const int n = c->rank();
  RatFunc total;
  for (const auto& [k1, ca] : a.terms())
    for (const auto& [k2, cb] : b.terms()) {
      RatFunc p1 = pair_words(c, k1.first, k2.first);
      if (p1.is_zero()) continue;
      RatFunc p2 = pair_words(c, k1.second, k2.second);
      if (p2.is_zero()) continue;
      int te = 2 * c->bracket(word_degree(k1.first, n), word_degree(k1.second, n));
      total += ca * cb * p1 * p2 * monomial(0, te);
    }
  return total;
}

GramBlock gram(const Cartan& c, const Degree& nu) {
  if (static_cast<int>(nu.size()) != c->rank()) throw std::invalid_argument("degree has wrong length");
  for (int k : nu)
    if (k < 0) throw std::invalid_argument("degree has a negative entry");
  GramBlock g{c, nu, words_of_degree(nu), {}, pair_scale(c, nu)};
  const std::size_t n = g.words.size();
  g.poly.assign(n, PolyRow(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.poly[a][b] = pair_words_poly(c, g.words[a], g.words[b]);
  return g;
}

RankRadical rank_and_radical(const GramBlock& g) {
  RowReduction red(g.poly, g.words.size());
  RankRadical out;
  out.rank = red.rank();
  for (const auto& k : red.kernel()) {
    FreeElem x(g.cartan);
    RatFunc lead;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j].is_zero()) continue;
      if (lead.is_zero()) lead = k[j].inverse();
      x.add(g.words[j], k[j] * lead);
    }
    out.radical.push_back(std::move(x));
  }
  return out;
}

std::vector<RatFunc> pairing_row(const FreeElem& x, const Degree& nu) {
  const Cartan& c = x.cartan();
  std::vector<Word> words = words_of_degree(nu);
  std::vector<RatFunc> row(words.size());
  for (const auto& [u, a] : x.terms()) {
    if (word_degree(u, c->rank()) != nu) continue;
    for (std::size_t k = 0; k < words.size(); ++k) {
      LPoly p = pair_words_poly(c, u, words[k]);
      if (!p.is_zero()) row[k] += a * RatFunc(p);
    }
  }
  return row;
}

bool is_zero_in_f(const FreeElem& x) {
  if (x.is_zero()) return true;
  Degree nu = x.degree();
  for (const auto& e : pairing_row(x, nu))
    if (!e.is_zero()) return false;
  return true;
}

bool eq_in_f(const FreeElem& x, const FreeElem& y) {
  require_same_cartan(x.cartan(), y.cartan());
  return is_zero_in_f(x - y);
}

namespace {

PolyMatrix pairing_rows(const Degree& nu, const std::vector<FreeElem>& xs, std::vector<LPoly>& factors) {
  PolyMatrix rows;
  for (const auto& x : xs) {
    if (!x.is_zero() && x.degree() != nu) throw std::invalid_argument("element of the wrong degree");
    LPoly f;
    rows.push_back(clear_denominators(pairing_row(x, nu), &f));
    factors.push_back(f);
  }
  return rows;
}

}  // namespace

QuotientSpan::QuotientSpan(Cartan c, Degree nu, const std::vector<FreeElem>& spanning)
    : cartan_(std::move(c)),
      nu_(std::move(nu)),
      red_(pairing_rows(nu_, spanning, factors_), words_of_degree(nu_).size()) {}

std::optional<std::vector<RatFunc>> QuotientSpan::expand(const FreeElem& y) const {
  if (!y.is_zero() && y.degree() != nu_) throw std::invalid_argument("element of the wrong degree");
  LPoly fy;
  PolyRow row = clear_denominators(pairing_row(y, nu_), &fy);
  auto c = red_.express(row);
  if (!c) return std::nullopt;
  std::vector<RatFunc> out(factors_.size());
  const auto& piv = red_.pivot_rows();
  for (std::size_t k = 0; k < piv.size(); ++k)
    if (!(*c)[k].is_zero()) out[piv[k]] = (*c)[k] * RatFunc(factors_[piv[k]]) / RatFunc(fy);
  return out;
}

}  // namespace qvt
