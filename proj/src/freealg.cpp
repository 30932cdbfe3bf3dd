#include "qvt/freealg.hpp"

#include "qvt/qint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qvt {

Word make_word(std::initializer_list<int> letters) {
  return make_word(std::vector<int>(letters));
}

Word make_word(const std::vector<int>& letters) {
  Word w;
  for (int i : letters) {
    if (i < 0 || i > 120) throw std::out_of_range("vertex index out of range");
    w.push_back(static_cast<char>(i));
  }
  return w;
}

std::vector<int> letters(const Word& w) {
  std::vector<int> out;
  for (char c : w) out.push_back(c);
  return out;
}

Degree word_degree(const Word& w, int rank) {
  Degree d(static_cast<std::size_t>(rank), 0);
  for (char c : w) {
    if (c < 0 || c >= rank) throw std::out_of_range("letter outside the vertex set");
    ++d[static_cast<std::size_t>(c)];
  }
  return d;
}

std::vector<Word> words_of_degree(const Degree& d) {
  Word w;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return {};
    w.append(static_cast<std::size_t>(d[i]), static_cast<char>(i));
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::string word_str(const Word& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(int(w[k]));
  return s + "]";
}

void require_same_cartan(const Cartan& a, const Cartan& b) {
  if (a != b && !(*a == *b)) throw std::invalid_argument("mismatched Cartan data");
}

RatFunc twist(int v_exp_neg, int t_exp) { return monomial(-v_exp_neg, t_exp); }

// ---------------------------------------------------------------- FreeElem

FreeElem::FreeElem(Cartan c) : cartan_(std::move(c)) {
  if (!cartan_) throw std::invalid_argument("null Cartan data");
}

FreeElem FreeElem::one(const Cartan& c) { return word(c, Word()); }

FreeElem FreeElem::gen(const Cartan& c, int i) {
  c->unit(i);
  return word(c, make_word({i}));
}

FreeElem FreeElem::word(const Cartan& c, const Word& w, const RatFunc& coeff) {
  FreeElem x(c);
  word_degree(w, c->rank());
  x.add(w, coeff);
  return x;
}

void FreeElem::add(const Word& w, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFunc FreeElem::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

bool FreeElem::is_homogeneous() const {
  if (terms_.empty()) return true;
  Degree d = word_degree(terms_.begin()->first, cartan_->rank());
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return word_degree(kv.first, cartan_->rank()) == d;
  });
}

Degree FreeElem::degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of the zero element");
  if (!is_homogeneous()) throw std::invalid_argument("element is not homogeneous");
  return word_degree(terms_.begin()->first, cartan_->rank());
}

std::map<Degree, FreeElem> FreeElem::components() const {
  std::map<Degree, FreeElem> out;
  for (const auto& [w, c] : terms_)
    out.try_emplace(word_degree(w, cartan_->rank()), cartan_).first->second.add(w, c);
  return out;
}

FreeElem FreeElem::operator-() const {
  FreeElem r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
  require_same_cartan(cartan_, o.cartan_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
  require_same_cartan(cartan_, o.cartan_);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeElem& FreeElem::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

FreeElem operator*(const FreeElem& a, const FreeElem& b) {
  require_same_cartan(a.cartan_, b.cartan_);
  FreeElem r(a.cartan_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [w, d] : b.terms_) r.add(u + w, c * d);
  return r;
}

FreeElem mul(const FreeElem& x, const FreeElem& y) { return x * y; }

bool operator==(const FreeElem& a, const FreeElem& b) {
  return *a.cartan_ == *b.cartan_ && a.terms_ == b.terms_;
}

FreeElem FreeElem::map(const std::function<RatFunc(const Word&, const RatFunc&)>& f) const {
  FreeElem r(cartan_);
  for (const auto& [w, c] : terms_) r.add(w, f(w, c));
  return r;
}

std::string FreeElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + word_str(w);
  }
  return s;
}

// -------------------------------------------------------------- TensorElem

TensorElem TensorElem::pure(const FreeElem& x, const FreeElem& y) {
  require_same_cartan(x.cartan(), y.cartan());
  TensorElem r(x.cartan());
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) r.add(a, b, c * d);
  return r;
}

void TensorElem::add(const Word& a, const Word& b, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFunc TensorElem::coeff(const Word& a, const Word& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RatFunc() : it->second;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  require_same_cartan(cartan_, o.cartan_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  require_same_cartan(cartan_, o.cartan_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

bool operator==(const TensorElem& a, const TensorElem& b) {
  return *a.cartan_ == *b.cartan_ && a.terms_ == b.terms_;
}

std::string TensorElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + word_str(k.first) + "(x)" + word_str(k.second);
  }
  return s;
}

void Tensor3Elem::add(const Word& a, const Word& b, const Word& c, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b, c}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool operator==(const Tensor3Elem& a, const Tensor3Elem& b) {
  return *a.cartan_ == *b.cartan_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------- twisted products

TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) {
  require_same_cartan(a.cartan(), b.cartan());
  const CartanData& c = *a.cartan();
  TensorElem r(a.cartan());
  for (const auto& [x, cx] : a.terms()) {
    Degree x2 = word_degree(x.second, c.rank());
    for (const auto& [y, cy] : b.terms()) {
      Degree y1 = word_degree(y.first, c.rank());
      int ve = c.dot(y1, x2), te = c.angle(y1, x2) - c.angle(x2, y1);
      r.add(x.first + y.first, x.second + y.second, (cx * cy).shifted(-ve, te));
    }
  }
  return r;
}

Tensor3Elem tensor3_mul(const Tensor3Elem& a, const Tensor3Elem& b) {
  require_same_cartan(a.cartan(), b.cartan());
  const CartanData& c = *a.cartan();
  const int n = c.rank();
  Tensor3Elem r(a.cartan());
  for (const auto& [x, cx] : a.terms()) {
    Degree x2 = word_degree(std::get<1>(x), n), x3 = word_degree(std::get<2>(x), n);
    for (const auto& [y, cy] : b.terms()) {
      Degree y1 = word_degree(std::get<0>(y), n), y2 = word_degree(std::get<1>(y), n);
      int m = c.dot(x3, y1) + c.dot(x2, y1) + c.dot(x3, y2);
      int nn = c.angle(y1, x3) + c.angle(y1, x2) + c.angle(y2, x3) - c.angle(x3, y1) -
               c.angle(x2, y1) - c.angle(x3, y2);
      r.add(std::get<0>(x) + std::get<0>(y), std::get<1>(x) + std::get<1>(y),
            std::get<2>(x) + std::get<2>(y), (cx * cy).shifted(-m, nn));
    }
  }
  return r;
}

Tensor3Elem tensor3_mul_nested(const Tensor3Elem& a, const Tensor3Elem& b) {
  require_same_cartan(a.cartan(), b.cartan());
  const CartanData& c = *a.cartan();
  const int n = c.rank();
  Tensor3Elem r(a.cartan());
  for (const auto& [x, cx] : a.terms()) {
    Degree x3 = word_degree(std::get<2>(x), n);
    for (const auto& [y, cy] : b.terms()) {
      TensorElem inner = tensor_mul(
          TensorElem::pure(FreeElem::word(a.cartan(), std::get<0>(x), cx),
                           FreeElem::word(a.cartan(), std::get<1>(x))),
          TensorElem::pure(FreeElem::word(a.cartan(), std::get<0>(y), cy),
                           FreeElem::word(a.cartan(), std::get<1>(y))));
      Degree y12 = word_degree(std::get<0>(y) + std::get<1>(y), n);
      int ve = c.dot(x3, y12), te = c.angle(y12, x3) - c.angle(x3, y12);
      for (const auto& [k, ck] : inner.terms())
        r.add(k.first, k.second, std::get<2>(x) + std::get<2>(y), ck.shifted(-ve, te));
    }
  }
  return r;
}

// ---------------------------------------------------------------- coproduct

namespace {

// r(w) = sum over splittings of w into a left subword (letters sent to the
// first factor) and a right subword; each letter sent left past already-sent
// right letters of total degree R picks up v^{-l.R} t^{<l,R> - <R,l>}.
void word_coproduct(const CartanData& c, const Word& w, std::map<TensorElem::Key, LPoly>& out) {
  const int n = c.rank();
  std::vector<int> right(static_cast<std::size_t>(n), 0);
  Word left_w, right_w;
  auto rec = [&](auto&& self, std::size_t pos, int ve, int te) -> void {
    if (pos == w.size()) {
      out[{left_w, right_w}] += LPoly::monomial(1, ve, te);
      return;
    }
    const int l = w[pos];
    int dv = 0, dt = 0;
    for (int k = 0; k < n; ++k) {
      int rk = right[static_cast<std::size_t>(k)];
      if (rk == 0) continue;
      dv -= rk * c.dot(l, k);
      dt += rk * (c.angle(l, k) - c.angle(k, l));
    }
    left_w.push_back(w[pos]);
    self(self, pos + 1, ve + dv, te + dt);
    left_w.pop_back();
    right_w.push_back(w[pos]);
    ++right[static_cast<std::size_t>(l)];
    self(self, pos + 1, ve, te);
    --right[static_cast<std::size_t>(l)];
    right_w.pop_back();
  };
  rec(rec, 0, 0, 0);
}

}  // namespace

TensorElem coproduct(const FreeElem& x) {
  TensorElem r(x.cartan());
  for (const auto& [w, c] : x.terms()) {
    std::map<TensorElem::Key, LPoly> parts;
    word_coproduct(*x.cartan(), w, parts);
    for (const auto& [k, p] : parts) r.add(k.first, k.second, c * RatFunc(p));
  }
  return r;
}

Tensor3Elem coproduct_left(const TensorElem& t) {
  Tensor3Elem r(t.cartan());
  for (const auto& [k, c] : t.terms()) {
    std::map<TensorElem::Key, LPoly> parts;
    word_coproduct(*t.cartan(), k.first, parts);
    for (const auto& [kk, p] : parts) r.add(kk.first, kk.second, k.second, c * RatFunc(p));
  }
  return r;
}

Tensor3Elem coproduct_right(const TensorElem& t) {
  Tensor3Elem r(t.cartan());
  for (const auto& [k, c] : t.terms()) {
    std::map<TensorElem::Key, LPoly> parts;
    word_coproduct(*t.cartan(), k.second, parts);
    for (const auto& [kk, p] : parts) r.add(k.first, kk.first, kk.second, c * RatFunc(p));
  }
  return r;
}

bool coassoc_check(const FreeElem& x) {
  TensorElem r = coproduct(x);
  return coproduct_left(r) == coproduct_right(r);
}

FreeElem bar(const FreeElem& x) {
  return x.map([](const Word&, const RatFunc& c) { return c.bar(); });
}

namespace {

// Twisted derivation: each occurrence of letter i contributes the word with
// that letter deleted, times v^{-i.D} t^{<D,i> - <i,D>} where D is the degree
// of the suffix (right derivation) or prefix (left derivation).
FreeElem derivation(int i, const FreeElem& x, bool right) {
  const CartanData& c = *x.cartan();
  c.unit(i);
  const int n = c.rank();
  FreeElem r(x.cartan());
  for (const auto& [w, coeff] : x.terms()) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != i) continue;
      Word rest = right ? w.substr(p + 1) : w.substr(0, p);
      Degree d = word_degree(rest, n);
      int ve = 0, te = 0;
      for (int k = 0; k < n; ++k) {
        int dk = d[static_cast<std::size_t>(k)];
        ve += dk * c.dot(i, k);
        te += dk * (c.angle(k, i) - c.angle(i, k));
      }
      // The left derivation carries the opposite t-twist so that it matches the
      // (theta_i, -) bicomponent of the coproduct.
      if (!right) te = -te;
      r.add(w.substr(0, p) + w.substr(p + 1), coeff.shifted(-ve, te));
    }
  }
  return r;
}

}  // namespace

FreeElem deriv_r(int i, const FreeElem& x) { return derivation(i, x, true); }

FreeElem deriv_l(int i, const FreeElem& x) { return derivation(i, x, false); }

FreeElem divided_power(const Cartan& c, int i, int n) {
  if (n < 0) throw std::invalid_argument("negative divided power");
  LPoly f = qfactorial(n, QFlavor::VT, c->scale(i));
  return FreeElem::word(c, Word(static_cast<std::size_t>(n), static_cast<char>(i)),
                        RatFunc::normalize(LPoly(1), f));
}

bool bar_coproduct_check(const FreeElem& x) {
  const CartanData& c = *x.cartan();
  TensorElem lhs = coproduct(bar(x));
  TensorElem rhs(x.cartan());
  const TensorElem rx = coproduct(x);
  for (const auto& [k, coeff] : rx.terms()) {
    Degree d1 = word_degree(k.first, c.rank()), d2 = word_degree(k.second, c.rank());
    int ve = c.dot(d1, d2), te = c.angle(d2, d1) - c.angle(d1, d2);
    rhs.add(k.second, k.first, coeff.bar().shifted(-ve, te));
  }
  return lhs == rhs;
}

}  // namespace qvt
