#pragma once

#include "qvt/cartan.hpp"
#include "qvt/ratfunc.hpp"

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qvt {

// A word in the generators theta_i; one char per letter holding the vertex index.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
Word make_word(const std::vector<int>& letters);
std::vector<int> letters(const Word& w);
Degree word_degree(const Word& w, int rank);
// All words of degree d, lexicographically sorted.
std::vector<Word> words_of_degree(const Degree& d);
std::string word_str(const Word& w);

class FreeElem {
 public:
  explicit FreeElem(Cartan c);
  static FreeElem one(const Cartan& c);
  static FreeElem gen(const Cartan& c, int i);
  static FreeElem word(const Cartan& c, const Word& w, const RatFunc& coeff = 1);

  const Cartan& cartan() const { return cartan_; }
  const std::map<Word, RatFunc>& terms() const { return terms_; }
  void add(const Word& w, const RatFunc& coeff);
  RatFunc coeff(const Word& w) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Throws std::invalid_argument if zero or inhomogeneous.
  Degree degree() const;
  // Homogeneous components keyed by degree.
  std::map<Degree, FreeElem> components() const;

  FreeElem operator-() const;
  FreeElem& operator+=(const FreeElem& o);
  FreeElem& operator-=(const FreeElem& o);
  FreeElem& operator*=(const RatFunc& c);
  friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
  friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
  friend FreeElem operator*(FreeElem a, const RatFunc& c) { return a *= c; }
  friend FreeElem operator*(const RatFunc& c, FreeElem a) { return a *= c; }
  // Concatenation product.
  friend FreeElem operator*(const FreeElem& a, const FreeElem& b);
  friend bool operator==(const FreeElem& a, const FreeElem& b);

  // Applies f to every coefficient; f may depend on the word.
  FreeElem map(const std::function<RatFunc(const Word&, const RatFunc&)>& f) const;

  std::string str() const;

 private:
  Cartan cartan_;
  std::map<Word, RatFunc> terms_;
};

FreeElem mul(const FreeElem& x, const FreeElem& y);

class TensorElem {
 public:
  using Key = std::pair<Word, Word>;
  explicit TensorElem(Cartan c) : cartan_(std::move(c)) {}
  static TensorElem pure(const FreeElem& x, const FreeElem& y);

  const Cartan& cartan() const { return cartan_; }
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  void add(const Word& a, const Word& b, const RatFunc& coeff);
  RatFunc coeff(const Word& a, const Word& b) const;
  bool is_zero() const { return terms_.empty(); }

  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend bool operator==(const TensorElem& a, const TensorElem& b);

  std::string str() const;

 private:
  Cartan cartan_;
  std::map<Key, RatFunc> terms_;
};

class Tensor3Elem {
 public:
  using Key = std::tuple<Word, Word, Word>;
  explicit Tensor3Elem(Cartan c) : cartan_(std::move(c)) {}

  const Cartan& cartan() const { return cartan_; }
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  void add(const Word& a, const Word& b, const Word& c, const RatFunc& coeff);
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const Tensor3Elem& a, const Tensor3Elem& b);

 private:
  Cartan cartan_;
  std::map<Key, RatFunc> terms_;
};

// v^{-a} t^{b} as a rational function.
RatFunc twist(int v_exp_neg, int t_exp);

// Product in 'f (x) 'f twisted by v^{-|y1|.|x2|} t^{<|y1|,|x2|> - <|x2|,|y1|>}.
TensorElem tensor_mul(const TensorElem& a, const TensorElem& b);
// Triple product twisted by v^{-M} t^{N}.
Tensor3Elem tensor3_mul(const Tensor3Elem& a, const Tensor3Elem& b);
// The same product computed as ((x1 (x) x2)(y1 (x) y2)) (x) x3y3 with the nested prefactor.
Tensor3Elem tensor3_mul_nested(const Tensor3Elem& a, const Tensor3Elem& b);

TensorElem coproduct(const FreeElem& x);
Tensor3Elem coproduct_left(const TensorElem& t);   // (r (x) 1)
Tensor3Elem coproduct_right(const TensorElem& t);  // (1 (x) r)
bool coassoc_check(const FreeElem& x);

FreeElem bar(const FreeElem& x);
FreeElem deriv_r(int i, const FreeElem& x);
FreeElem deriv_l(int i, const FreeElem& x);
FreeElem divided_power(const Cartan& c, int i, int n);
bool bar_coproduct_check(const FreeElem& x);

void require_same_cartan(const Cartan& a, const Cartan& b);

}  // namespace qvt
