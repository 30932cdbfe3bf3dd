#pragma once

#include "qvt/freealg.hpp"
#include "qvt/linalg.hpp"

#include <optional>
#include <vector>

namespace qvt {

// The symmetric bilinear form on 'f with (1,1) = 1, (theta_i, theta_j) =
// delta_ij / (1 - v_i^{-2}), Hopf-compatible with the coproduct.
//
// Between words of degree nu the value is pair_words_poly(x, y) times
// pair_scale(nu) = prod_i (1 - v_i^{-2})^{-nu_i}; the Laurent polynomial part is
// computed by peeling the last letter of x (memoised per Omega).
LPoly pair_words_poly(const Cartan& c, const Word& x, const Word& y);
RatFunc pair_scale(const Cartan& c, const Degree& nu);
RatFunc pair_words(const Cartan& c, const Word& x, const Word& y);
RatFunc pair(const FreeElem& x, const FreeElem& y);
// t^{2[|x1|,|x2|]} (x1, y1)(x2, y2), extended bilinearly.
RatFunc pair_tensor(const TensorElem& a, const TensorElem& b);

// Drops every memoised word-pair value.
void clear_pair_cache();

struct GramBlock {
  Cartan cartan;
  Degree degree;
  std::vector<Word> words;  // lexicographic
  PolyMatrix poly;          // entry (a,b) = poly[a][b] * scale
  RatFunc scale;

  RatFunc entry(std::size_t a, std::size_t b) const { return RatFunc(poly[a][b]) * scale; }
};

GramBlock gram(const Cartan& c, const Degree& nu);

struct RankRadical {
  std::size_t rank = 0;
  // Kernel basis; each vector has coefficient 1 on its lexicographically first word.
  std::vector<FreeElem> radical;
};

RankRadical rank_and_radical(const GramBlock& g);

// (x, w) / pair_scale(nu) for every word w of degree nu, in lexicographic order.
std::vector<RatFunc> pairing_row(const FreeElem& x, const Degree& nu);

// Equality in f = 'f / radical; x must be homogeneous (zero is accepted).
bool is_zero_in_f(const FreeElem& x);
bool eq_in_f(const FreeElem& x, const FreeElem& y);

// Span of homogeneous elements of one degree, modulo the radical.
class QuotientSpan {
 public:
  QuotientSpan(Cartan c, Degree nu, const std::vector<FreeElem>& spanning);

  std::size_t rank() const { return red_.rank(); }
  // Indices of spanning elements forming a basis of the span modulo the radical.
  const std::vector<std::size_t>& basis() const { return red_.pivot_rows(); }
  // Coefficients on every spanning element (zero off basis()) such that y
  // equals their combination modulo the radical; nullopt outside the span.
  std::optional<std::vector<RatFunc>> expand(const FreeElem& y) const;
  bool contains(const FreeElem& y) const { return expand(y).has_value(); }

 private:
  Cartan cartan_;
  Degree nu_;
  std::vector<LPoly> factors_;
  RowReduction red_;
};

}  // namespace qvt
