#pragma once

#include "qvt/bilform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qvt {

// side 1: t^{-a(b+c)} theta_i^{(a)} theta_j^{(b)} theta_i^{(c)}
// side 2: t^{-a(b+c)} theta_j^{(c)} theta_i^{(b)} theta_j^{(a)}
// side 0: theta_a^{(b)} in rank one (c unused).
struct CBLabel {
  int side = 0;
  int a = 0, b = 0, c = 0;

  std::string str() const;
  friend bool operator==(const CBLabel&, const CBLabel&) = default;
};

struct CBCandidate {
  FreeElem element;
  CBLabel label;
};

// Omega = [[1,-1],[0,1]]: the only rank-two matrix with a closed-form family here.
bool is_a2(const CartanData& c);

FreeElem a2_element(const Cartan& c, const CBLabel& label);
// Side-1 labels first (a ascending), then side-2 labels not equal in f to a side-1 element.
std::vector<CBCandidate> a2_basis(const Cartan& c, const Degree& nu);
// a2_basis for A2, {theta_0^{(n)}} in rank one; throws std::invalid_argument otherwise.
std::vector<CBCandidate> canonical_family(const Cartan& c, const Degree& nu);

// x in Z[v^{+-1}, t^{+-1}].
bool in_laurent_ring(const RatFunc& x);

// Products theta_{i1}^{(n1)} ... theta_{ik}^{(nk)} with adjacent vertices distinct,
// fewest factors first, then lexicographic in (vertex, exponent).
std::vector<FreeElem> divided_monomials(const Cartan& c, const Degree& nu);

// Certified when true. In 'f every divided monomial is a multiple of one word,
// so the word coefficients are tried first; otherwise x is expanded modulo the
// radical over a basis picked greedily from divided_monomials, which for A2
// is the canonical basis up to powers of t.
bool is_integral(const FreeElem& x);

// The form for the opposite sign of the v-exponent in the coproduct twist,
// through (x, y)_mirror = prod_i (-v_i^2)^{nu_i} * bar((bar x, bar y)).
RatFunc mirror_pair(const FreeElem& x, const FreeElem& y);

struct CBReport {
  bool integral = false;
  bool bar_invariant = false;
  bool norm_ok = false;
  bool t_free_norm = false;
  RatFunc norm;
  // norm_ok for mirror_pair; reported, not part of all().
  bool mirror_norm_ok = false;

  bool all() const { return integral && bar_invariant && norm_ok && t_free_norm; }
};

// Throws NotRegular if (x,x) cannot be expanded in v^{-1}.
CBReport cb_verify(const FreeElem& x, int series_order = 20);

// f is t-free and f = delta + O(v^{-1}) with integer coefficients through v^{-order}.
bool almost_delta(const RatFunc& f, bool diagonal, int order);

bool near_orthonormality(const std::vector<CBCandidate>& basis, int series_order = 20);
bool near_orthonormality_mirror(const std::vector<CBCandidate>& basis, int series_order = 20);

// Largest n with x in theta_i^n f. Throws std::invalid_argument if x is zero in f.
int membership_filtration(const FreeElem& x, int i);

struct BasisTerm {
  CBCandidate basis;
  RatFunc coeff;
  int level = 0;  // membership_filtration of the basis element; set by pi_expansion only
};

// Coefficients of y on canonical_family(|y|), zeros dropped. Throws
// std::invalid_argument if y is outside their span.
std::vector<BasisTerm> expand_in_family(const FreeElem& y);

// t^{-n[i,|b|]} theta_i^{(n)} b expanded in the family, with filtration levels.
std::vector<BasisTerm> pi_expansion(const CBCandidate& b, int i, int n);
// The element b' with coefficient 1 and level n, when every other term has an
// A-coefficient and level at least n+1.
std::optional<CBCandidate> pi_image(const CBCandidate& b, int i, int n);
bool pi_leading_term_check(const CBCandidate& b, int i, int n, const CBCandidate& target);

std::vector<BasisTerm> structure_constants(const CBCandidate& b, const CBCandidate& bp);

struct CoproductTerm {
  CBCandidate left, right;
  RatFunc coeff;
};

// r(b) expanded in family (x) family.
std::vector<CoproductTerm> coproduct_constants(const CBCandidate& b);

// c = t^{t_exp} times a Laurent polynomial in v with nonnegative integer coefficients.
bool positive_in_v(const RatFunc& c, int t_exp);

}  // namespace qvt
