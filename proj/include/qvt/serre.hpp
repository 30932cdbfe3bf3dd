#pragma once

#include "qvt/bilform.hpp"

namespace qvt {

struct SerreElem {
  int i = 0, j = 0;
  // a' = -<i,j>/d_i, a'' = -<j,i>/d_i and N = a' + a'' = -2 i.j / i.i; a' and a''
  // need not be integers when Omega is not symmetric.
  Rat a1, a2;
  int N = 0;
  FreeElem element;
};

// sum_{p+p'=N+1} (-1)^p t_i^{-p(p' + a' - a'')} theta_i^(p) theta_j theta_i^(p').
SerreElem serre_elem(const Cartan& c, int i, int j);

enum class Side { Right, Left };

// True iff every derivation r_k (or _k r) kills the element exactly in 'f.
bool serre_derivation_check(const SerreElem& s, Side side = Side::Right);
bool serre_in_radical(const SerreElem& s);

struct IdealComparison {
  std::size_t words = 0;        // dim 'f_nu
  std::size_t gram_rank = 0;    // dim f_nu
  std::size_t ideal_rank = 0;   // dim of the span of u S_ij w at nu
  bool ideal_in_radical = false;
  bool radical_in_ideal = false;
  bool equal() const { return ideal_in_radical && radical_in_ideal && ideal_rank + gram_rank == words; }
};

// Compares the two-sided ideal generated by all S_ij with the radical at nu.
// Throws std::invalid_argument when tr(nu) exceeds tr_bound.
IdealComparison compare_serre_ideal(const Cartan& c, const Degree& nu, int tr_bound = 6);
bool radical_equals_serre_ideal(const Cartan& c, const Degree& nu, int tr_bound = 6);

// sum_{p+p'=N+1} (-1)^p t^{p(<i,j> - <j,i>)} [N+1 choose p]_{v_i} theta_i^p theta_j theta_i^p'.
FreeElem binomial_serre_elem(const Cartan& c, int i, int j);
// True iff e == u [N+1]^!_{v_i,t_i} S_ij for a unit u = +-v^a t^b; *unit receives u.
bool serre_forms_equivalent(const FreeElem& e, const SerreElem& s, RatFunc* unit = nullptr);
bool serre_form_equivalence(const Cartan& c, int i, int j);

}  // namespace qvt
