#pragma once

#include "qvt/ratfunc.hpp"

#include <stdexcept>
#include <vector>

namespace qvt {

struct NotRegular : std::domain_error {
  NotRegular() : std::domain_error("not v^{-1}-adically regular") {}
};

// Expansion f = sum_k coeffs[k] * v^{-(lead + k)} with coefficients in Q(t).
// lead may be negative, meaning f has positive powers of v.
struct VSeries {
  int lead = 0;
  std::vector<RatFunc> coeffs;

  // Coefficient of v^{-e}; zero outside the computed window.
  RatFunc at(int e) const;
  // Every coefficient in Z[t, t^-1].
  bool integral() const;
};

// The first order+1 coefficients starting from the leading power of v.
VSeries series_in_vinv(const RatFunc& f, int order);
// Expansion restricted to exponents lead..max_exp of v^{-1}.
VSeries series_in_vinv_upto(const RatFunc& f, int max_exp);

}  // namespace qvt
