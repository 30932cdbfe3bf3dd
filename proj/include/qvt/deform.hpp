#pragma once

#include "qvt/bilform.hpp"

#include <stdexcept>

namespace qvt {

// sigma(w) = sum_{a<b} [i_a, i_b] over the letters of w.
int cocycle_sigma(const CartanData& c, const Word& w);

// x * y = t^{-[|x|,|y|]} xy, extended over homogeneous components.
FreeElem star_mul(const FreeElem& x, const FreeElem& y);

enum class TwistDirection { ToF, FromF };

// Multiplies the coefficient of each word w by t^{sigma(w)} (ToF) or t^{-sigma(w)}.
FreeElem cocycle_twist(const FreeElem& x, TwistDirection dir);

// Substitutes t = 1 in every coefficient; throws std::domain_error on a pole.
FreeElem specialize_t1(const FreeElem& x);

// (x, y)^* = (phi(x), phi(y))_L with (,)_L the t = 1 form, extended bilinearly.
RatFunc pair_star(const FreeElem& x, const FreeElem& y);

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// True when the twist of x to the one-parameter side has t-free coefficients.
bool in_untwisted_lattice(const FreeElem& x);

// pair(x, y) == pair_star(x, y); throws PreconditionError unless both x and y
// twist to t-free elements.
bool forms_agree_check(const FreeElem& x, const FreeElem& y);

// r~(x) = sum t^{[|x1|,|x2|]} x1 (x) x2.
TensorElem twisted_coproduct(const FreeElem& x);

// (x1 (x) x2) * (y1 (x) y2) = v^{-|y1|.|x2|} x1*y1 (x) x2*y2.
TensorElem star_tensor_mul(const TensorElem& a, const TensorElem& b);

}  // namespace qvt
