#pragma once

#include "qvt/lpoly.hpp"
#include "qvt/ratfunc.hpp"

namespace qvt {

enum class QFlavor { V, VT };

struct QInt {
  int n = 0;
  QFlavor flavor = QFlavor::V;
  int scale = 1;
};

// [n]_v = (v^n - v^-n)/(v - v^-1); [n]_{v,t} = t^{n-1}[n]_v; both at v^d, t^d.
LPoly qint_eval(const QInt& q);
LPoly qfactorial(int n, QFlavor flavor, int scale = 1);
// Throws std::invalid_argument if k > n or either is negative.
LPoly qbinom(int n, int k, QFlavor flavor, int scale = 1);

}  // namespace qvt
