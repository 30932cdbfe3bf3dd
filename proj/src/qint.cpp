#include "qvt/qint.hpp"

#include <stdexcept>

namespace qvt {

LPoly qint_eval(const QInt& q) {
  if (q.n < 0) throw std::invalid_argument("quantum integer of negative n");
  if (q.scale < 1) throw std::invalid_argument("quantum integer scale must be positive");
  std::vector<LPoly::Term> ts;
  const int tpow = q.flavor == QFlavor::VT ? q.scale * (q.n - 1) : 0;
  for (int k = 0; k < q.n; ++k) ts.push_back({q.scale * (q.n - 1 - 2 * k), tpow, Rat(1)});
  return LPoly::from_terms(std::move(ts));
}

LPoly qfactorial(int n, QFlavor flavor, int scale) {
  if (n < 0) throw std::invalid_argument("quantum factorial of negative n");
  LPoly r(1);
  for (int k = 2; k <= n; ++k) r *= qint_eval({k, flavor, scale});
  return r;
}

LPoly qbinom(int n, int k, QFlavor flavor, int scale) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("quantum binomial needs 0 <= k <= n");
  LPoly num(1), den(1);
  for (int m = 1; m <= k; ++m) {
    num *= qint_eval({n - k + m, flavor, scale});
    den *= qint_eval({m, flavor, scale});
  }
  return divide_exact(num, den);
}

}  // namespace qvt
