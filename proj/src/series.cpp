#include "qvt/series.hpp"

#include <algorithm>
#include <map>

namespace qvt {

namespace {

// Coefficients of u^k (u = v^-1) after pulling out the top power of v:
// p = v^top * sum_k out[k] u^k, each out[k] a Laurent polynomial in t.
std::vector<LPoly> u_coefficients(const LPoly& p, int& top) {
  top = p.max_v();
  std::map<int, std::vector<LPoly::Term>> by_k;
  for (const auto& x : p.terms()) by_k[top - x.v].push_back({0, x.t, x.c});
  std::vector<LPoly> out(static_cast<std::size_t>(top - p.min_v() + 1));
  for (auto& [k, ts] : by_k) out[static_cast<std::size_t>(k)] = LPoly::from_terms(std::move(ts));
  return out;
}

}  // namespace

RatFunc VSeries::at(int e) const {
  int k = e - lead;
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return {};
  return coeffs[static_cast<std::size_t>(k)];
}

bool VSeries::integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const RatFunc& c) {
    return c.is_laurent() && c.num().has_integer_coeffs();
  });
}

VSeries series_in_vinv_upto(const RatFunc& f, int max_exp) {
  VSeries s;
  if (f.is_zero()) return s;
  int a = 0, b = 0;
  auto n = u_coefficients(f.num(), b);
  auto d = u_coefficients(f.den(), a);
  if (d.empty() || d[0].is_zero()) throw NotRegular();
  s.lead = a - b;
  const RatFunc d0inv = RatFunc(d[0]).inverse();
  for (int k = 0; s.lead + k <= max_exp; ++k) {
    auto uk = static_cast<std::size_t>(k);
    RatFunc c = uk < n.size() ? RatFunc(n[uk]) : RatFunc();
    for (std::size_t j = 1; j <= uk && j < d.size(); ++j)
      if (!d[j].is_zero()) c -= RatFunc(d[j]) * s.coeffs[uk - j];
    s.coeffs.push_back(c * d0inv);
  }
  return s;
}

VSeries series_in_vinv(const RatFunc& f, int order) {
  if (f.is_zero()) return {0, std::vector<RatFunc>(static_cast<std::size_t>(order) + 1)};
  int a = f.den().max_v(), b = f.num().max_v();
  return series_in_vinv_upto(f, a - b + order);
}

}  // namespace qvt
