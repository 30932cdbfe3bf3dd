#include "qvt/linalg.hpp"

#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace qvt {

namespace {

constexpr std::uint64_t kV0 = 1234567890123457ULL;
constexpr std::uint64_t kT0 = 987654321987654ULL;

}  // namespace

RowReduction::RowReduction(PolyMatrix m, std::size_t ncols) : m_(std::move(m)), ncols_(ncols) {
  for (const auto& row : m_)
    if (row.size() != ncols_) throw std::invalid_argument("ragged matrix");
  modular_pivots();
  for (;;) {
    invert_block();
    if (certify()) break;
  }
}

namespace {
std::size_t width(const PolyMatrix& m) { return m.empty() ? 0 : m.front().size(); }
}  // namespace

RowReduction::RowReduction(PolyMatrix m) : RowReduction(m, width(m)) {}

void RowReduction::modular_pivots() {
  // Echelon rows over F_p, each stored with its pivot column.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    std::vector<std::uint64_t> r(ncols_);
    for (std::size_t j = 0; j < ncols_; ++j) r[j] = eval_mod(m_[i][j], kV0, kT0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::uint64_t f = r[piv[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (basis[k][j]) r[j] = modp::sub(r[j], modp::mul(f, basis[k][j]));
    }
    auto it = std::find_if(r.begin(), r.end(), [](std::uint64_t x) { return x != 0; });
    if (it == r.end()) continue;
    std::size_t c = static_cast<std::size_t>(it - r.begin());
    std::uint64_t s = modp::inv(r[c]);
    for (auto& x : r) x = modp::mul(x, s);
    basis.push_back(std::move(r));
    piv.push_back(c);
    rows_.push_back(i);
    cols_.push_back(c);
  }
}

void RowReduction::invert_block() {
  const std::size_t n = rows_.size();
  // Fraction-free Gauss-Jordan on [A | I].
  PolyMatrix a(n, PolyRow(2 * n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) a[k][l] = m_[rows_[k]][cols_[l]];
    a[k][n + k] = LPoly(1);
  }
  LPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) throw std::logic_error("pivot block is singular");
    std::swap(a[p], a[k]);
    const LPoly piv = a[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const LPoly f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        const LPoly::Product ps[] = {{&a[i][j], &piv}, {&f, &a[k][j], true}};
        LPoly x = LPoly::sum_of_products(ps);
        a[i][j] = prev.is_one() ? std::move(x) : divide_exact(x, prev);
      }
      a[i][k] = LPoly();
    }
    prev = piv;
  }
  det_ = n == 0 ? LPoly(1) : prev;
  inv_.assign(n, PolyRow(n));
  for (std::size_t k = 0; k < n; ++k) {
    // Rows that were processed before the last pivot carry the same diagonal.
    if (!(a[k][k] == det_)) throw std::logic_error("fraction-free elimination lost its diagonal");
    for (std::size_t l = 0; l < n; ++l) inv_[k][l] = std::move(a[k][n + l]);
  }
}

bool RowReduction::certify() {
  const std::size_t n = rows_.size();
  std::vector<char> is_row(m_.size(), 0), is_col(ncols_, 0);
  for (auto r : rows_) is_row[r] = 1;
  for (auto c : cols_) is_col[c] = 1;
  // W = inv_ * M[R, j] for every non-pivot column j.
  std::vector<PolyRow> w(ncols_);
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (is_col[j]) continue;
    w[j].assign(n, LPoly());
    std::vector<LPoly::Product> ps;
    for (std::size_t k = 0; k < n; ++k) {
      ps.clear();
      for (std::size_t l = 0; l < n; ++l) ps.push_back({&inv_[k][l], &m_[rows_[l]][j]});
      w[j][k] = LPoly::sum_of_products(ps);
    }
  }
  std::vector<LPoly::Product> ps;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (is_row[i]) continue;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (is_col[j]) continue;
      ps.assign(1, {&det_, &m_[i][j]});
      for (std::size_t k = 0; k < n; ++k) ps.push_back({&m_[i][cols_[k]], &w[j][k], true});
      if (!LPoly::sum_of_products(ps).is_zero()) {
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), i) - rows_.begin();
        rows_.insert(rows_.begin() + pos, i);
        cols_.insert(cols_.begin() + pos, j);
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<RatFunc>> RowReduction::kernel() const {
  const std::size_t n = rows_.size();
  std::vector<char> is_col(ncols_, 0);
  for (auto c : cols_) is_col[c] = 1;
  std::vector<std::vector<RatFunc>> out;
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (is_col[j]) continue;
    std::vector<RatFunc> k(ncols_);
    k[j] = RatFunc(1);
    std::vector<LPoly::Product> ps;
    for (std::size_t a = 0; a < n; ++a) {
      ps.clear();
      for (std::size_t l = 0; l < n; ++l) ps.push_back({&inv_[a][l], &m_[rows_[l]][j]});
      const LPoly s = LPoly::sum_of_products(ps);
      if (!s.is_zero()) k[cols_[a]] = -RatFunc::normalize(s, det_);
    }
    out.push_back(std::move(k));
  }
  return out;
}

std::optional<std::vector<RatFunc>> RowReduction::express(const PolyRow& y) const {
  if (y.size() != ncols_) throw std::invalid_argument("vector length does not match the matrix");
  const std::size_t n = rows_.size();
  PolyRow u(n);
  std::vector<LPoly::Product> ps;
  for (std::size_t k = 0; k < n; ++k) {
    ps.clear();
    for (std::size_t l = 0; l < n; ++l) ps.push_back({&y[cols_[l]], &inv_[l][k]});
    u[k] = LPoly::sum_of_products(ps);
  }
  std::vector<char> is_col(ncols_, 0);
  for (auto c : cols_) is_col[c] = 1;
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (is_col[j]) continue;
    ps.assign(1, {&det_, &y[j]});
    for (std::size_t k = 0; k < n; ++k) ps.push_back({&u[k], &m_[rows_[k]][j], true});
    if (!LPoly::sum_of_products(ps).is_zero()) return std::nullopt;
  }
  std::vector<RatFunc> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = RatFunc::normalize(u[k], det_);
  return c;
}

LPoly lcm(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return LPoly();
  if (a.is_constant() || a == b) return b;
  if (b.is_constant()) return a;
  return divide_exact(a, gcd(a, b)) * b;
}

PolyRow clear_denominators(const std::vector<RatFunc>& row, LPoly* factor) {
  LPoly l(1);
  for (const auto& x : row)
    if (!x.is_zero()) l = lcm(l, x.den());
  PolyRow out;
  out.reserve(row.size());
  for (const auto& x : row) {
    if (x.is_zero()) {
      out.emplace_back();
    } else if (x.den() == l) {
      out.push_back(x.num());
    } else {
      out.push_back(x.num() * divide_exact(l, x.den()));
    }
  }
  if (factor) *factor = l;
  return out;
}

std::size_t rank(const PolyMatrix& m) { return RowReduction(m).rank(); }

}  // namespace qvt
