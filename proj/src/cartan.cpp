#include "qvt/cartan.hpp"

#include <numeric>

namespace qvt {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

InvalidOmega::InvalidOmega(std::vector<std::string> v)
    : std::invalid_argument("invalid Omega: " + join(v)), violations(std::move(v)) {}

std::vector<std::string> CartanData::violations(const Matrix& omega) {
  std::vector<std::string> out;
  const std::size_t n = omega.size();
  if (n == 0) return {"matrix is empty"};
  for (const auto& row : omega)
    if (row.size() != n) return {"matrix is not square"};
  auto ij = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (omega[i][i] <= 0)
      out.push_back("condition (a): diagonal entry " + ij(i, i) + " is not positive");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && omega[i][j] > 0)
        out.push_back("condition (a): off-diagonal entry " + ij(i, j) + " is positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (omega[i][i] <= 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int s = omega[i][j] + omega[j][i];
      if (s % omega[i][i] != 0 || s > 0)
        out.push_back("condition (b): (Omega" + ij(i, j) + " + Omega" + ij(j, i) + ")/Omega" +
                      ij(i, i) + " is not a nonpositive integer");
    }
  }
  int g = 0;
  for (std::size_t i = 0; i < n; ++i) g = std::gcd(g, omega[i][i]);
  if (g != 1) out.push_back("condition (c): gcd of the diagonal is " + std::to_string(g) + ", not 1");
  return out;
}

CartanData CartanData::validate(const Matrix& omega) {
  auto v = violations(omega);
  if (!v.empty()) throw InvalidOmega(std::move(v));
  return CartanData(omega);
}

CartanData CartanData::unchecked(const Matrix& omega) {
  for (const auto& row : omega)
    if (row.size() != omega.size()) throw std::invalid_argument("matrix is not square");
  return CartanData(omega);
}

void CartanData::check_index(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
}

void CartanData::check_degree(const Degree& x) const {
  if (x.size() != omega_.size()) throw std::invalid_argument("degree vector has wrong length");
}

int CartanData::angle(int i, int j) const {
  check_index(i);
  check_index(j);
  return omega_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int CartanData::bracket(int i, int j) const {
  return (i == j ? 2 * angle(i, i) : 0) - angle(i, j);
}

int CartanData::dot(int i, int j) const { return angle(i, j) + angle(j, i); }

int CartanData::angle(const Degree& x, const Degree& y) const {
  check_degree(x);
  check_degree(y);
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * y[j] * omega_[i][j];
  }
  return s;
}

int CartanData::bracket(const Degree& x, const Degree& y) const {
  check_degree(x);
  check_degree(y);
  int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += 2 * x[i] * y[i] * omega_[i][i];
  return s - angle(x, y);
}

int CartanData::dot(const Degree& x, const Degree& y) const { return angle(x, y) + angle(y, x); }

int CartanData::scale(int i) const { return angle(i, i); }

Degree CartanData::unit(int i) const {
  check_index(i);
  Degree d = zero();
  d[static_cast<std::size_t>(i)] = 1;
  return d;
}

Cartan make_cartan(const Matrix& omega) {
  return std::make_shared<const CartanData>(CartanData::validate(omega));
}

int trace(const Degree& d) { return std::accumulate(d.begin(), d.end(), 0); }

Degree operator+(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Degree operator-(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Degree operator*(int k, const Degree& a) {
  Degree r = a;
  for (auto& x : r) x *= k;
  return r;
}

std::vector<Degree> degrees_below(const Degree& bound) {
  std::vector<Degree> out;
  Degree d(bound.size(), 0);
  for (;;) {
    out.push_back(d);
    std::size_t i = 0;
    while (i < d.size() && d[i] == bound[i]) d[i++] = 0;
    if (i == d.size()) break;
    ++d[i];
  }
  return out;
}

std::vector<Degree> degrees_up_to_trace(int n, int tr) {
  std::vector<Degree> out;
  for (int s = 0; s <= tr; ++s) {
    // Compositions of s into n parts, lexicographically decreasing first entry.
    Degree d(static_cast<std::size_t>(n), 0);
    std::vector<Degree> level;
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == d.size()) {
        d[pos] = left;
        level.push_back(d);
        return;
      }
      for (int k = left; k >= 0; --k) {
        d[pos] = k;
        self(self, pos + 1, left - k);
      }
    };
    if (n > 0) rec(rec, 0, s);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace qvt
