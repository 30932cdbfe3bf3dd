#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvt {

using Matrix = std::vector<std::vector<int>>;
using Degree = std::vector<int>;

struct InvalidOmega : std::invalid_argument {
  explicit InvalidOmega(std::vector<std::string> v);
  std::vector<std::string> violations;
};

class CartanData {
 public:
  // Throws InvalidOmega naming every violated condition.
  static CartanData validate(const Matrix& omega);
  // Every violated condition, empty when omega is admissible.
  static std::vector<std::string> violations(const Matrix& omega);
  // No admissibility check; for evaluating the forms on arbitrary matrices.
  static CartanData unchecked(const Matrix& omega);

  int rank() const { return static_cast<int>(omega_.size()); }
  const Matrix& omega() const { return omega_; }

  int angle(int i, int j) const;    // <i,j> = Omega_ij
  int bracket(int i, int j) const;  // [i,j] = 2 delta_ij Omega_ii - Omega_ij
  int dot(int i, int j) const;      // i.j = <i,j> + <j,i>
  int angle(const Degree& x, const Degree& y) const;
  int bracket(const Degree& x, const Degree& y) const;
  int dot(const Degree& x, const Degree& y) const;
  // d_i = Omega_ii, so that v_i = v^{d_i} and t_i = t^{d_i}.
  int scale(int i) const;

  Degree zero() const { return Degree(omega_.size(), 0); }
  Degree unit(int i) const;

  friend bool operator==(const CartanData& a, const CartanData& b) { return a.omega_ == b.omega_; }

 private:
  explicit CartanData(Matrix m) : omega_(std::move(m)) {}
  void check_index(int i) const;
  void check_degree(const Degree& x) const;
  Matrix omega_;
};

using Cartan = std::shared_ptr<const CartanData>;

Cartan make_cartan(const Matrix& omega);

int trace(const Degree& d);
Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
Degree operator*(int k, const Degree& a);
// All degrees d with 0 <= d <= bound componentwise.
std::vector<Degree> degrees_below(const Degree& bound);
// All degrees of rank n with trace at most tr, trace-major, then lexicographic.
std::vector<Degree> degrees_up_to_trace(int n, int tr);

}  // namespace qvt
