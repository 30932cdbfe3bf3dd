#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qvt {

using Rat = mpq_class;
using Int = mpz_class;

// Sparse Laurent polynomial in v and t with rational coefficients.
// Terms are kept sorted by descending v exponent, then descending t exponent.
class LPoly {
 public:
  struct Term {
    int v = 0;
    int t = 0;
    Rat c;
  };

  LPoly() = default;
  LPoly(long c);  // NOLINT(google-explicit-constructor)
  LPoly(const Rat& c);  // NOLINT(google-explicit-constructor)

  static LPoly monomial(const Rat& c, int v, int t);
  static LPoly var_v() { return monomial(1, 1, 0); }
  static LPoly var_t() { return monomial(1, 0, 1); }
  // Takes ownership of arbitrary terms; sorts and merges them.
  static LPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_t_free() const;
  bool has_integer_coeffs() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }

  int min_v() const;
  int max_v() const;
  int min_t() const;
  int max_t() const;

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o);
  LPoly& operator*=(const Rat& c);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(LPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const LPoly& a, const LPoly& b);

  struct Product {
    const LPoly* a;
    const LPoly* b;
    bool negate = false;
  };
  // Sum of +-a*b over all products, accumulated densely when every
  // coefficient is an integer.
  static LPoly sum_of_products(std::span<const Product> ps);

  // Multiply by v^dv t^dt.
  LPoly shifted(int dv, int dt) const;
  LPoly pow(unsigned n) const;
  // v -> v^-1.
  LPoly bar() const;
  // v -> v^d, t -> t^d.
  LPoly scaled(int d) const;
  LPoly at_t1() const;
  // Coefficient of t^b as a polynomial in v alone.
  LPoly t_coefficient(int b) const;
  std::size_t hash() const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
  void normalize();
  friend bool try_divide(const LPoly& a, const LPoly& b, LPoly& q);
};

// Exact quotient; throws std::domain_error if b does not divide a.
LPoly divide_exact(const LPoly& a, const LPoly& b);
// Returns false (leaving q unspecified) when b does not divide a.
bool try_divide(const LPoly& a, const LPoly& b, LPoly& q);

// Monic-free canonical gcd of two Laurent polynomials: an honest polynomial
// (minimal exponents zero), primitive with integer coefficients, positive
// leading coefficient in degree-lex order. gcd(0, 0) = 0.
LPoly gcd(const LPoly& a, const LPoly& b);

// Evaluation modulo the prime 2^61-1 at v = x, t = y.
std::uint64_t eval_mod(const LPoly& p, std::uint64_t x, std::uint64_t y);

}  // namespace qvt
