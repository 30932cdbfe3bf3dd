#pragma once

#include "qvt/lpoly.hpp"
#include "qvt/ratfunc.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qvt {

using PolyRow = std::vector<LPoly>;
using PolyMatrix = std::vector<PolyRow>;

// Exact row reduction of a matrix over Z[v^{±1}, t^{±1}] (rational coefficients).
//
// Candidate pivots come from elimination modulo 2^61-1 at a fixed point; the
// pivot block A is then inverted fraction-free (A X = d I) and every remaining
// entry is checked exactly against the Schur complement condition. A failed
// check enlarges the pivot block, so the reported rank never depends on the
// evaluation point.
class RowReduction {
 public:
  RowReduction(PolyMatrix m, std::size_t ncols);
  explicit RowReduction(PolyMatrix m);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const PolyMatrix& matrix() const { return m_; }
  // Pivot rows in increasing order; they form a basis of the row space.
  const std::vector<std::size_t>& pivot_rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_cols() const { return cols_; }

  // Basis of the right kernel, one vector per non-pivot column j, with entry 1
  // at j and zero at every other non-pivot column.
  std::vector<std::vector<RatFunc>> kernel() const;
  // Coefficients c with y = sum_k c_k * row(pivot_rows()[k]), or nullopt when
  // y is outside the row space.
  std::optional<std::vector<RatFunc>> express(const PolyRow& y) const;
  bool contains(const PolyRow& y) const { return express(y).has_value(); }

 private:
  PolyMatrix m_;
  std::size_t ncols_;
  std::vector<std::size_t> rows_, cols_;
  LPoly det_;
  PolyMatrix inv_;  // A * inv_ = det_ * I

  void modular_pivots();
  void invert_block();
  bool certify();
};

// Multiplies the row by the lcm of its denominators; returns that lcm in *factor.
PolyRow clear_denominators(const std::vector<RatFunc>& row, LPoly* factor = nullptr);
LPoly lcm(const LPoly& a, const LPoly& b);

std::size_t rank(const PolyMatrix& m);

}  // namespace qvt
