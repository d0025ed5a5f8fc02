#pragma once

#include <span>
#include <vector>

#include "essentia/rational.hpp"

namespace essentia {

/// Exact primal simplex for the packing LP
///
///   maximize  sum_j y_j   subject to  sum_{j : r in S_j} y_j <= 1  (every row r),  y >= 0,
///
/// which is the dual of the covering LP  min sum x_r  s.t.  sum_{r in S_j} x_r >= 1, x >= 0.
/// Columns (covering constraints) can be appended at any time; the current
/// basis stays feasible, so re-optimisation warm-starts from it. Entering and
/// leaving variables follow Bland's rule. After `optimize()`, the row duals
/// are an optimal covering solution.
class PackingSimplex {
 public:
  explicit PackingSimplex(int rows);

  int rows() const { return rows_; }
  int columns() const { return static_cast<int>(reduced_cost_.size()) - rows_; }

  /// `support` lists row indices with coefficient 1. Must be nonempty.
  void add_column(std::span<const int> support);

  /// Runs pivots until optimal. Returns the number of pivots performed.
  std::size_t optimize();

  const Rational& objective() const { return objective_; }
  /// Dual value of row r (the covering variable x_r) at the current basis.
  const Rational& dual(int r) const { return reduced_cost_[r]; }
  /// Primal value of column j.
  Rational primal(int j) const;

 private:
  void pivot(int row, int entering);

  int rows_;
  // Variables: slacks 0..rows-1, then structural columns in insertion order.
  std::vector<std::vector<Rational>> tableau_;  // rows_ x variables
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<Rational> reduced_cost_;  // z_j - c_j per variable
  Rational objective_;
};

}  // namespace essentia
