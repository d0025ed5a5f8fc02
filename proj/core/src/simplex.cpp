#include "essentia/simplex.hpp"

#include "essentia/errors.hpp"

namespace essentia {

PackingSimplex::PackingSimplex(int rows)
    : rows_(rows),
      tableau_(static_cast<std::size_t>(rows)),
      rhs_(static_cast<std::size_t>(rows), Rational(1)),
      basis_(static_cast<std::size_t>(rows)),
      reduced_cost_(static_cast<std::size_t>(rows), Rational(0)),
      objective_(0) {
  for (int r = 0; r < rows; ++r) {
    tableau_[r].assign(static_cast<std::size_t>(rows), Rational(0));
    tableau_[r][r] = 1;
    basis_[r] = r;
  }
}

void PackingSimplex::add_column(std::span<const int> support) {
  if (support.empty()) throw PreconditionViolated("empty packing column");
  // Current representation B^-1 a: the slack block of the tableau is B^-1.
  Rational reduced = -1;
  for (int r : support) reduced += reduced_cost_[r];
  for (int i = 0; i < rows_; ++i) {
    Rational entry = 0;
    for (int r : support) entry += tableau_[i][r];
    tableau_[i].push_back(std::move(entry));
  }
  reduced_cost_.push_back(std::move(reduced));
}

std::size_t PackingSimplex::optimize() {
  std::size_t pivots = 0;
  const int variables = static_cast<int>(reduced_cost_.size());
  for (;;) {
    int entering = -1;
    for (int j = 0; j < variables; ++j)
      if (sgn(reduced_cost_[j]) < 0) {
        entering = j;
        break;
      }
    if (entering < 0) return pivots;

    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < rows_; ++i) {
      if (sgn(tableau_[i][entering]) <= 0) continue;
      Rational ratio = rhs_[i] / tableau_[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving < 0) throw Error("packing LP unbounded");
    pivot(leaving, entering);
    ++pivots;
  }
}

void PackingSimplex::pivot(int row, int entering) {
  const std::size_t variables = reduced_cost_.size();
  auto& pivot_row = tableau_[row];
  const Rational scale = pivot_row[entering];
  for (auto& a : pivot_row) a /= scale;
  rhs_[row] /= scale;

  auto eliminate = [&](std::vector<Rational>& target, Rational& target_rhs) {
    const Rational factor = target[entering];
    if (sgn(factor) == 0) return;
    for (std::size_t j = 0; j < variables; ++j)
      if (sgn(pivot_row[j]) != 0) target[j] -= factor * pivot_row[j];
    target_rhs -= factor * rhs_[row];
  };
  for (int i = 0; i < rows_; ++i)
    if (i != row) eliminate(tableau_[i], rhs_[i]);
  // Objective row reads z + sum_j d_j y_j = objective_.
  eliminate(reduced_cost_, objective_);
  basis_[row] = entering;
}

Rational PackingSimplex::primal(int j) const {
  const int variable = rows_ + j;
  for (int i = 0; i < rows_; ++i)
    if (basis_[i] == variable) return rhs_[i];
  return 0;
}

}  // namespace essentia
