#include "support/reference_lp.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

namespace {

using Q = boost::multiprecision::cpp_rational;

// min c.z  s.t.  A z = b, z >= 0 with b >= 0. Two-phase tableau, Bland's rule.
struct Tableau {
  std::vector<std::vector<Q>> a;  // m rows, cols + 1 (last column is rhs)
  std::vector<int> basis;
  int cols = 0;

  Q reduced(const std::vector<Q>& cost, int j) const {
    Q r = cost[j];
    for (std::size_t i = 0; i < a.size(); ++i) r -= cost[basis[i]] * a[i][j];
    return r;
  }

  void pivot(int row, int col) {
    const Q p = a[row][col];
    for (auto& v : a[row]) v /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == row || a[i][col] == 0) continue;
      const Q f = a[i][col];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[row][j];
    }
    basis[row] = col;
  }

  // Returns false if unbounded.
  bool run(const std::vector<Q>& cost, int usable_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < usable_cols; ++j)
        if (reduced(cost, j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Q best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        Q ratio = a[i][cols] / a[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Q value(const std::vector<Q>& cost) const {
    Q v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) v += cost[basis[i]] * a[i][cols];
    return v;
  }
};

}  // namespace

std::optional<Rational> reference_lp_value(int n, const std::vector<Mask>& sets,
                                           std::optional<int> pinned) {
  std::vector<int> var_of(static_cast<std::size_t>(n), -1);
  int vars = 0;
  for (int u = 0; u < n; ++u)
    if (!pinned || *pinned != u) var_of[u] = vars++;
  for (Mask s : sets) {
    bool usable = false;
    for (int u = 0; u < n; ++u)
      if (s >> u & 1 && var_of[u] >= 0) usable = true;
    if (!usable) return std::nullopt;
  }

  const int cover_rows = static_cast<int>(sets.size());
  const int rows = cover_rows + vars;
  // Columns: x (vars), surplus (cover_rows), slack (vars), artificial (rows).
  const int structural = vars + cover_rows + vars;
  Tableau t;
  t.cols = structural + rows;
  t.a.assign(static_cast<std::size_t>(rows), std::vector<Q>(static_cast<std::size_t>(t.cols + 1), Q(0)));
  t.basis.resize(static_cast<std::size_t>(rows));
  for (int i = 0; i < cover_rows; ++i) {
    for (int u = 0; u < n; ++u)
      if (sets[i] >> u & 1 && var_of[u] >= 0) t.a[i][var_of[u]] = 1;
    t.a[i][vars + i] = -1;
    t.a[i][t.cols] = 1;
  }
  for (int k = 0; k < vars; ++k) {
    const int i = cover_rows + k;
    t.a[i][k] = 1;
    t.a[i][vars + cover_rows + k] = 1;
    t.a[i][t.cols] = 1;
  }
  for (int i = 0; i < rows; ++i) {
    t.a[i][structural + i] = 1;
    t.basis[i] = structural + i;
  }

  std::vector<Q> phase1(static_cast<std::size_t>(t.cols), Q(0));
  for (int i = 0; i < rows; ++i) phase1[structural + i] = 1;
  t.run(phase1, t.cols);
  if (t.value(phase1) != 0) return std::nullopt;
  for (int i = 0; i < rows; ++i) {
    if (t.basis[i] < structural) continue;
    for (int j = 0; j < structural; ++j)
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
  }

  std::vector<Q> phase2(static_cast<std::size_t>(t.cols), Q(0));
  for (int k = 0; k < vars; ++k) phase2[k] = 1;
  t.run(phase2, structural);
  const Q v = t.value(phase2);
  return Rational(boost::multiprecision::numerator(v).str() + "/" +
                  boost::multiprecision::denominator(v).str());
}

}  // namespace oracle
