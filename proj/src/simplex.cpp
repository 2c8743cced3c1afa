#include "wr/simplex.hpp"

#include <optional>

#include "wr/error.hpp"

namespace wr {

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
    case LPStatus::iteration_limit:
      return "iteration_limit";
  }
  return "unknown";
}

namespace {

void check_shape(const EqualityLP& lp) {
  if (lp.rhs.size() != lp.rows.size()) throw UsageError("LP: one right-hand side per row");
  for (const auto& row : lp.rows) {
    if (row.size() != lp.objective.size()) throw UsageError("LP: every row needs one coefficient per variable");
  }
}

// Canonical-form tableau; the last column holds the right-hand side.
struct Tableau {
  int cols = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<int> basis;

  int rows() const { return static_cast<int>(a.size()); }
  const Rational& rhs(int i) const { return a[i][cols]; }

  void pivot(int r, int c) {
    const Rational p = a[r][c];
    for (auto& x : a[r]) {
      if (!x.is_zero()) x /= p;
    }
    for (int i = 0; i < rows(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (int j = 0; j <= cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    basis[r] = c;
  }

  void drop_row(int r) {
    a.erase(a.begin() + r);
    basis.erase(basis.begin() + r);
  }
};

LPStatus optimize(Tableau& t, const std::vector<Rational>& cost, const std::vector<char>& allowed, long& iterations,
                  long cap) {
  std::vector<char> basic(t.cols, 0);
  for (;;) {
    std::fill(basic.begin(), basic.end(), 0);
    for (int b : t.basis) basic[b] = 1;
    // Bland: lowest-index column with positive reduced cost enters.
    int enter = -1;
    for (int j = 0; j < t.cols && enter < 0; ++j) {
      if (!allowed[j] || basic[j]) continue;
      Rational reduced = cost[j];
      for (int i = 0; i < t.rows(); ++i) {
        if (!t.a[i][j].is_zero() && !cost[t.basis[i]].is_zero()) reduced -= cost[t.basis[i]] * t.a[i][j];
      }
      if (reduced.sign() > 0) enter = j;
    }
    if (enter < 0) return LPStatus::optimal;
    if (iterations >= cap) return LPStatus::iteration_limit;

    int leave = -1;
    Rational best;
    for (int i = 0; i < t.rows(); ++i) {
      if (t.a[i][enter].sign() <= 0) continue;
      const Rational ratio = t.rhs(i) / t.a[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return LPStatus::unbounded;
    t.pivot(leave, enter);
    ++iterations;
  }
}

}  // namespace

LPResult simplex_solve(const EqualityLP& lp, long iteration_cap) {
  check_shape(lp);
  const int n = lp.variable_count();
  const int m = lp.row_count();
  Tableau t;
  t.cols = n + m;
  t.a.assign(m, std::vector<Rational>(n + m + 1));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = lp.rhs[i].sign() < 0;
    for (int j = 0; j < n; ++j) t.a[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
    t.a[i][n + i] = Rational(1);
    t.a[i][n + m] = flip ? -lp.rhs[i] : lp.rhs[i];
    t.basis[i] = n + i;
  }

  LPResult result;
  // Phase 1: maximise minus the sum of artificials.
  std::vector<Rational> phase1(n + m, Rational(0));
  for (int i = 0; i < m; ++i) phase1[n + i] = Rational(-1);
  std::vector<char> all(n + m, 1);
  auto status = optimize(t, phase1, all, result.iterations, iteration_cap);
  if (status == LPStatus::iteration_limit) {
    result.status = status;
    return result;
  }
  Rational infeasibility(0);
  for (int i = 0; i < t.rows(); ++i) {
    if (t.basis[i] >= n) infeasibility += t.rhs(i);
  }
  if (infeasibility.sign() != 0) {
    result.status = LPStatus::infeasible;
    return result;
  }
  // Pivot zero-level artificials out of the basis; rows with no original
  // column left are redundant.
  for (int i = t.rows() - 1; i >= 0; --i) {
    if (t.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j) {
      if (!t.a[i][j].is_zero()) col = j;
    }
    if (col >= 0) t.pivot(i, col);
    else t.drop_row(i);
  }

  // Phase 2 over the original columns only.
  std::vector<Rational> phase2(n + m, Rational(0));
  for (int j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  std::vector<char> original(n + m, 0);
  std::fill(original.begin(), original.begin() + n, 1);
  status = optimize(t, phase2, original, result.iterations, iteration_cap);
  result.status = status;
  if (status != LPStatus::optimal) return result;

  result.value = Rational(0);
  for (int i = 0; i < t.rows(); ++i) {
    if (!t.rhs(i).is_zero()) result.solution[t.basis[i]] = t.rhs(i);
    result.value += lp.objective[t.basis[i]] * t.rhs(i);
  }
  return result;
}

namespace {

// Unique solution of A_S x = b restricted to the columns in `support`, if the
// columns are independent and the system is consistent.
std::optional<std::vector<Rational>> solve_on_support(const EqualityLP& lp, const std::vector<int>& support) {
  const int m = lp.row_count();
  const int k = static_cast<int>(support.size());
  if (m == 2 && k == 2) {
    const Rational& a00 = lp.rows[0][support[0]];
    const Rational& a01 = lp.rows[0][support[1]];
    const Rational& a10 = lp.rows[1][support[0]];
    const Rational& a11 = lp.rows[1][support[1]];
    const Rational det = a00 * a11 - a01 * a10;
    if (det.is_zero()) return std::nullopt;
    return std::vector<Rational>{(lp.rhs[0] * a11 - lp.rhs[1] * a01) / det, (a00 * lp.rhs[1] - a10 * lp.rhs[0]) / det};
  }
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = lp.rows[i][support[j]];
    a[i][k] = lp.rhs[i];
  }
  int row = 0;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int i = row; i < m && pivot < 0; ++i) {
      if (!a[i][col].is_zero()) pivot = i;
    }
    if (pivot < 0) return std::nullopt;  // dependent columns
    std::swap(a[row], a[pivot]);
    const Rational p = a[row][col];
    for (auto& x : a[row]) x /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (int j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  for (int i = row; i < m; ++i) {
    if (!a[i][k].is_zero()) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> x(k);
  for (int j = 0; j < k; ++j) x[j] = a[j][k];
  return x;
}

template <class Visit>
void for_each_support(int n, int max_size, Visit&& visit) {
  std::vector<int> support;
  auto recurse = [&](auto&& self, int start) -> void {
    if (!support.empty()) visit(support);
    if (static_cast<int>(support.size()) == max_size) return;
    for (int j = start; j < n; ++j) {
      support.push_back(j);
      self(self, j + 1);
      support.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace

LPResult vertex_enumeration_solve(const EqualityLP& lp) {
  check_shape(lp);
  const int n = lp.variable_count();
  const int m = lp.row_count();
  bool bounded = false;
  for (int i = 0; i < m && !bounded; ++i) {
    bool positive = lp.rhs[i].sign() > 0;
    for (int j = 0; j < n && positive; ++j) positive = lp.rows[i][j].sign() > 0;
    bounded = positive;
  }
  if (!bounded) throw UsageError("vertex_enumeration_solve: needs a strictly positive row bounding the feasible region");

  LPResult result;
  result.status = LPStatus::infeasible;
  for_each_support(n, m, [&](const std::vector<int>& support) {
    const auto x = solve_on_support(lp, support);
    if (!x) return;
    for (const auto& xi : *x) {
      if (xi.sign() <= 0) return;
    }
    ++result.iterations;
    Rational value(0);
    for (std::size_t j = 0; j < support.size(); ++j) value += lp.objective[support[j]] * (*x)[j];
    SparseSolution sol;
    for (std::size_t j = 0; j < support.size(); ++j) sol[support[j]] = (*x)[j];
    if (result.status != LPStatus::optimal || value > result.value) {
      result.status = LPStatus::optimal;
      result.value = value;
      result.solution = sol;
      result.optimal_vertices.assign(1, std::move(sol));
    } else if (value == result.value) {
      result.optimal_vertices.push_back(std::move(sol));
    }
  });
  return result;
}

bool is_feasible(const EqualityLP& lp, const SparseSolution& x) {
  for (const auto& [j, v] : x) {
    if (v.sign() < 0 || j < 0 || j >= lp.variable_count()) return false;
  }
  for (int i = 0; i < lp.row_count(); ++i) {
    Rational lhs(0);
    for (const auto& [j, v] : x) lhs += lp.rows[i][j] * v;
    if (lhs != lp.rhs[i]) return false;
  }
  return true;
}

Rational objective_value(const EqualityLP& lp, const SparseSolution& x) {
  Rational value(0);
  for (const auto& [j, v] : x) value += lp.objective[j] * v;
  return value;
}

}  // namespace wr
