#pragma once

// Exact linear programming over the rationals for programs in equality form:
//   maximise c·x  subject to  A x = b,  x >= 0.

#include <map>
#include <vector>

#include "wr/numerics.hpp"

namespace wr {

struct EqualityLP {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  int variable_count() const { return static_cast<int>(objective.size()); }
  int row_count() const { return static_cast<int>(rows.size()); }
};

enum class LPStatus { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(LPStatus status);

/// Nonzero entries of a primal solution, by variable index.
using SparseSolution = std::map<int, Rational>;

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  SparseSolution solution;
  long iterations = 0;
  /// vertex_enumeration_solve only: every optimal basic solution.
  std::vector<SparseSolution> optimal_vertices;
};

/// Two-phase tableau simplex with explicit artificial variables and Bland's rule.
LPResult simplex_solve(const EqualityLP& lp, long iteration_cap = 1'000'000);

/// Enumerates every basic feasible solution (supports of size <= row count,
/// linearly independent columns, strictly positive values) and keeps the best.
/// Requires a row with strictly positive coefficients and positive right-hand
/// side, which bounds the feasible region; throws UsageError otherwise.
LPResult vertex_enumeration_solve(const EqualityLP& lp);

/// Checks A x = b and x >= 0 exactly.
bool is_feasible(const EqualityLP& lp, const SparseSolution& x);
Rational objective_value(const EqualityLP& lp, const SparseSolution& x);

}  // namespace wr
