#pragma once

#include <vector>

#include "ctxdist/parallel.hpp"

namespace ctxdist {

// minimize c·x  subject to  A_eq x = b_eq,  A_ub x ≤ b_ub,  x ≥ lower
// (lower defaults to all zeros when empty).
struct LinearProgram {
  std::vector<double> c;
  std::vector<std::vector<double>> a_eq;
  std::vector<double> b_eq;
  std::vector<std::vector<double>> a_ub;
  std::vector<double> b_ub;
  std::vector<double> lower;

  int columns() const { return static_cast<int>(c.size()); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::optimal;
  double optimum = 0;
  std::vector<double> solution;  // status == optimal
  // status == infeasible: Farkas vector y over the (eq rows, ub rows) of the
  // original program: y·b > 0, (yᵀA)_j ≤ tol for every column j, and
  // y_i ≤ tol on ub rows.
  std::vector<double> certificate;
};

struct LpOptions {
  Exec mode = Exec::serial;
  int max_iterations = 0;  // 0 → scale-based default
};

// Dense two-phase simplex with Bland's rule. Deterministic for fixed input.
// Throws SolverError if the iteration cap is hit (never a wrong status).
LpOutcome lp_solve(const LinearProgram& p, const LpOptions& options = {});

}  // namespace ctxdist
