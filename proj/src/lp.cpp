#include "ctxdist/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ctxdist/common.hpp"

namespace ctxdist {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRatioTie = 1e-12;

void require_finite(double x, const char* where) {
  if (!std::isfinite(x))
    throw InputError(std::string("non-finite value in LP ") + where);
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& p, const LpOptions& options) {
  const int n = p.columns();
  const int me = static_cast<int>(p.a_eq.size());
  const int mu = static_cast<int>(p.a_ub.size());
  const int m = me + mu;

  if (static_cast<int>(p.b_eq.size()) != me ||
      static_cast<int>(p.b_ub.size()) != mu)
    throw InputError("LP right-hand side size mismatch");
  for (const auto& row : p.a_eq)
    if (static_cast<int>(row.size()) != n)
      throw InputError("LP equality row width mismatch");
  for (const auto& row : p.a_ub)
    if (static_cast<int>(row.size()) != n)
      throw InputError("LP inequality row width mismatch");
  for (double x : p.c) require_finite(x, "objective");
  for (double x : p.b_eq) require_finite(x, "rhs");
  for (double x : p.b_ub) require_finite(x, "rhs");

  std::vector<double> lb(n, 0.0);
  if (!p.lower.empty()) {
    if (static_cast<int>(p.lower.size()) != n)
      throw InputError("LP lower-bound size mismatch");
    lb = p.lower;
    for (double x : lb) require_finite(x, "lower bound");
  }

  // Standard form: n originals + one slack per ub row + one artificial per
  // row; rows negated so every rhs is nonnegative.
  const int nstruct = n + mu;
  const int ntot = nstruct + m;
  const int stride = ntot + 1;  // last column is the rhs

  std::vector<double> T(static_cast<size_t>(m) * stride, 0.0);
  std::vector<int> rowsign(m, 1);
  auto at = [&](int i, int j) -> double& {
    return T[static_cast<size_t>(i) * stride + j];
  };

  double bscale = 1.0;
  for (int i = 0; i < m; ++i) {
    const auto& arow = i < me ? p.a_eq[i] : p.a_ub[i - me];
    double rhs = i < me ? p.b_eq[i] : p.b_ub[i - me];
    for (int j = 0; j < n; ++j) {
      require_finite(arow[j], "matrix");
      at(i, j) = arow[j];
      rhs -= arow[j] * lb[j];
    }
    if (i >= me) at(i, n + (i - me)) = 1.0;
    at(i, ntot) = rhs;
    if (rhs < 0) {
      rowsign[i] = -1;
      for (int j = 0; j <= ntot; ++j) at(i, j) = -at(i, j);
    }
    at(i, nstruct + i) = 1.0;
    bscale = std::max(bscale, std::abs(rhs));
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = nstruct + i;
  std::vector<char> banned(ntot, 0);
  std::vector<double> obj(stride, 0.0);

  auto pivot = [&](int r, int s) {
    double* pr = &T[static_cast<size_t>(r) * stride];
    const double piv = pr[s];
    for (int j = 0; j <= ntot; ++j) pr[j] /= piv;
    pr[s] = 1.0;
    for_range(options.mode, m, [&](std::ptrdiff_t i) {
      if (i == r) return;
      double* ri = &T[static_cast<size_t>(i) * stride];
      const double f = ri[s];
      if (f == 0.0) return;
      for (int j = 0; j <= ntot; ++j) ri[j] -= f * pr[j];
      ri[s] = 0.0;
    });
    const double f = obj[s];
    if (f != 0.0) {
      for (int j = 0; j <= ntot; ++j) obj[j] -= f * pr[j];
      obj[s] = 0.0;
    }
    basis[r] = s;
  };

  const long long cap = options.max_iterations > 0
                            ? options.max_iterations
                            : 10000 + 20LL * (m + ntot);
  long long iter = 0;

  // Bland's rule both ways: lowest eligible entering index, lowest basic
  // index among ratio ties. Returns false on unboundedness.
  auto run_simplex = [&]() -> bool {
    for (;;) {
      if (++iter > cap)
        throw SolverError("simplex iteration cap exceeded (" +
                          std::to_string(cap) + ")");
      int s = -1;
      for (int j = 0; j < ntot; ++j)
        if (!banned[j] && obj[j] < -kPivotTol) {
          s = j;
          break;
        }
      if (s < 0) return true;
      int r = -1;
      double best = 0;
      for (int i = 0; i < m; ++i) {
        const double a = at(i, s);
        if (a <= kPivotTol) continue;
        const double t = at(i, ntot) / a;
        if (r < 0 || t < best - kRatioTie) {
          r = i;
          best = t;
        } else if (t <= best + kRatioTie && basis[i] < basis[r]) {
          r = i;
          best = std::min(best, t);
        }
      }
      if (r < 0) return false;
      pivot(r, s);
    }
  };

  // Phase 1: minimize the artificial sum. Reduced costs start as
  // phase-1 cost minus the column sum over rows (basis = artificials).
  for_range(options.mode, ntot + 1, [&](std::ptrdiff_t j) {
    double s = 0;
    for (int i = 0; i < m; ++i) s += at(i, static_cast<int>(j));
    const bool artificial = j >= nstruct && j < ntot;
    obj[j] = (artificial ? 1.0 : 0.0) - s;
  });
  if (!run_simplex())
    throw SolverError("phase-1 simplex reported unbounded");

  const double infeasibility = -obj[ntot];
  if (infeasibility > kPivotTol * bscale) {
    LpOutcome out;
    out.status = LpStatus::infeasible;
    out.certificate.resize(m);
    for (int i = 0; i < m; ++i)
      out.certificate[i] = rowsign[i] * (1.0 - obj[nstruct + i]);
    // Verify the Farkas contract before reporting it.
    double yb = 0;
    for (int i = 0; i < m; ++i)
      yb += out.certificate[i] * (i < me ? p.b_eq[i] : p.b_ub[i - me]);
    double worst_col = 0;
    for (int j = 0; j < n; ++j) {
      double ya = 0;
      for (int i = 0; i < me; ++i) ya += out.certificate[i] * p.a_eq[i][j];
      for (int i = 0; i < mu; ++i)
        ya += out.certificate[me + i] * p.a_ub[i][j];
      worst_col = std::max(worst_col, ya);
    }
    for (int i = 0; i < mu; ++i)
      worst_col = std::max(worst_col, out.certificate[me + i]);
    if (p.lower.empty()) {
      if (yb <= 0 || worst_col > kLpTol)
        throw SolverError("infeasibility certificate failed verification");
    }
    return out;
  }

  // Any artificial still basic sits at zero; pivot it onto a structural
  // column when one is available, then retire all artificial columns.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < nstruct) continue;
    int s = -1;
    for (int j = 0; j < nstruct; ++j)
      if (std::abs(at(i, j)) > kPivotTol) {
        s = j;
        break;
      }
    if (s >= 0) pivot(i, s);
  }
  for (int j = nstruct; j < ntot; ++j) banned[j] = 1;

  // Phase 2 objective row from scratch against the real costs.
  auto cost = [&](int j) { return j < n ? p.c[j] : 0.0; };
  std::vector<double> cb(m);
  for (int i = 0; i < m; ++i) cb[i] = cost(basis[i]);
  for_range(options.mode, ntot + 1, [&](std::ptrdiff_t j) {
    double s = j < ntot ? cost(static_cast<int>(j)) : 0.0;
    for (int i = 0; i < m; ++i)
      if (cb[i] != 0.0) s -= cb[i] * at(i, static_cast<int>(j));
    obj[j] = s;
  });

  if (!run_simplex()) {
    LpOutcome out;
    out.status = LpStatus::unbounded;
    return out;
  }

  LpOutcome out;
  out.status = LpStatus::optimal;
  out.solution.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) out.solution[basis[i]] = at(i, ntot);
  for (int j = 0; j < n; ++j) out.solution[j] += lb[j];

  double residual = 0;
  for (int i = 0; i < me; ++i) {
    double ax = 0;
    for (int j = 0; j < n; ++j) ax += p.a_eq[i][j] * out.solution[j];
    residual = std::max(residual, std::abs(ax - p.b_eq[i]));
  }
  for (int i = 0; i < mu; ++i) {
    double ax = 0;
    for (int j = 0; j < n; ++j) ax += p.a_ub[i][j] * out.solution[j];
    residual = std::max(residual, ax - p.b_ub[i]);
  }
  for (int j = 0; j < n; ++j)
    residual = std::max(residual, lb[j] - out.solution[j]);
  if (residual > kLpTol)
    throw SolverError("optimal solution failed the feasibility check");

  double z = 0;
  for (int j = 0; j < n; ++j) z += p.c[j] * out.solution[j];
  out.optimum = z;
  return out;
}

}  // namespace ctxdist
