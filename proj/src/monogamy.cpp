#include "ctxdist/monogamy.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ctxdist/common.hpp"
#include "ctxdist/inequality.hpp"
#include "ctxdist/rng.hpp"

namespace ctxdist {

namespace {

// One nonnegative joint over {±1}³ per triangle of the scenario, normalized,
// with triangles that share a context agreeing on that pair marginal.  Bit k
// of a column's local index 0..7 is the outcome of the triangle's k-th
// variable, bit value 0 meaning +1.
struct TriangleSystem {
  Scenario s;
  std::vector<std::array<int, 3>> tris;
  std::vector<std::vector<int>> containing;  // context id → triangle ids

  int cols() const { return 8 * static_cast<int>(tris.size()); }
};

TriangleSystem make_system(Scenario s) {
  TriangleSystem sys{std::move(s), {}, {}};
  sys.tris = triangles(sys.s);
  sys.containing.resize(sys.s.context_count());
  for (int t = 0; t < static_cast<int>(sys.tris.size()); ++t) {
    const auto& tri = sys.tris[t];
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
      const int cid = sys.s.context_id(tri[pr[0]], tri[pr[1]]);
      if (cid >= 0) sys.containing[cid].push_back(t);
    }
  }
  for (int c = 0; c < sys.s.context_count(); ++c)
    if (sys.containing[c].empty())
      throw InputError("context " + sys.s.context_key(c) +
                       " lies in no triangle of the scenario");
  return sys;
}

int var_pos(const std::array<int, 3>& tri, int v) {
  for (int k = 0; k < 3; ++k)
    if (tri[k] == v) return k;
  throw InputError("variable missing from triangle");
}

// Coefficients of the (u=su, v=sv) pair-marginal entry inside triangle t;
// su/sv are bits with 0 meaning +1.
void add_pair_entry(std::vector<double>& row, const TriangleSystem& sys, int t,
                    int u, int su, int v, int sv, double coeff) {
  const int ku = var_pos(sys.tris[t], u);
  const int kv = var_pos(sys.tris[t], v);
  for (int j = 0; j < 8; ++j)
    if (((j >> ku) & 1) == su && ((j >> kv) & 1) == sv)
      row[8 * t + j] += coeff;
}

// Correlator of context c, read from its first containing triangle.
void add_correlator(std::vector<double>& row, const TriangleSystem& sys,
                    int cid, double coeff) {
  const int t = sys.containing[cid].front();
  const auto [u, v] = sys.s.contexts()[cid];
  const int ku = var_pos(sys.tris[t], u);
  const int kv = var_pos(sys.tris[t], v);
  for (int j = 0; j < 8; ++j) {
    const double sign = ((j >> ku) & 1) == ((j >> kv) & 1) ? 1.0 : -1.0;
    row[8 * t + j] += coeff * sign;
  }
}

LinearProgram base_program(const TriangleSystem& sys) {
  LinearProgram p;
  p.c.assign(sys.cols(), 0.0);
  for (int t = 0; t < static_cast<int>(sys.tris.size()); ++t) {
    std::vector<double> row(sys.cols(), 0.0);
    for (int j = 0; j < 8; ++j) row[8 * t + j] = 1.0;
    p.a_eq.push_back(std::move(row));
    p.b_eq.push_back(1.0);
  }
  for (int c = 0; c < sys.s.context_count(); ++c) {
    const auto& owners = sys.containing[c];
    const auto [u, v] = sys.s.contexts()[c];
    for (size_t i = 1; i < owners.size(); ++i) {
      // three of the four entry equalities; the fourth follows from the
      // two normalizations
      for (int su = 0; su < 2; ++su)
        for (int sv = 0; sv < 2; ++sv) {
          if (su == 1 && sv == 1) continue;
          std::vector<double> row(sys.cols(), 0.0);
          add_pair_entry(row, sys, owners[i], u, su, v, sv, 1.0);
          add_pair_entry(row, sys, owners[0], u, su, v, sv, -1.0);
          p.a_eq.push_back(std::move(row));
          p.b_eq.push_back(0.0);
        }
    }
  }
  return p;
}

using Expression = std::vector<std::pair<int, double>>;  // (context, coeff)

struct MonogamySpec {
  TriangleSystem sys;
  Expression first;
  Expression second;
};

int ctx(const Scenario& s, const char* a, const char* b) {
  const int id = s.context_id(s.index_of(a), s.index_of(b));
  if (id < 0)
    throw InputError(std::string("pair (") + a + ", " + b +
                     ") is not a context");
  return id;
}

MonogamySpec spec_for(const std::string& which) {
  if (which == "hybrid") {
    TriangleSystem sys = make_system(make_kcbs_chsh_hybrid());
    const Scenario& s = sys.s;
    Expression first = {{ctx(s, "A1", "A2"), 1.0},
                        {ctx(s, "A2", "A3"), 1.0},
                        {ctx(s, "A3", "A4"), 1.0},
                        {ctx(s, "A4", "A5"), 1.0},
                        {ctx(s, "A1", "A5"), -1.0}};
    Expression second = {{ctx(s, "A1", "B2"), 1.0},
                         {ctx(s, "A3", "B2"), 1.0},
                         {ctx(s, "A3", "B1"), 1.0},
                         {ctx(s, "A1", "B1"), -1.0}};
    return {std::move(sys), std::move(first), std::move(second)};
  }
  if (which == "tripartite") {
    TriangleSystem sys = make_system(make_tripartite_chsh());
    const Scenario& s = sys.s;
    Expression first = {{ctx(s, "A1", "B2"), 1.0},
                        {ctx(s, "A2", "B2"), 1.0},
                        {ctx(s, "A2", "B1"), 1.0},
                        {ctx(s, "A1", "B1"), -1.0}};
    Expression second = {{ctx(s, "A1", "C2"), 1.0},
                         {ctx(s, "A2", "C2"), 1.0},
                         {ctx(s, "A2", "C1"), 1.0},
                         {ctx(s, "A1", "C1"), -1.0}};
    return {std::move(sys), std::move(first), std::move(second)};
  }
  throw InputError("unknown monogamy relation '" + which +
                   "' (supported: hybrid, tripartite)");
}

void add_expression(std::vector<double>& row, const TriangleSystem& sys,
                    const Expression& e, double scale) {
  for (const auto& [cid, coeff] : e)
    add_correlator(row, sys, cid, scale * coeff);
}

MonogamyResult from_chains(const ChainedInequality& c1,
                           const ChainedInequality& c2) {
  MonogamyResult r;
  r.first_expression = c1.lhs_value - c1.rhs_value;
  r.second_expression = c2.lhs_value - c2.rhs_value;
  r.lhs_value = c1.lhs_value + c2.lhs_value;
  r.rhs_value = c1.rhs_value + c2.rhs_value;
  r.satisfied = r.lhs_value <= r.rhs_value + kVerdictSlack;
  return r;
}

}  // namespace

MonogamyResult chsh_kcbs_monogamy(const Behavior& b, const DistanceKind& kind) {
  const auto c1 =
      chained_distance_check(b, kind, {"A1", "A5", "A4", "A3", "A2"});
  const auto c2 = chained_distance_check(b, kind, {"A1", "B1", "A3", "B2"});
  return from_chains(c1, c2);
}

MonogamyResult bell_bell_monogamy(const Behavior& b, const DistanceKind& kind) {
  const auto c1 = chained_distance_check(b, kind, {"A1", "B1", "A2", "B2"});
  const auto c2 = chained_distance_check(b, kind, {"A1", "C1", "A2", "C2"});
  return from_chains(c1, c2);
}

double monogamy_bound_via_lp(const std::string& which, const DistanceKind& kind,
                             const LpOptions& options) {
  if (kind.variant != DistanceKind::Variant::covariance)
    throw UnsupportedError(
        "only the covariance form is linear in table entries; other kinds "
        "have no polytope bound here");
  const MonogamySpec spec = spec_for(which);
  LinearProgram p = base_program(spec.sys);
  add_expression(p.c, spec.sys, spec.first, -1.0);
  add_expression(p.c, spec.sys, spec.second, -1.0);
  const LpOutcome out = lp_solve(p, options);
  if (out.status != LpStatus::optimal)
    throw SolverError("monogamy bound program did not reach an optimum");
  return -out.optimum;
}

std::vector<double> monogamy_tradeoff(const std::string& which,
                                      const std::vector<double>& pins,
                                      const LpOptions& options) {
  const MonogamySpec spec = spec_for(which);
  std::vector<double> curve;
  curve.reserve(pins.size());
  for (const double pin : pins) {
    LinearProgram p = base_program(spec.sys);
    std::vector<double> row(spec.sys.cols(), 0.0);
    add_expression(row, spec.sys, spec.first, 1.0);
    p.a_eq.push_back(std::move(row));
    p.b_eq.push_back(pin);
    add_expression(p.c, spec.sys, spec.second, -1.0);
    const LpOutcome out = lp_solve(p, options);
    if (out.status == LpStatus::infeasible)
      throw InputError("pinned value is outside the attainable range");
    if (out.status != LpStatus::optimal)
      throw SolverError("monogamy trade-off program did not reach an optimum");
    curve.push_back(-out.optimum);
  }
  return curve;
}

Behavior sample_triangle_consistent(const Scenario& s, uint64_t seed) {
  TriangleSystem sys = make_system(s);
  Rng rng(seed);
  LinearProgram p = base_program(sys);
  for (double& c : p.c) c = rng.uniform(-1.0, 1.0);
  const LpOutcome out = lp_solve(p);
  if (out.status != LpStatus::optimal)
    throw SolverError("triangle-consistent sampling program failed");

  const double w = rng.uniform();
  std::vector<double> q = out.solution;
  for (double& v : q) v = w * v + (1.0 - w) * 0.125;

  std::vector<JointTable> tables(s.context_count());
  for (int c = 0; c < s.context_count(); ++c) {
    const int t = sys.containing[c].front();
    const auto [u, v] = sys.s.contexts()[c];
    const int ku = var_pos(sys.tris[t], u);
    const int kv = var_pos(sys.tris[t], v);
    double e[4] = {0, 0, 0, 0};
    for (int j = 0; j < 8; ++j) {
      const int cell = (((j >> ku) & 1) << 1) | ((j >> kv) & 1);
      e[cell] += q[8 * t + j];
    }
    tables[c] = {e[0], e[1], e[2], e[3]};
  }
  return Behavior(s, std::move(tables));
}

}  // namespace ctxdist
