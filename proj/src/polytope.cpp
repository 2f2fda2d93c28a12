#include "ctxdist/polytope.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctxdist/common.hpp"
#include "ctxdist/rng.hpp"

namespace ctxdist {

namespace {

constexpr const char* kEntryKeys[4] = {"++", "+-", "-+", "--"};

int entry_index(const std::string& key) {
  for (int k = 0; k < 4; ++k)
    if (key == kEntryKeys[k]) return k;
  throw BehaviorError("unknown table entry '" + key +
                      "' (expected ++, +-, -+ or --)");
}

// Cell index of assignment m inside the table of context (a, b); bit value 0
// encodes outcome +1.  Matches behavior_from_weights.
inline int cell_of(uint32_t m, int a, int b) {
  return static_cast<int>((((m >> a) & 1u) << 1) | ((m >> b) & 1u));
}

void require_valid(const Behavior& b, const char* op) {
  if (!b.validate().ok())
    throw BehaviorError(std::string(op) +
                        " requires a behavior that passes validation");
}

LinearProgram jpd_program(const Behavior& b) {
  const Scenario& s = b.scenario();
  const int n = s.variable_count();
  if (n > 16)
    throw CapacityError(
        "joint-distribution search over " + std::to_string(n) +
        " variables needs 2^" + std::to_string(n) +
        " columns; split the scenario into smaller pieces first");
  const size_t cols = size_t{1} << n;

  LinearProgram p;
  p.c.assign(cols, 0.0);
  for (int c = 0; c < s.context_count(); ++c) {
    const auto [a, v] = s.contexts()[c];
    const JointTable& t = b.table(c);
    const double rhs[3] = {t.p_pp, t.p_pm, t.p_mp};
    for (int k = 0; k < 3; ++k) {
      std::vector<double> row(cols, 0.0);
      for (uint32_t m = 0; m < cols; ++m)
        if (cell_of(m, a, v) == k) row[m] = 1.0;
      p.a_eq.push_back(std::move(row));
      p.b_eq.push_back(rhs[k]);
    }
  }
  p.a_eq.emplace_back(cols, 1.0);
  p.b_eq.push_back(1.0);
  return p;
}

std::map<uint32_t, double> collect_weights(const std::vector<double>& x) {
  std::map<uint32_t, double> w;
  for (size_t m = 0; m < x.size(); ++m)
    if (x[m] > 1e-12) w[static_cast<uint32_t>(m)] = x[m];
  return w;
}

double remarginalization_residual(const Behavior& b,
                                  const std::map<uint32_t, double>& w) {
  const Scenario& s = b.scenario();
  double worst = 0;
  for (int c = 0; c < s.context_count(); ++c) {
    const auto [a, v] = s.contexts()[c];
    double e[4] = {0, 0, 0, 0};
    for (const auto& [m, wt] : w) e[cell_of(m, a, v)] += wt;
    const JointTable& t = b.table(c);
    const double ref[4] = {t.p_pp, t.p_pm, t.p_mp, t.p_mm};
    for (int k = 0; k < 4; ++k)
      worst = std::max(worst, std::abs(e[k] - ref[k]));
  }
  return worst;
}

// Adds the coefficients of p(variable = outcome), read off the variable's
// first context, into an expression row over the 4*context_count columns.
void add_marginal_coeffs(std::vector<double>& row, const Scenario& s,
                         const std::string& variable, int outcome,
                         double coeff) {
  if (outcome != 1 && outcome != -1)
    throw InputError("marginal outcome must be +1 or -1");
  const int v = s.index_of(variable);
  const auto cs = s.contexts_of(v);
  if (cs.empty())
    throw InputError("variable " + variable + " appears in no context");
  const int c = cs.front();
  const bool first = s.contexts()[c].first == v;
  int e1, e2;
  if (outcome == 1) {
    e1 = 0;
    e2 = first ? 1 : 2;
  } else {
    e1 = 3;
    e2 = first ? 2 : 1;
  }
  row[4 * c + e1] += coeff;
  row[4 * c + e2] += coeff;
}

void add_objective_coeffs(std::vector<double>& row, const Scenario& s,
                          const LinearObjective& o, double scale) {
  for (const auto& t : o.table_terms) {
    if (t.context < 0 || t.context >= s.context_count())
      throw InputError("objective references context " +
                       std::to_string(t.context) + " which does not exist");
    row[4 * t.context + entry_index(t.entry)] += scale * t.coeff;
  }
  for (const auto& mt : o.marginal_terms)
    add_marginal_coeffs(row, s, mt.variable, mt.outcome, scale * mt.coeff);
}

// Equality system cutting out the no-disturbance polytope in the
// one-column-per-table-entry coordinates.
LinearProgram nd_program(const Scenario& s, const LinearObjective& objective,
                         const std::vector<PinnedExpression>& pins) {
  const int cc = s.context_count();
  const int cols = 4 * cc;
  LinearProgram p;
  p.c.assign(cols, 0.0);
  add_objective_coeffs(p.c, s, objective, -1.0);  // maximize = minimize the negative

  for (int c = 0; c < cc; ++c) {
    std::vector<double> row(cols, 0.0);
    for (int k = 0; k < 4; ++k) row[4 * c + k] = 1.0;
    p.a_eq.push_back(std::move(row));
    p.b_eq.push_back(1.0);
  }
  for (int v = 0; v < s.variable_count(); ++v) {
    const auto cs = s.contexts_of(v);
    for (size_t i = 1; i < cs.size(); ++i) {
      std::vector<double> row(cols, 0.0);
      // p_v(+) in cs[i] minus p_v(+) in cs[0]
      for (int which = 0; which < 2; ++which) {
        const int c = which == 0 ? cs[i] : cs[0];
        const double sgn = which == 0 ? 1.0 : -1.0;
        const bool first = s.contexts()[c].first == v;
        row[4 * c + 0] += sgn;
        row[4 * c + (first ? 1 : 2)] += sgn;
      }
      p.a_eq.push_back(std::move(row));
      p.b_eq.push_back(0.0);
    }
  }
  for (const auto& pin : pins) {
    std::vector<double> row(cols, 0.0);
    add_objective_coeffs(row, s, pin.expression, 1.0);
    p.a_eq.push_back(std::move(row));
    p.b_eq.push_back(pin.value);
  }
  return p;
}

Behavior behavior_from_columns(const Scenario& s,
                               const std::vector<double>& x) {
  std::vector<JointTable> tables(s.context_count());
  for (int c = 0; c < s.context_count(); ++c)
    tables[c] = {x[4 * c + 0], x[4 * c + 1], x[4 * c + 2], x[4 * c + 3]};
  return Behavior(s, std::move(tables));
}

std::pair<std::string, int> split_named(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return {name, 0};
  const std::string head = name.substr(0, colon);
  const std::string tail = name.substr(colon + 1);
  char* end = nullptr;
  const long n = std::strtol(tail.c_str(), &end, 10);
  if (end == tail.c_str() || *end != '\0')
    throw InputError("malformed inequality name '" + name + "'");
  return {head, static_cast<int>(n)};
}

// Term for p(v = sv, w = sw) respecting the stored orientation of (v, w).
TableTerm pair_event_term(const Scenario& s, int v, int sv, int w, int sw,
                          double coeff) {
  const int cid = s.context_id(v, w);
  if (cid < 0)
    throw ContextError("pair (" + s.variables()[v] + ", " + s.variables()[w] +
                       ") is not a context");
  const bool v_first = s.contexts()[cid].first == v;
  const int a = v_first ? sv : sw;
  const int b = v_first ? sw : sv;
  std::string entry;
  entry += a == 1 ? '+' : '-';
  entry += b == 1 ? '+' : '-';
  return {cid, entry, coeff};
}

std::vector<int> cycle_variables(const Scenario& s, int n) {
  if (n < 3) throw InputError("cycle length must be at least 3");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i)
    idx[i] = s.index_of("X" + std::to_string(i + 1));
  return idx;
}

}  // namespace

double LinearObjective::evaluate(const Behavior& b) const {
  const Scenario& s = b.scenario();
  double value = 0;
  for (const auto& t : table_terms) {
    if (t.context < 0 || t.context >= s.context_count())
      throw InputError("objective references context " +
                       std::to_string(t.context) + " which does not exist");
    value += t.coeff * b.table(t.context).entry(t.entry);
  }
  for (const auto& mt : marginal_terms) {
    if (mt.outcome != 1 && mt.outcome != -1)
      throw InputError("marginal outcome must be +1 or -1");
    const auto pm = b.marginal(mt.variable);
    value += mt.coeff * (mt.outcome == 1 ? pm.first : pm.second);
  }
  return value;
}

JpdVerdict jpd_exists(const Behavior& b, const LpOptions& options) {
  require_valid(b, "jpd_exists");
  const LpOutcome out = lp_solve(jpd_program(b), options);
  JpdVerdict verdict;
  if (out.status == LpStatus::infeasible) return verdict;
  if (out.status != LpStatus::optimal)
    throw SolverError("joint-distribution feasibility program was unbounded");
  verdict.exists = true;
  verdict.weights = collect_weights(out.solution);
  if (remarginalization_residual(b, verdict.weights) > kLpTol)
    throw SolverError(
        "joint-distribution weights failed the re-marginalization check");
  return verdict;
}

Decomposition decompose_noncontextual(const Behavior& b,
                                      const LpOptions& options) {
  require_valid(b, "decompose_noncontextual");
  const LpOutcome out = lp_solve(jpd_program(b), options);
  Decomposition d;
  if (out.status == LpStatus::infeasible) {
    d.certificate = out.certificate;
    return d;
  }
  if (out.status != LpStatus::optimal)
    throw SolverError("joint-distribution feasibility program was unbounded");
  d.ok = true;
  d.weights = collect_weights(out.solution);
  d.reconstruction_residual = remarginalization_residual(b, d.weights);
  if (d.reconstruction_residual > kLpTol)
    throw SolverError(
        "joint-distribution weights failed the re-marginalization check");
  return d;
}

NoDisturbanceMax max_over_no_disturbance(
    const Scenario& s, const LinearObjective& objective,
    const std::vector<PinnedExpression>& pins, const LpOptions& options) {
  const LpOutcome out = lp_solve(nd_program(s, objective, pins), options);
  if (out.status == LpStatus::infeasible)
    throw InputError("pinned values leave no admissible behavior");
  if (out.status != LpStatus::optimal)
    throw SolverError("no-disturbance maximization reported unbounded");
  return {-out.optimum, behavior_from_columns(s, out.solution)};
}

NamedObjective inequality_objective(const Scenario& s,
                                    const std::string& name) {
  const auto [head, n] = split_named(name);
  NamedObjective named;
  named.name = name;

  if (head == "gnc") {
    const auto idx = cycle_variables(s, n);
    for (int i = 0; i < n; ++i) {
      const int v = idx[i];
      const int w = idx[(i + 1) % n];
      const double sgn = i == 0 ? -1.0 : 1.0;
      named.objective.table_terms.push_back(pair_event_term(s, v, 1, w, 1, sgn));
      named.objective.table_terms.push_back(pair_event_term(s, v, 1, w, -1, -sgn));
      named.objective.table_terms.push_back(pair_event_term(s, v, -1, w, 1, -sgn));
      named.objective.table_terms.push_back(pair_event_term(s, v, -1, w, -1, sgn));
    }
    named.bound = n - 2;
    return named;
  }
  if (head == "specker") {
    const auto idx = cycle_variables(s, 3);
    named.objective.table_terms = {
        pair_event_term(s, idx[0], 1, idx[1], -1, 1.0),
        pair_event_term(s, idx[1], 1, idx[2], 1, 1.0),
        pair_event_term(s, idx[2], -1, idx[0], -1, 1.0),
    };
    named.bound = 1;
    return named;
  }
  if (head == "ch") {
    const auto idx = cycle_variables(s, 4);
    named.objective.table_terms = {
        pair_event_term(s, idx[0], 1, idx[1], 1, -1.0),
        pair_event_term(s, idx[1], 1, idx[2], 1, 1.0),
        pair_event_term(s, idx[2], 1, idx[3], 1, 1.0),
        pair_event_term(s, idx[3], 1, idx[0], 1, 1.0),
    };
    named.objective.marginal_terms = {{s.variables()[idx[2]], 1, -1.0},
                                      {s.variables()[idx[3]], 1, -1.0}};
    named.bound = 0;
    return named;
  }
  if (head == "excl") {
    if (n % 2 == 0)
      throw UnsupportedError(
          "exclusive-event inequalities are defined for odd cycle lengths");
    const auto idx = cycle_variables(s, n);
    for (int i = 0; i < n; ++i)
      named.objective.table_terms.push_back(
          pair_event_term(s, idx[i], 1, idx[(i + 1) % n], -1, 1.0));
    named.bound = (n - 1) / 2.0;
    return named;
  }
  if (head == "gne")
    throw UnsupportedError(
        "entropic expressions are not linear in table entries and have no "
        "polytope objective");
  throw InputError("unknown objective name '" + name +
                   "' (supported: gnc:N, specker, ch, excl:N)");
}

Behavior sample_no_disturbance(const Scenario& s, uint64_t seed) {
  Rng rng(seed);
  LinearObjective objective;
  for (int c = 0; c < s.context_count(); ++c)
    for (int k = 0; k < 4; ++k)
      objective.table_terms.push_back({c, kEntryKeys[k], rng.uniform(-1, 1)});
  NoDisturbanceMax vertex = max_over_no_disturbance(s, objective);
  const double w = rng.uniform();
  return mix(vertex.witness, uniform_behavior(s), w);
}

std::vector<Behavior> sample_no_disturbance_batch(const Scenario& s, int count,
                                                  uint64_t seed, Exec mode) {
  if (count < 0) throw InputError("sample count must be nonnegative");
  Rng base(seed);
  std::vector<uint64_t> seeds(count);
  for (int i = 0; i < count; ++i) seeds[i] = base.fork(i).next_u64();
  std::vector<std::optional<Behavior>> slots(count);
  for_range(mode, count, [&](std::ptrdiff_t i) {
    slots[i].emplace(sample_no_disturbance(s, seeds[i]));
  });
  std::vector<Behavior> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace ctxdist
