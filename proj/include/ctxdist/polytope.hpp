#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctxdist/behavior.hpp"
#include "ctxdist/lp.hpp"

namespace ctxdist {

struct JpdVerdict {
  bool exists = false;
  // assignment → weight, tiny weights dropped; present when exists.
  std::map<uint32_t, double> weights;
};

JpdVerdict jpd_exists(const Behavior& b, const LpOptions& options = {});

struct Decomposition {
  bool ok = false;
  std::map<uint32_t, double> weights;    // ok
  std::vector<double> certificate;       // !ok: Farkas vector, LP row order
  double reconstruction_residual = 0;    // ok: max table entry mismatch
};

Decomposition decompose_noncontextual(const Behavior& b,
                                      const LpOptions& options = {});

// Linear functional over a behavior's table entries and marginals.
struct TableTerm {
  int context = 0;
  std::string entry;  // "++", "+-", "-+", "--"
  double coeff = 0;
};
struct MarginalTerm {
  std::string variable;
  int outcome = 1;  // ±1
  double coeff = 0;
};
struct LinearObjective {
  std::vector<TableTerm> table_terms;
  std::vector<MarginalTerm> marginal_terms;

  double evaluate(const Behavior& b) const;
};

struct PinnedExpression {
  LinearObjective expression;
  double value = 0;
};

struct NoDisturbanceMax {
  double value = 0;
  Behavior witness;
};

// Maximize the objective over the no-disturbance polytope (per-context
// normalization + nonnegativity + shared-variable marginal consistency).
// Pins add equality constraints expression = value.
NoDisturbanceMax max_over_no_disturbance(
    const Scenario& s, const LinearObjective& objective,
    const std::vector<PinnedExpression>& pins = {},
    const LpOptions& options = {});

struct NamedObjective {
  std::string name;
  LinearObjective objective;
  double bound = 0;
};

// Objective + classical bound for "gnc:N", "gne:N" is not expressible
// (nonlinear); supported: "gnc:N", "specker", "ch", "excl:N".
NamedObjective inequality_objective(const Scenario& s, const std::string& name);

std::vector<Behavior> sample_no_disturbance_batch(const Scenario& s, int count,
                                                  uint64_t seed,
                                                  Exec mode = Exec::serial);

}  // namespace ctxdist
