#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ctxdist/behavior.hpp"
#include "ctxdist/distance.hpp"

namespace ctxdist {

struct ChainedInequality {
  DistanceKind kind;
  std::vector<std::string> cycle;
  std::pair<std::string, std::string> lhs_edge;
  std::vector<std::pair<std::string, std::string>> rhs_edges;  // N-1 entries
  double lhs_value = 0;
  double rhs_value = 0;
  bool satisfied = true;
};

// d(X1,X2) against the path X2→X3→…→XN→X1.
ChainedInequality chained_distance_check(const Behavior& b,
                                         const DistanceKind& kind,
                                         const std::vector<std::string>& cycle);

struct InequalityResult {
  std::string name;
  double value = 0;
  double bound = 0;
  bool violated = false;
  bool tight = false;  // satisfied with value at the bound
  std::vector<std::pair<std::string, double>> witness_terms;
  std::string note;
};

// -⟨X1X2⟩ + Σ_{i=2..n}⟨X_i X_{i+1}⟩ ≤ n-2; `rotation` moves the minus
// sign to the edge starting at X_{1+rotation}.
InequalityResult correlation_ncycle(const Behavior& b, int n, int rotation = 0);

// E(X1,X2) - Σ_{i=2..n} E(X_i,X_{i+1}) ≤ 0, in bits.
InequalityResult entropic_ncycle(const Behavior& b, int n);

// p(X1=+,X2=-) + p(X2=+,X3=+) + p(X3=-,X1=-) ≤ 1 on the 3-cycle.
InequalityResult specker(const Behavior& b);

// -p(X1=+,X2=+) + p(X2=+,X3=+) + p(X3=+,X4=+) + p(X4=+,X1=+)
//   - p(X3=+) - p(X4=+) ≤ 0 on the 4-cycle.
InequalityResult ch_inequality(const Behavior& b);

// Σ p(X_i=+, X_{i+1}=-) ≤ (n-1)/2 for odd n.
InequalityResult exclusive_events_inequality(const Behavior& b, int n);

// Derived cycle of indicator variables E_i = [X_i=+ ∧ X_{i+1}=-]; its
// Kolmogorov chained check with exclusive_event_selection reproduces the
// exclusive-events verdict.
Behavior exclusive_event_behavior(const Behavior& b, int n);
std::map<std::string, int> exclusive_event_selection(int n);

// true iff the cycle-edge values extend to a full pseudometric, i.e. no
// edge exceeds the sum of all the others.
bool metric_extension_feasible(const std::vector<double>& cycle_edges);

// Dispatch by CLI name: "gnc:N", "gne:N", "specker", "ch", "excl:N",
// "chained:<kind>:N" (chained reports value = lhs-rhs against bound 0).
InequalityResult evaluate_named(const Behavior& b, const std::string& name);

}  // namespace ctxdist
