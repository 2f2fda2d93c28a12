#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctxdist/scenario.hpp"

namespace ctxdist {

// Joint outcome table for one ordered context pair (v,w).
// Entries are probabilities of (v,w) = (+,+), (+,-), (-,+), (-,-).
struct JointTable {
  double p_pp = 0, p_pm = 0, p_mp = 0, p_mm = 0;

  double sum() const { return p_pp + p_pm + p_mp + p_mm; }
  JointTable transposed() const { return {p_pp, p_mp, p_pm, p_mm}; }

  // a, b in {+1, -1}
  double prob(int a, int b) const;
  double& entry(const std::string& key);  // "++", "+-", "-+", "--"
  double entry(const std::string& key) const;
  double correlator() const { return p_pp - p_pm - p_mp + p_mm; }
  // Marginals of the first / second variable.
  double first_plus() const { return p_pp + p_pm; }
  double second_plus() const { return p_pp + p_mp; }
};

JointTable correlated_table();      // (+,+) and (-,-) each 1/2
JointTable anticorrelated_table();  // (+,-) and (-,+) each 1/2
JointTable independent_table();     // all entries 1/4

struct ValidationReport {
  std::vector<double> normalization_residual;  // per context, |sum - 1|
  std::vector<double> marginal_discrepancy;    // per variable, max mismatch
  double worst_negative_entry = 0;             // magnitude of worst negative
  bool ok() const;
  double worst() const;
};

class Behavior {
 public:
  Behavior(Scenario scenario, std::vector<JointTable> tables);

  const Scenario& scenario() const { return scenario_; }
  const std::vector<JointTable>& tables() const { return tables_; }

  const JointTable& table(int context) const { return tables_.at(context); }
  // Table for the (v,w) pair in that orientation; transposes when the
  // stored order is (w,v). Throws ContextError for non-context pairs.
  JointTable table(int v, int w) const;
  JointTable table(const std::string& v, const std::string& w) const;

  double prob(int v, int sv, int w, int sw) const;
  double correlator(int context) const;
  double correlator(int v, int w) const;
  double correlator(const std::string& v, const std::string& w) const;

  // (p(+1), p(-1)) read from the lexicographically first context holding v.
  std::pair<double, double> marginal(int v) const;
  std::pair<double, double> marginal(const std::string& v) const;

  ValidationReport validate() const;

  JointTable& mutable_table(int context) { return tables_.at(context); }

 private:
  Scenario scenario_;
  std::vector<JointTable> tables_;
};

Behavior uniform_behavior(const Scenario& s);
// Deterministic behavior: bit i of `assignment` is variable i's outcome,
// bit value 0 meaning +1.
Behavior behavior_from_assignment(const Scenario& s, uint32_t assignment);
// Convex mixture of deterministic assignments; weights indexed by assignment.
Behavior behavior_from_weights(const Scenario& s,
                               const std::vector<double>& weights);

Behavior mix(const Behavior& b1, const Behavior& b2, double w);

// The three 3-cycle reference distributions.
Behavior fixture_p1();
Behavior fixture_p2();
Behavior fixture_nc();

// Seeded draw from the no-disturbance polytope: a vertex found by a random
// linear objective, mixed toward the uniform behavior by a random weight.
// Implemented in polytope.cpp.
Behavior sample_no_disturbance(const Scenario& s, uint64_t seed);

}  // namespace ctxdist
