#include "ctxdist/behavior.hpp"

#include <algorithm>
#include <cmath>

#include "ctxdist/common.hpp"

namespace ctxdist {

double JointTable::prob(int a, int b) const {
  if (a == 1) return b == 1 ? p_pp : p_pm;
  return b == 1 ? p_mp : p_mm;
}

double& JointTable::entry(const std::string& key) {
  if (key == "++") return p_pp;
  if (key == "+-") return p_pm;
  if (key == "-+") return p_mp;
  if (key == "--") return p_mm;
  throw BehaviorError("unknown table entry key '" + key + "'");
}

double JointTable::entry(const std::string& key) const {
  return const_cast<JointTable*>(this)->entry(key);
}

JointTable correlated_table() { return {0.5, 0, 0, 0.5}; }
JointTable anticorrelated_table() { return {0, 0.5, 0.5, 0}; }
JointTable independent_table() { return {0.25, 0.25, 0.25, 0.25}; }

bool ValidationReport::ok() const { return worst() <= kProbTol; }

double ValidationReport::worst() const {
  double w = worst_negative_entry;
  for (double r : normalization_residual) w = std::max(w, r);
  for (double r : marginal_discrepancy) w = std::max(w, r);
  return w;
}

Behavior::Behavior(Scenario scenario, std::vector<JointTable> tables)
    : scenario_(std::move(scenario)), tables_(std::move(tables)) {
  if (static_cast<int>(tables_.size()) != scenario_.context_count())
    throw BehaviorError("expected one table per context: " +
                        std::to_string(scenario_.context_count()) + " needed, " +
                        std::to_string(tables_.size()) + " given");
}

JointTable Behavior::table(int v, int w) const {
  int c = scenario_.context_id(v, w);
  if (c < 0)
    throw ContextError("(" + scenario_.variables().at(v) + "," +
                       scenario_.variables().at(w) +
                       ") is not a context; its joint table is not measurable");
  const auto& stored = tables_[c];
  return scenario_.contexts()[c].first == v ? stored : stored.transposed();
}

JointTable Behavior::table(const std::string& v, const std::string& w) const {
  return table(scenario_.index_of(v), scenario_.index_of(w));
}

double Behavior::prob(int v, int sv, int w, int sw) const {
  return table(v, w).prob(sv, sw);
}

double Behavior::correlator(int context) const {
  return tables_.at(context).correlator();
}

double Behavior::correlator(int v, int w) const {
  return table(v, w).correlator();
}

double Behavior::correlator(const std::string& v, const std::string& w) const {
  return correlator(scenario_.index_of(v), scenario_.index_of(w));
}

std::pair<double, double> Behavior::marginal(int v) const {
  auto contexts = scenario_.contexts_of(v);
  if (contexts.empty())
    throw BehaviorError("variable " + scenario_.variables().at(v) +
                        " appears in no context");
  int c = contexts.front();
  double plus = scenario_.contexts()[c].first == v ? tables_[c].first_plus()
                                                   : tables_[c].second_plus();
  return {plus, 1.0 - plus};
}

std::pair<double, double> Behavior::marginal(const std::string& v) const {
  return marginal(scenario_.index_of(v));
}

ValidationReport Behavior::validate() const {
  ValidationReport report;
  for (const auto& t : tables_) {
    report.normalization_residual.push_back(std::abs(t.sum() - 1.0));
    for (double p : {t.p_pp, t.p_pm, t.p_mp, t.p_mm})
      if (p < 0)
        report.worst_negative_entry =
            std::max(report.worst_negative_entry, -p);
  }
  for (int v = 0; v < scenario_.variable_count(); ++v) {
    double lo = 1, hi = 0;
    for (int c : scenario_.contexts_of(v)) {
      double plus = scenario_.contexts()[c].first == v
                        ? tables_[c].first_plus()
                        : tables_[c].second_plus();
      lo = std::min(lo, plus);
      hi = std::max(hi, plus);
    }
    report.marginal_discrepancy.push_back(std::max(0.0, hi - lo));
  }
  return report;
}

Behavior uniform_behavior(const Scenario& s) {
  return Behavior(s, std::vector<JointTable>(s.context_count(),
                                             independent_table()));
}

Behavior behavior_from_assignment(const Scenario& s, uint32_t assignment) {
  if (s.variable_count() > 32) throw CapacityError("too many variables");
  std::vector<JointTable> tables;
  tables.reserve(s.context_count());
  for (auto [a, b] : s.contexts()) {
    int sa = (assignment >> a) & 1 ? -1 : 1;
    int sb = (assignment >> b) & 1 ? -1 : 1;
    JointTable t;
    t.entry(std::string(1, sa == 1 ? '+' : '-') +
            std::string(1, sb == 1 ? '+' : '-')) = 1.0;
    tables.push_back(t);
  }
  return Behavior(s, std::move(tables));
}

Behavior behavior_from_weights(const Scenario& s,
                               const std::vector<double>& weights) {
  const int n = s.variable_count();
  if (n > 16) throw CapacityError("more than 16 variables");
  if (weights.size() != (size_t{1} << n))
    throw BehaviorError("weight vector must have one entry per assignment");
  std::vector<JointTable> tables(s.context_count());
  for (size_t m = 0; m < weights.size(); ++m) {
    if (weights[m] == 0) continue;
    for (int c = 0; c < s.context_count(); ++c) {
      auto [a, b] = s.contexts()[c];
      int bit = (((m >> a) & 1) << 1) | ((m >> b) & 1);
      // bit layout: first variable selects the row, second the column
      double& cell = bit == 0   ? tables[c].p_pp
                     : bit == 1 ? tables[c].p_pm
                     : bit == 2 ? tables[c].p_mp
                                : tables[c].p_mm;
      cell += weights[m];
    }
  }
  return Behavior(s, std::move(tables));
}

Behavior mix(const Behavior& b1, const Behavior& b2, double w) {
  if (b1.scenario().variables() != b2.scenario().variables() ||
      b1.scenario().contexts() != b2.scenario().contexts())
    throw BehaviorError("cannot mix behaviors on different scenarios");
  if (w < 0 || w > 1) throw BehaviorError("mixing weight outside [0,1]");
  std::vector<JointTable> tables;
  tables.reserve(b1.tables().size());
  for (size_t c = 0; c < b1.tables().size(); ++c) {
    const auto& x = b1.tables()[c];
    const auto& y = b2.tables()[c];
    tables.push_back({w * x.p_pp + (1 - w) * y.p_pp,
                      w * x.p_pm + (1 - w) * y.p_pm,
                      w * x.p_mp + (1 - w) * y.p_mp,
                      w * x.p_mm + (1 - w) * y.p_mm});
  }
  return Behavior(b1.scenario(), std::move(tables));
}

Behavior fixture_p1() {
  // Anticorrelated (X1,X2), correlated (X2,X3) and (X1,X3).
  return Behavior(make_cycle(3), {anticorrelated_table(), correlated_table(),
                                  correlated_table()});
}

Behavior fixture_p2() {
  // Independent (X1,X2), correlated (X2,X3) and (X1,X3).
  return Behavior(make_cycle(3), {independent_table(), correlated_table(),
                                  correlated_table()});
}

Behavior fixture_nc() {
  return Behavior(make_cycle(3), {correlated_table(), correlated_table(),
                                  correlated_table()});
}

}  // namespace ctxdist
