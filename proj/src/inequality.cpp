#include "ctxdist/inequality.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctxdist/common.hpp"

namespace ctxdist {

namespace {

std::vector<std::string> cycle_names(int n) {
  if (n < 3) throw InputError("cycle length must be at least 3");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "X" + std::to_string(i + 1);
  return names;
}

std::string corr_label(const std::string& a, const std::string& b) {
  return "corr(" + a + "," + b + ")";
}

std::string event_label(const std::string& a, int sa, const std::string& b,
                        int sb) {
  return "p(" + a + "=" + (sa == 1 ? "+" : "-") + "," + b + "=" +
         (sb == 1 ? "+" : "-") + ")";
}

void finish(InequalityResult& r) {
  r.violated = r.value > r.bound + kVerdictSlack;
  r.tight = !r.violated && r.value >= r.bound - kVerdictSlack;
}

int parse_int(const std::string& text, const std::string& name) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0')
    throw InputError("malformed inequality name '" + name + "'");
  return static_cast<int>(v);
}

}  // namespace

ChainedInequality chained_distance_check(
    const Behavior& b, const DistanceKind& kind,
    const std::vector<std::string>& cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n < 3) throw InputError("chained check needs a cycle of length >= 3");
  ChainedInequality r;
  r.kind = kind;
  r.cycle = cycle;
  r.lhs_edge = {cycle[0], cycle[1]};
  r.lhs_value = edge_distance(b, kind, cycle[0], cycle[1]);
  for (int i = 1; i < n; ++i) {
    const std::string& v = cycle[i];
    const std::string& w = cycle[(i + 1) % n];
    r.rhs_edges.emplace_back(v, w);
    r.rhs_value += edge_distance(b, kind, v, w);
  }
  r.satisfied = r.lhs_value <= r.rhs_value + kVerdictSlack;
  return r;
}

InequalityResult correlation_ncycle(const Behavior& b, int n, int rotation) {
  const auto names = cycle_names(n);
  const int rot = ((rotation % n) + n) % n;
  InequalityResult r;
  r.name = "gnc:" + std::to_string(n);
  r.bound = n - 2;
  for (int i = 0; i < n; ++i) {
    const std::string& v = names[i];
    const std::string& w = names[(i + 1) % n];
    const double sgn = i == rot ? -1.0 : 1.0;
    const double c = b.correlator(v, w);
    r.value += sgn * c;
    r.witness_terms.emplace_back((sgn < 0 ? "-" : "+") + corr_label(v, w),
                                 sgn * c);
  }
  if (n == 5)
    r.note = "five-cycle correlation inequality in the single-negated-edge "
             "form";
  if (rot != 0) {
    if (!r.note.empty()) r.note += "; ";
    r.note += "negated edge rotated to (" + names[rot] + "," +
              names[(rot + 1) % n] + ")";
  }
  finish(r);
  return r;
}

InequalityResult entropic_ncycle(const Behavior& b, int n) {
  const auto names = cycle_names(n);
  const DistanceKind kind = DistanceKind::make_entropic();
  InequalityResult r;
  r.name = "gne:" + std::to_string(n);
  r.bound = 0;
  const double lhs = edge_distance(b, kind, names[0], names[1]);
  r.value = lhs;
  r.witness_terms.emplace_back("+E(" + names[0] + "," + names[1] + ")", lhs);
  for (int i = 1; i < n; ++i) {
    const std::string& v = names[i];
    const std::string& w = names[(i + 1) % n];
    const double e = edge_distance(b, kind, v, w);
    r.value -= e;
    r.witness_terms.emplace_back("-E(" + v + "," + w + ")", -e);
  }
  finish(r);
  return r;
}

InequalityResult specker(const Behavior& b) {
  InequalityResult r;
  r.name = "specker";
  r.bound = 1;
  const double pa = b.table("X1", "X2").p_pm;
  const double pb = b.table("X2", "X3").p_pp;
  const double pc = b.table("X3", "X1").p_mm;
  r.value = pa + pb + pc;
  r.witness_terms = {{event_label("X1", 1, "X2", -1), pa},
                     {event_label("X2", 1, "X3", 1), pb},
                     {event_label("X3", -1, "X1", -1), pc}};
  finish(r);
  return r;
}

InequalityResult ch_inequality(const Behavior& b) {
  InequalityResult r;
  r.name = "ch";
  r.bound = 0;
  const double p12 = b.table("X1", "X2").p_pp;
  const double p23 = b.table("X2", "X3").p_pp;
  const double p34 = b.table("X3", "X4").p_pp;
  const double p41 = b.table("X4", "X1").p_pp;
  const double m3 = b.marginal("X3").first;
  const double m4 = b.marginal("X4").first;
  r.value = -p12 + p23 + p34 + p41 - m3 - m4;
  r.witness_terms = {{"-" + event_label("X1", 1, "X2", 1), -p12},
                     {"+" + event_label("X2", 1, "X3", 1), p23},
                     {"+" + event_label("X3", 1, "X4", 1), p34},
                     {"+" + event_label("X4", 1, "X1", 1), p41},
                     {"-p(X3=+)", -m3},
                     {"-p(X4=+)", -m4}};
  finish(r);
  return r;
}

InequalityResult exclusive_events_inequality(const Behavior& b, int n) {
  if (n < 3) throw InputError("cycle length must be at least 3");
  if (n % 2 == 0)
    throw UnsupportedError(
        "exclusive-event cycle inequalities are only available for odd "
        "cycle lengths");
  const auto names = cycle_names(n);
  InequalityResult r;
  r.name = "excl:" + std::to_string(n);
  r.bound = (n - 1) / 2.0;
  for (int i = 0; i < n; ++i) {
    const std::string& v = names[i];
    const std::string& w = names[(i + 1) % n];
    const double p = b.table(v, w).p_pm;
    r.value += p;
    r.witness_terms.emplace_back(event_label(v, 1, w, -1), p);
  }
  finish(r);
  return r;
}

Behavior exclusive_event_behavior(const Behavior& b, int n) {
  const auto names = cycle_names(n);
  std::vector<double> e(n);
  for (int i = 0; i < n; ++i)
    e[i] = b.table(names[i], names[(i + 1) % n]).p_pm;

  std::vector<std::string> indicators(n);
  std::vector<std::pair<int, int>> contexts(n);
  for (int i = 0; i < n; ++i) {
    indicators[i] = "E" + std::to_string(i + 1);
    contexts[i] = {i, (i + 1) % n};
  }
  Scenario s(std::move(indicators), std::move(contexts));
  std::vector<JointTable> tables(s.context_count());
  for (int c = 0; c < s.context_count(); ++c) {
    const auto [a, v] = s.contexts()[c];
    // adjacent indicator events never fire together
    tables[c] = {0.0, e[a], e[v], 1.0 - e[a] - e[v]};
  }
  return Behavior(std::move(s), std::move(tables));
}

std::map<std::string, int> exclusive_event_selection(int n) {
  if (n < 3) throw InputError("cycle length must be at least 3");
  std::map<std::string, int> sel;
  sel["E1"] = -1;
  for (int i = 2; i <= n; ++i)
    sel["E" + std::to_string(i)] = i % 2 == 0 ? -1 : 1;
  return sel;
}

bool metric_extension_feasible(const std::vector<double>& cycle_edges) {
  if (cycle_edges.size() < 3)
    throw InputError("metric extension needs at least 3 cycle edges");
  double total = 0;
  for (const double d : cycle_edges) {
    if (!(d >= 0)) throw InputError("edge distances must be nonnegative");
    total += d;
  }
  for (const double d : cycle_edges)
    if (d > total - d + kVerdictSlack) return false;
  return true;
}

InequalityResult evaluate_named(const Behavior& b, const std::string& name) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t colon = name.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(name.substr(start));
      break;
    }
    parts.push_back(name.substr(start, colon - start));
    start = colon + 1;
  }

  const std::string& head = parts[0];
  if (head == "specker" && parts.size() == 1) return specker(b);
  if (head == "ch" && parts.size() == 1) return ch_inequality(b);
  if (parts.size() == 2) {
    const int n = parse_int(parts[1], name);
    if (head == "gnc") return correlation_ncycle(b, n);
    if (head == "gne") return entropic_ncycle(b, n);
    if (head == "excl") return exclusive_events_inequality(b, n);
  }
  if (head == "chained" && parts.size() == 3) {
    const DistanceKind kind = kind_from_code(parts[1]);
    const int n = parse_int(parts[2], name);
    const ChainedInequality c = chained_distance_check(b, kind, cycle_names(n));
    InequalityResult r;
    r.name = name;
    r.bound = 0;
    r.value = c.lhs_value - c.rhs_value;
    r.witness_terms = {
        {"d(" + c.lhs_edge.first + "," + c.lhs_edge.second + ")", c.lhs_value},
        {"path total", c.rhs_value}};
    finish(r);
    return r;
  }
  throw InputError("unknown inequality name '" + name +
                   "' (supported: gnc:N, gne:N, specker, ch, excl:N, "
                   "chained:<kind>:N)");
}

}  // namespace ctxdist
