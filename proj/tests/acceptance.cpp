// End-to-end acceptance gate.  Each numbered criterion prints exactly one
// [PASS]/[FAIL] line with its pinned tolerance and, where limited, its
// wall-clock budget.  The process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ctxdist/behavior.hpp"
#include "ctxdist/common.hpp"
#include "ctxdist/distance.hpp"
#include "ctxdist/inequality.hpp"
#include "ctxdist/monogamy.hpp"
#include "ctxdist/polytope.hpp"
#include "ctxdist/quantum.hpp"
#include "ctxdist/rng.hpp"
#include "support/exact_cycle_oracle.hpp"

using namespace ctxdist;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, double ms,
            double budget_ms) {
  const char* verdict = pass ? "[PASS]" : "[FAIL]";
  if (budget_ms > 0)
    std::printf("%s criterion %d: %s (%.0f ms of %.0f ms)\n", verdict, number,
                label.c_str(), ms, budget_ms);
  else
    std::printf("%s criterion %d: %s (%.0f ms)\n", verdict, number,
                label.c_str(), ms);
  if (!pass) ++failures;
}

void criterion(int number, const std::string& label, double budget_ms,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::printf("       criterion %d raised: %s\n", number, e.what());
    pass = false;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  if (budget_ms > 0 && ms > budget_ms) pass = false;
  report(number, label, pass, ms, budget_ms);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<std::string> cycle_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

bool detour_oracle(const std::vector<double>& e) {
  const int n = static_cast<int>(e.size());
  const double inf = 1e30;
  for (int skip = 0; skip < n; ++skip) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int i = 0; i < n; ++i) {
      if (i == skip) continue;
      const int j = (i + 1) % n;
      d[i][j] = std::min(d[i][j], e[i]);
      d[j][i] = d[i][j];
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    if (e[skip] > d[skip][(skip + 1) % n] + kVerdictSlack) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "reference distributions hit the pinned values (tol 1e-9)",
            1000, [] {
    Behavior p1 = fixture_p1(), p2 = fixture_p2(), nc = fixture_nc();
    bool ok = true;
    InequalityResult r = evaluate_named(p1, "gnc:3");
    ok = ok && near(r.value, 3.0, 1e-9) && r.bound == 1.0 && r.violated;
    r = evaluate_named(p1, "specker");
    ok = ok && near(r.value, 1.5, 1e-9) && r.violated;
    r = evaluate_named(p1, "gne:3");
    ok = ok && near(r.value, 0.0, 1e-9) && !r.violated;
    r = evaluate_named(p2, "gne:3");
    ok = ok && near(r.value, 2.0, 1e-9) && near(r.bound, 0.0, 0.0) &&
         r.violated;
    r = evaluate_named(p2, "gnc:3");
    ok = ok && near(r.value, 2.0, 1e-9) && r.violated;
    r = evaluate_named(nc, "gnc:3");
    ok = ok && near(r.value, 1.0, 1e-9) && !r.violated;
    r = evaluate_named(nc, "gne:3");
    ok = ok && near(r.value, 0.0, 1e-9) && !r.violated;
    return ok;
  });

  criterion(2, "equal mixture reproduces the intermediate table (tol 1e-12)",
            0, [] {
    Behavior m = mix(fixture_p1(), fixture_nc(), 0.5);
    Behavior p2 = fixture_p2();
    for (int c = 0; c < 3; ++c)
      for (const char* k : {"++", "+-", "-+", "--"})
        if (std::abs(m.table(c).entry(k) - p2.table(c).entry(k)) > 1e-12)
          return false;
    return true;
  });

  criterion(3, "joint-distribution verdicts match exact arithmetic", 30000,
            [] {
    if (jpd_exists(fixture_p1()).exists) return false;
    if (jpd_exists(fixture_p2()).exists) return false;
    Decomposition d = decompose_noncontextual(fixture_nc());
    if (!d.ok || d.reconstruction_residual > kLpTol) return false;
    std::vector<double> w(8, 0.0);
    double total = 0;
    for (const auto& [assignment, weight] : d.weights) {
      if (assignment >= 8u || weight <= 0) return false;
      w[assignment] = weight;
      total += weight;
    }
    if (!near(total, 1.0, 1e-9)) return false;
    Behavior rebuilt = behavior_from_weights(make_cycle(3), w);
    Behavior nc = fixture_nc();
    for (int c = 0; c < 3; ++c)
      for (const char* k : {"++", "+-", "-+", "--"})
        if (std::abs(rebuilt.table(c).entry(k) - nc.table(c).entry(k)) > 1e-7)
          return false;

    // dyadic mixtures of deterministic assignments always admit a joint,
    // satisfy every named form, and agree with the exact rational oracle
    for (int n : {3, 4, 5}) {
      Scenario s = make_cycle(n);
      Rng rng(1000 + n);
      for (int it = 0; it < 200; ++it) {
        std::vector<double> weights(1u << n, 0.0);
        double sum = 0;
        for (auto& x : weights) {
          x = static_cast<double>(rng.below(64)) / 64.0;
          sum += x;
        }
        if (sum <= 0) {
          weights[0] = 1.0;
          sum = 1.0;
        }
        // dyadic renormalization: scale by a power of two only
        double scale = 1.0;
        while (sum * scale > 1.0) scale *= 0.5;
        for (auto& x : weights) x *= scale;
        weights[0] += 1.0 - sum * scale;  // exact dyadic remainder
        Behavior b = behavior_from_weights(s, weights);
        if (!jpd_exists(b).exists) return false;
        oracle::ExactCycleVerdict exact = oracle::exact_cycle_jpd(b, n);
        if (!exact.exists) return false;
        for (int rot = 0; rot < n; ++rot)
          if (correlation_ncycle(b, n, rot).violated) return false;
        if (entropic_ncycle(b, n).violated) return false;
        if (n == 3 && specker(b).violated) return false;
        if (n == 4 && ch_inequality(b).violated) return false;
        if (n == 5 && exclusive_events_inequality(b, 5).violated) return false;
      }
    }

    // and on free no-disturbance samples the LP verdict tracks the oracle
    for (int n : {3, 4}) {
      Scenario s = make_cycle(n);
      Rng rng(2000 + n);
      for (int it = 0; it < 100; ++it) {
        Behavior b = sample_no_disturbance(s, rng.next_u64());
        oracle::ExactCycleVerdict exact = oracle::exact_cycle_jpd(b, n);
        if (std::abs(static_cast<double>(exact.worst_margin)) < 1e-6)
          continue;
        if (jpd_exists(b).exists != exact.exists) return false;
      }
    }
    return true;
  });

  criterion(4, "no-disturbance maxima 3, 4, 5/2 (tol 1e-6)", 10000, [] {
    Scenario s3 = make_cycle(3), s4 = make_cycle(4), s5 = make_cycle(5);
    const double v3 =
        max_over_no_disturbance(s3, inequality_objective(s3, "gnc:3").objective)
            .value;
    const double v4 =
        max_over_no_disturbance(s4, inequality_objective(s4, "gnc:4").objective)
            .value;
    NoDisturbanceMax m5 = max_over_no_disturbance(
        s5, inequality_objective(s5, "excl:5").objective);
    return near(v3, 3.0, 1e-6) && near(v4, 4.0, 1e-6) &&
           near(m5.value, 2.5, 1e-6) && m5.witness.validate().ok();
  });

  criterion(5, "quantum ceilings via 20 seeded restarts (tol 1e-3 / 2e-3)",
            60000, [] {
    QuantumSearchResult chsh = optimize_quantum_value("gnc:4", 20, 1);
    if (!near(chsh.value, 2.0 * std::sqrt(2.0), 1e-3)) return false;
    Behavior cb =
        chsh_quantum_behavior(chsh.parameters[0], chsh.parameters[1],
                              chsh.parameters[2], chsh.parameters[3]);
    if (!cb.validate().ok() || jpd_exists(cb).exists) return false;

    QuantumSearchResult excl = optimize_quantum_value("excl:5", 20, 1);
    if (!near(excl.value, std::sqrt(5.0), 1e-3)) return false;

    QuantumSearchResult gnc5 = optimize_quantum_value("gnc:5", 20, 1);
    if (!near(gnc5.value, 4.0 * std::sqrt(5.0) - 5.0, 2e-3)) return false;
    KcbsParams kp = KcbsParams::pentagram(gnc5.parameters[2]);
    kp.state_polar = gnc5.parameters[0];
    kp.state_azimuth = gnc5.parameters[1];
    kp.orientations = gnc5.orientations;
    Behavior kb = kcbs_quantum_behavior(kp);
    if (!kb.validate().ok() || jpd_exists(kb).exists) return false;
    return true;
  });

  criterion(6, "pseudometric axioms over 10^4 random triples per kind "
               "(tol 1e-9)",
            0, [] {
    for (const char* code : {"covariance", "entropic", "kolmogorov"}) {
      AxiomScanResult r = axiom_scan(kind_from_code(code), 10000, 7);
      if (r.samples != 10000 || r.failures != 0) return false;
    }
    return true;
  });

  criterion(7, "chained and named verdicts agree on 500 samples per cycle",
            0, [] {
    for (int n : {3, 4, 5}) {
      Scenario s = make_cycle(n);
      const auto names = cycle_names(n);
      Rng rng(3000 + n);
      for (int it = 0; it < 500; ++it) {
        Behavior b = sample_no_disturbance(s, rng.next_u64());
        ChainedInequality cov =
            chained_distance_check(b, DistanceKind::make_covariance(), names);
        if (cov.satisfied !=
            !evaluate_named(b, "gnc:" + std::to_string(n)).violated)
          return false;
        ChainedInequality ent =
            chained_distance_check(b, DistanceKind::make_entropic(), names);
        if (ent.satisfied !=
            !evaluate_named(b, "gne:" + std::to_string(n)).violated)
          return false;
        ChainedInequality kol =
            chained_distance_check(b, DistanceKind::make_kolmogorov(), names);
        if (n == 3 && kol.satisfied != !specker(b).violated) return false;
        if (n == 4 && kol.satisfied != !ch_inequality(b).violated)
          return false;
        if (n == 5) {
          ChainedInequality derived = chained_distance_check(
              exclusive_event_behavior(b, 5),
              DistanceKind::make_kolmogorov(exclusive_event_selection(5)),
              std::vector<std::string>{"E1", "E2", "E3", "E4", "E5"});
          if (derived.satisfied !=
              !exclusive_events_inequality(b, 5).violated)
            return false;
        }
      }
    }
    return true;
  });

  criterion(8, "metric extension matches rotations and shortest paths "
               "(10^3 vectors per length)",
            0, [] {
    for (int len = 3; len <= 7; ++len) {
      Rng rng(4000 + len);
      for (int it = 0; it < 1000; ++it) {
        std::vector<double> e;
        for (int i = 0; i < len; ++i) e.push_back(rng.uniform(0.0, 2.0));
        if (it % 3 == 0)
          e[static_cast<size_t>(rng.below(len))] *= len;  // force failures
        bool rotations = true;
        for (int r = 0; r < len; ++r) {
          double others = 0;
          for (int i = 0; i < len; ++i)
            if (i != r) others += e[i];
          rotations = rotations && e[r] <= others + kVerdictSlack;
        }
        const bool direct = metric_extension_feasible(e);
        if (direct != rotations) return false;
        if (direct != detour_oracle(e)) return false;
      }
    }
    return true;
  });

  criterion(9, "monogamy: additive bounds 5 and 4 (tol 1e-6), sampled "
               "behaviors, trade-off curve",
            60000, [] {
    if (!near(monogamy_bound_via_lp("hybrid"), 5.0, 1e-6)) return false;
    if (!near(monogamy_bound_via_lp("tripartite"), 4.0, 1e-6)) return false;

    Scenario hybrid = make_kcbs_chsh_hybrid();
    Scenario tri = make_tripartite_chsh();
    for (const char* code : {"covariance", "entropic", "kolmogorov"}) {
      DistanceKind kind = kind_from_code(code);
      for (uint64_t seed = 0; seed < 100; ++seed) {
        Behavior hb = sample_triangle_consistent(hybrid, seed);
        if (!hb.validate().ok()) return false;
        if (!chsh_kcbs_monogamy(hb, kind).satisfied) return false;
        Behavior tb = sample_triangle_consistent(tri, seed);
        if (!tb.validate().ok()) return false;
        if (!bell_bell_monogamy(tb, kind).satisfied) return false;
      }
    }

    std::vector<double> hc =
        monogamy_tradeoff("hybrid", {3.0, 3.5, 4.0, 4.5, 5.0});
    std::vector<double> tc =
        monogamy_tradeoff("tripartite", {2.0, 2.5, 3.0, 3.5, 4.0});
    for (size_t i = 1; i < hc.size(); ++i)
      if (hc[i] > hc[i - 1] + 1e-9) return false;
    for (size_t i = 1; i < tc.size(); ++i)
      if (tc[i] > tc[i - 1] + 1e-9) return false;
    return near(hc.front(), 2.0, 1e-6) && near(hc.back(), 0.0, 1e-6) &&
           near(tc.front(), 2.0, 1e-6) && near(tc.back(), 0.0, 1e-6);
  });

  if (failures == 0) std::printf("all acceptance criteria satisfied\n");
  return failures == 0 ? 0 : 1;
}
