// Serial-versus-parallel timing for the heavy kernels.  Every kernel is
// bit-deterministic in both modes, so the runs double as a consistency
// check: any drift between modes is reported as a mismatch.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ctxdist/behavior.hpp"
#include "ctxdist/distance.hpp"
#include "ctxdist/parallel.hpp"
#include "ctxdist/polytope.hpp"
#include "ctxdist/quantum.hpp"

using namespace ctxdist;

namespace {

double time_ms(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void row(const std::string& label, double serial_ms, double parallel_ms,
         bool match) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", label.c_str(),
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              match ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  std::printf("parallel kernels: %s, %d workers\n",
              openmp_enabled() ? "openmp" : "disabled", worker_count());
  std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

  {
    // joint-distribution program over 2^12 assignment weights
    Scenario s = make_cycle(12);
    Behavior b = sample_no_disturbance(s, 5);
    JpdVerdict vs, vp;
    LpOptions serial, parallel;
    serial.mode = Exec::serial;
    parallel.mode = Exec::parallel;
    const double ts = time_ms([&] { vs = jpd_exists(b, serial); });
    const double tp = time_ms([&] { vp = jpd_exists(b, parallel); });
    row("joint-distribution solve (n=12)", ts, tp,
        vs.exists == vp.exists && vs.weights == vp.weights);
  }

  {
    AxiomScanResult rs, rp;
    const DistanceKind kind = DistanceKind::make_kolmogorov();
    const double ts =
        time_ms([&] { rs = axiom_scan(kind, 2000000, 9, Exec::serial); });
    const double tp =
        time_ms([&] { rp = axiom_scan(kind, 2000000, 9, Exec::parallel); });
    row("axiom sweep (2*10^6 triples)", ts, tp,
        rs.failures == rp.failures &&
            rs.worst_triangle_margin == rp.worst_triangle_margin);
  }

  {
    Scenario s = make_kcbs_chsh_hybrid();
    std::vector<Behavior> bs, bp;
    const double ts = time_ms(
        [&] { bs = sample_no_disturbance_batch(s, 400, 31, Exec::serial); });
    const double tp = time_ms(
        [&] { bp = sample_no_disturbance_batch(s, 400, 31, Exec::parallel); });
    bool match = bs.size() == bp.size();
    for (size_t i = 0; match && i < bs.size(); ++i)
      for (int c = 0; match && c < s.context_count(); ++c)
        match = bs[i].table(c).p_pp == bp[i].table(c).p_pp &&
                bs[i].table(c).p_mm == bp[i].table(c).p_mm;
    row("behavior batch (400 draws)", ts, tp, match);
  }

  {
    QuantumSearchResult qs, qp;
    const double ts = time_ms(
        [&] { qs = optimize_quantum_value("gnc:5", 64, 2, Exec::serial); });
    const double tp = time_ms(
        [&] { qp = optimize_quantum_value("gnc:5", 64, 2, Exec::parallel); });
    row("quantum multistart (64 restarts)", ts, tp,
        qs.value == qp.value && qs.best_restart == qp.best_restart);
  }

  return 0;
}
