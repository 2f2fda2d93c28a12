#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "ctxdist/behavior.hpp"
#include "ctxdist/parallel.hpp"

namespace ctxdist {

struct DistanceKind {
  enum class Variant { covariance, entropic, kolmogorov };

  Variant variant = Variant::covariance;
  // Kolmogorov only: which outcome counts as the event, per variable.
  // Variables not listed default to +1.
  std::map<std::string, int> event_selection;

  static DistanceKind make_covariance() { return {Variant::covariance, {}}; }
  static DistanceKind make_entropic() { return {Variant::entropic, {}}; }
  static DistanceKind make_kolmogorov(std::map<std::string, int> sel = {}) {
    return {Variant::kolmogorov, std::move(sel)};
  }

  int selection_for(const std::string& variable) const;
  std::string code() const;  // "covariance" | "entropic" | "kolmogorov"
};

DistanceKind kind_from_code(const std::string& code);

double covariance_distance(const JointTable& t);
double entropic_distance(const JointTable& t);
double kolmogorov_distance(const JointTable& t, int x0, int y0);

// Distance on the (v,w) table of a behavior, honoring the kind's
// event selections. Throws ContextError for non-context pairs.
double edge_distance(const Behavior& b, const DistanceKind& kind,
                     const std::string& v, const std::string& w);

// Full joint over three binary variables; index bit 0 ↔ x, bit 1 ↔ y,
// bit 2 ↔ z, bit value 0 meaning outcome +1.
struct TripleJoint {
  std::array<double, 8> p{};

  double sum() const;
  JointTable marginal_xy() const;
  JointTable marginal_yz() const;
  JointTable marginal_xz() const;
};

TripleJoint random_triple_joint(class Rng& rng);

struct AxiomReport {
  bool nonnegative = false;
  bool symmetric = false;
  bool triangle = false;
  // Most violated triangle margin d(a,c) - d(a,b) - d(b,c); ≤ 0 when clean.
  double worst_triangle_margin = 0;
  bool ok() const { return nonnegative && symmetric && triangle; }
};

AxiomReport check_axioms(const DistanceKind& kind, const TripleJoint& j);

struct AxiomScanResult {
  long long samples = 0;
  long long failures = 0;
  double worst_triangle_margin = 0;
};

// Randomized axiom sweep; deterministic in seed for both Exec modes.
// Kolmogorov scans also randomize the per-variable event selections.
AxiomScanResult axiom_scan(const DistanceKind& kind, long long samples,
                           uint64_t seed, Exec mode = Exec::serial);

}  // namespace ctxdist
