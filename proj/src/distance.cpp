#include "ctxdist/distance.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ctxdist/common.hpp"
#include "ctxdist/rng.hpp"

namespace ctxdist {

int DistanceKind::selection_for(const std::string& variable) const {
  auto it = event_selection.find(variable);
  return it == event_selection.end() ? 1 : it->second;
}

std::string DistanceKind::code() const {
  switch (variant) {
    case Variant::covariance: return "covariance";
    case Variant::entropic: return "entropic";
    case Variant::kolmogorov: return "kolmogorov";
  }
  return "?";
}

DistanceKind kind_from_code(const std::string& code) {
  if (code == "covariance") return DistanceKind::make_covariance();
  if (code == "entropic") return DistanceKind::make_entropic();
  if (code == "kolmogorov") return DistanceKind::make_kolmogorov();
  throw InputError("unknown distance kind '" + code +
                   "' (use covariance, entropic, or kolmogorov)");
}

double covariance_distance(const JointTable& t) {
  return 1.0 - t.correlator();
}

namespace {

double plogp(double p) {
  if (p < kEntropyZero) return 0.0;  // 0·log 0 = 0, and clamp noise
  return p * std::log2(p);
}

double entropy2(double p) { return -plogp(p) - plogp(1.0 - p); }

}  // namespace

double entropic_distance(const JointTable& t) {
  double joint = -(plogp(t.p_pp) + plogp(t.p_pm) + plogp(t.p_mp) +
                   plogp(t.p_mm));
  // E = H(X|Y) + H(Y|X) = 2H(XY) - H(X) - H(Y)
  return 2.0 * joint - entropy2(t.first_plus()) - entropy2(t.second_plus());
}

double kolmogorov_distance(const JointTable& t, int x0, int y0) {
  double px = x0 == 1 ? t.first_plus() : 1.0 - t.first_plus();
  double py = y0 == 1 ? t.second_plus() : 1.0 - t.second_plus();
  return px + py - 2.0 * t.prob(x0, y0);
}

double edge_distance(const Behavior& b, const DistanceKind& kind,
                     const std::string& v, const std::string& w) {
  JointTable t = b.table(v, w);
  switch (kind.variant) {
    case DistanceKind::Variant::covariance: return covariance_distance(t);
    case DistanceKind::Variant::entropic: return entropic_distance(t);
    case DistanceKind::Variant::kolmogorov:
      return kolmogorov_distance(t, kind.selection_for(v),
                                 kind.selection_for(w));
  }
  return 0;
}

double TripleJoint::sum() const {
  double s = 0;
  for (double x : p) s += x;
  return s;
}

namespace {

// index bit 0 ↔ x, bit 1 ↔ y, bit 2 ↔ z; bit value 0 means outcome +1
JointTable pair_marginal(const TripleJoint& j, int bit_a, int bit_b) {
  JointTable t;
  for (int m = 0; m < 8; ++m) {
    int a = (m >> bit_a) & 1, b = (m >> bit_b) & 1;
    double& cell = a == 0 ? (b == 0 ? t.p_pp : t.p_pm)
                          : (b == 0 ? t.p_mp : t.p_mm);
    cell += j.p[m];
  }
  return t;
}

}  // namespace

JointTable TripleJoint::marginal_xy() const { return pair_marginal(*this, 0, 1); }
JointTable TripleJoint::marginal_yz() const { return pair_marginal(*this, 1, 2); }
JointTable TripleJoint::marginal_xz() const { return pair_marginal(*this, 0, 2); }

TripleJoint random_triple_joint(Rng& rng) {
  TripleJoint j;
  double total = 0;
  for (auto& cell : j.p) {
    cell = -std::log(1.0 - rng.uniform());
    total += cell;
  }
  for (auto& cell : j.p) cell /= total;
  return j;
}

AxiomReport check_axioms(const DistanceKind& kind, const TripleJoint& j) {
  // Triple variables are addressed as X1, X2, X3 in the event selection.
  JointTable txy = j.marginal_xy(), tyz = j.marginal_yz(),
             txz = j.marginal_xz();
  int s1 = kind.selection_for("X1"), s2 = kind.selection_for("X2"),
      s3 = kind.selection_for("X3");

  auto dist = [&](const JointTable& t, int sa, int sb) {
    switch (kind.variant) {
      case DistanceKind::Variant::covariance: return covariance_distance(t);
      case DistanceKind::Variant::entropic: return entropic_distance(t);
      case DistanceKind::Variant::kolmogorov:
        return kolmogorov_distance(t, sa, sb);
    }
    return 0.0;
  };

  double dxy = dist(txy, s1, s2), dyz = dist(tyz, s2, s3),
         dxz = dist(txz, s1, s3);

  AxiomReport report;
  report.nonnegative = dxy >= -kVerdictSlack && dyz >= -kVerdictSlack &&
                       dxz >= -kVerdictSlack;
  report.symmetric =
      std::abs(dxy - dist(txy.transposed(), s2, s1)) <= kVerdictSlack &&
      std::abs(dyz - dist(tyz.transposed(), s3, s2)) <= kVerdictSlack &&
      std::abs(dxz - dist(txz.transposed(), s3, s1)) <= kVerdictSlack;
  double m1 = dxz - dxy - dyz;
  double m2 = dxy - dxz - dyz;
  double m3 = dyz - dxy - dxz;
  report.worst_triangle_margin = std::max({m1, m2, m3});
  report.triangle = report.worst_triangle_margin <= kVerdictSlack;
  return report;
}

AxiomScanResult axiom_scan(const DistanceKind& kind, long long samples,
                           uint64_t seed, Exec mode) {
  std::vector<char> failed(samples, 0);
  std::vector<double> margin(samples, 0.0);
  Rng base(seed);
  const bool wants_selections =
      kind.variant == DistanceKind::Variant::kolmogorov;

  for_range(mode, samples, [&](std::ptrdiff_t i) {
    Rng rng = base.fork(static_cast<uint64_t>(i));
    TripleJoint j = random_triple_joint(rng);
    DistanceKind local = kind;
    if (wants_selections)
      for (const char* name : {"X1", "X2", "X3"})
        local.event_selection[name] = rng.coin() ? 1 : -1;
    AxiomReport r = check_axioms(local, j);
    failed[i] = r.ok() ? 0 : 1;
    margin[i] = r.worst_triangle_margin;
  });

  AxiomScanResult out;
  out.samples = samples;
  out.worst_triangle_margin = samples > 0 ? margin[0] : 0.0;
  for (long long i = 0; i < samples; ++i) {
    out.failures += failed[i];
    out.worst_triangle_margin = std::max(out.worst_triangle_margin, margin[i]);
  }
  return out;
}

}  // namespace ctxdist
