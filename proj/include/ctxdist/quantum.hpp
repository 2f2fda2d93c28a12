#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctxdist/behavior.hpp"
#include "ctxdist/parallel.hpp"

namespace ctxdist {

using StateVector = Eigen::VectorXcd;

// ±1-valued observable stored with its +1 eigenprojector.
struct Observable {
  Eigen::MatrixXcd matrix;
  Eigen::MatrixXcd plus_projector;

  // Checks hermiticity and M² = I within 1e-12 and derives (I+M)/2.
  static Observable from_matrix(const Eigen::MatrixXcd& m);
};

struct QuantumDiagnostics {
  double max_clamp = 0;          // largest negative/overshoot clamped away
  double max_commutator = 0;     // worst ‖[X_i, X_j]‖ over used pairs
  double closed_form_gap = 0;    // CHSH only: matrix vs -cos(a-b) correlators
};

// Singlet-state 4-cycle behavior: X1=A(a1), X2=B(b1), X3=A(a2), X4=B(b2),
// observables cos·σz + sin·σx per side. Correlators equal -cos(a-b).
Behavior chsh_quantum_behavior(double a1, double a2, double b1, double b2,
                               QuantumDiagnostics* diag = nullptr);

struct KcbsParams {
  double polar_angle;                  // θ of the five rays
  std::array<double, 5> phase;         // azimuths φ_i
  double state_polar = 0;              // qutrit state direction, default axis
  double state_azimuth = 0;
  std::array<int, 5> orientations = {1, 1, 1, 1, 1};  // sign of each X_i

  // Pentagram point: cos²θ = cos(π/5)/(1+cos(π/5)), φ_i = 4πi/5 + phase0.
  static KcbsParams pentagram(double phase0 = 0);
};

// Qutrit 5-cycle behavior from rays v_i = (cosθ, sinθ cosφ_i, sinθ sinφ_i),
// X_i = s_i (I - 2|v_i⟩⟨v_i|). Consecutive rays must be orthogonal within
// 1e-9, otherwise IncompatibilityError.
Behavior kcbs_quantum_behavior(const KcbsParams& params,
                               QuantumDiagnostics* diag = nullptr);

struct QuantumSearchResult {
  std::string target;
  double value = 0;
  std::vector<double> parameters;  // angle list, family-specific
  std::array<int, 5> orientations = {1, 1, 1, 1, 1};  // KCBS targets
  int best_restart = 0;
};

// Multistart Nelder-Mead over the target's parameter family.
// Targets: "gnc:4" (CHSH angles), "excl:5" (KCBS state/phase),
// "gnc:5" (KCBS state/phase with restart-indexed orientation patterns).
// Deterministic in seed; ties broken by lowest restart index.
QuantumSearchResult optimize_quantum_value(const std::string& target,
                                           int restarts, uint64_t seed,
                                           Exec mode = Exec::serial);

}  // namespace ctxdist
