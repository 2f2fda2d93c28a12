#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctxdist/behavior.hpp"
#include "ctxdist/distance.hpp"
#include "ctxdist/lp.hpp"

namespace ctxdist {

struct MonogamyResult {
  double lhs_value = 0;
  double rhs_value = 0;
  // Margins (lhs - rhs) of the two constituent chained inequalities;
  // their sum equals lhs_value - rhs_value.
  double first_expression = 0;
  double second_expression = 0;
  bool satisfied = true;
};

// d(A1,A5) + d(A1,B1) ≤ d(A1,A2)+d(A2,A3)+d(A3,A4)+d(A4,A5)
//                      + d(A1,B2)+d(B2,A3)+d(A3,B1)
// on make_kcbs_chsh_hybrid(). Constituents: the five-cycle path check and
// the CHSH-style path check.
MonogamyResult chsh_kcbs_monogamy(const Behavior& b, const DistanceKind& kind);

// d(A1,B1) + d(A1,C1) ≤ d(A1,B2)+d(B2,A2)+d(A2,B1)
//                      + d(A1,C2)+d(C2,A2)+d(A2,C1)
// on make_tripartite_chsh().
MonogamyResult bell_bell_monogamy(const Behavior& b, const DistanceKind& kind);

// Maximum of the covariance-rearranged constituent sum (KCBS-form + CHSH-form
// for "hybrid"; CHSH(A,B) + CHSH(A,C) for "tripartite") over distributions
// that assign a genuine joint to every triangle of the scenario, with shared
// pair marginals. Only the covariance kind is linear; other kinds throw
// UnsupportedError.
double monogamy_bound_via_lp(const std::string& which,
                             const DistanceKind& kind =
                                 DistanceKind::make_covariance(),
                             const LpOptions& options = {});

// Trade-off curve: pin the first rearranged expression to each value and
// maximize the second over the same triangle-joint polytope.
std::vector<double> monogamy_tradeoff(const std::string& which,
                                      const std::vector<double>& pins,
                                      const LpOptions& options = {});

// Seeded draw from the triangle-joint polytope of a scenario whose contexts
// are all covered by triangles (hybrid, tripartite); the result is the
// pairwise projection, which always passes validate().
Behavior sample_triangle_consistent(const Scenario& s, uint64_t seed);

}  // namespace ctxdist
