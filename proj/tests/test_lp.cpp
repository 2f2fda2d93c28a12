#include "ctxdist/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ctxdist/common.hpp"
#include "ctxdist/rng.hpp"
#include "doctest.h"

using namespace ctxdist;

TEST_CASE("simple bounded minimum") {
  LinearProgram p;
  p.c = {-1.0, -1.0};  // maximize x1 + x2
  p.a_ub = {{1.0, 2.0}, {3.0, 1.0}};
  p.b_ub = {4.0, 6.0};
  LpOutcome r = lp_solve(p);
  REQUIRE(r.status == LpStatus::optimal);
  // optimum at the crossing (8/5, 6/5)
  CHECK(r.optimum == doctest::Approx(-2.8));
  CHECK(r.solution[0] == doctest::Approx(1.6));
  CHECK(r.solution[1] == doctest::Approx(1.2));
}

TEST_CASE("equality rows and negative lower bounds") {
  LinearProgram p;
  p.c = {1.0, 0.0};
  p.a_eq = {{1.0, 1.0}};
  p.b_eq = {0.0};
  p.lower = {-1.0, -5.0};
  LpOutcome r = lp_solve(p);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.optimum == doctest::Approx(-1.0));
  CHECK(r.solution[0] == doctest::Approx(-1.0));
  CHECK(r.solution[1] == doctest::Approx(1.0));
}

TEST_CASE("degenerate pivoting terminates") {
  // classic cycling construction for naive pivot rules
  LinearProgram p;
  p.c = {-0.75, 150.0, -0.02, 6.0};
  p.a_ub = {{0.25, -60.0, -1.0 / 25.0, 9.0},
            {0.5, -90.0, -1.0 / 50.0, 3.0},
            {0.0, 0.0, 1.0, 0.0}};
  p.b_ub = {0.0, 0.0, 1.0};
  LpOutcome r = lp_solve(p);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.optimum == doctest::Approx(-0.05));
}

TEST_CASE("infeasible system yields a checked certificate") {
  LinearProgram p;
  p.c = {0.0, 0.0};
  p.a_eq = {{1.0, 1.0}};
  p.b_eq = {2.0};
  p.a_ub = {{1.0, 0.0}, {0.0, 1.0}};
  p.b_ub = {0.5, 0.5};
  LpOutcome r = lp_solve(p);
  REQUIRE(r.status == LpStatus::infeasible);
  REQUIRE(r.certificate.size() == 3);
  const std::vector<double>& y = r.certificate;
  // y*b must be positive while y*A stays nonpositive, with ub rows
  // only contributing nonpositive multipliers
  const double yb = y[0] * 2.0 + y[1] * 0.5 + y[2] * 0.5;
  CHECK(yb > kLpTol);
  CHECK(y[0] * 1.0 + y[1] * 1.0 + y[2] * 0.0 <= kLpTol);
  CHECK(y[0] * 1.0 + y[1] * 0.0 + y[2] * 1.0 <= kLpTol);
  CHECK(y[1] <= kLpTol);
  CHECK(y[2] <= kLpTol);
}

TEST_CASE("unbounded detection") {
  LinearProgram p;
  p.c = {-1.0, 0.0};
  p.a_ub = {{-1.0, 1.0}};
  p.b_ub = {1.0};
  CHECK(lp_solve(p).status == LpStatus::unbounded);

  LinearProgram q;  // no rows at all
  q.c = {-1.0};
  CHECK(lp_solve(q).status == LpStatus::unbounded);
}

TEST_CASE("iteration cap raises a solver error") {
  LinearProgram p;
  p.c = {-1.0, -1.0, -1.0};
  p.a_ub = {{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}};
  p.b_ub = {1.0, 1.0, 1.0};
  LpOptions o;
  o.max_iterations = 1;
  CHECK_THROWS_AS(lp_solve(p, o), SolverError);
}

TEST_CASE("input validation") {
  LinearProgram p;
  p.c = {1.0, std::numeric_limits<double>::quiet_NaN()};
  CHECK_THROWS_AS(lp_solve(p), InputError);

  LinearProgram q;
  q.c = {1.0, 1.0};
  q.a_eq = {{1.0}};  // wrong width
  q.b_eq = {1.0};
  CHECK_THROWS_AS(lp_solve(q), InputError);

  LinearProgram r;
  r.c = {1.0};
  r.a_ub = {{1.0}};
  r.b_ub = {};  // wrong height
  CHECK_THROWS_AS(lp_solve(r), InputError);
}

TEST_CASE("serial and parallel runs agree bit for bit") {
  Rng rng(31);
  for (int it = 0; it < 20; ++it) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const int m = 2 + static_cast<int>(rng.below(4));
    LinearProgram p;
    for (int j = 0; j < n; ++j) p.c.push_back(rng.uniform(-1.0, 1.0));
    for (int i = 0; i < m; ++i) {
      std::vector<double> row;
      for (int j = 0; j < n; ++j) row.push_back(rng.uniform(0.0, 1.0));
      p.a_ub.push_back(row);
      p.b_ub.push_back(rng.uniform(0.5, 2.0));
    }
    LpOptions serial, parallel;
    serial.mode = Exec::serial;
    parallel.mode = Exec::parallel;
    LpOutcome a = lp_solve(p, serial);
    LpOutcome b = lp_solve(p, parallel);
    REQUIRE(a.status == b.status);
    if (a.status == LpStatus::optimal) {
      CHECK(a.optimum == b.optimum);
      for (size_t j = 0; j < a.solution.size(); ++j)
        CHECK(a.solution[j] == b.solution[j]);
    }
  }
}
