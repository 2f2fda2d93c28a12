#include "ctxdist/scenario.hpp"

#include <set>

#include "ctxdist/common.hpp"
#include "doctest.h"

using namespace ctxdist;

TEST_CASE("cycle scenario wiring") {
  Scenario s = make_cycle(3);
  CHECK(s.variable_count() == 3);
  CHECK(s.context_count() == 3);
  CHECK(s.variables() == std::vector<std::string>{"X1", "X2", "X3"});
  CHECK(s.is_context(0, 1));
  CHECK(s.is_context(1, 2));
  CHECK(s.is_context(0, 2));  // wrap-around edge, stored as (0,2)

  Scenario s5 = make_cycle(5);
  CHECK(s5.context_count() == 5);
  int non_contexts = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!s5.is_context(i, j)) ++non_contexts;
  CHECK(non_contexts == 5);

  CHECK_THROWS_AS(make_cycle(2), ScenarioError);
}

TEST_CASE("context ids and keys") {
  Scenario s = make_cycle(4);
  CHECK(s.context_id(1, 0) == s.context_id(0, 1));
  CHECK(s.context_id(0, 2) == -1);
  CHECK(s.context_key(s.context_id(0, 1)) == "X1|X2");
  CHECK(s.index_of("X3") == 2);
  CHECK_THROWS_AS(s.index_of("Y1"), ScenarioError);
  auto around_x2 = s.contexts_of(1);
  CHECK(around_x2.size() == 2);
}

TEST_CASE("scenario rejects malformed input") {
  CHECK_THROWS_AS(Scenario({"A", "A"}, {{0, 1}}), ScenarioError);
  CHECK_THROWS_AS(Scenario({"A", "B"}, {{0, 0}}), ScenarioError);
  CHECK_THROWS_AS(Scenario({"A", "B"}, {{0, 2}}), ScenarioError);
  CHECK_THROWS_AS(Scenario({"A", "B"}, {{0, 1}, {1, 0}}), ScenarioError);
}

TEST_CASE("Bell cycle scenarios") {
  Scenario s = make_bell_cycle(4);
  CHECK(s.variable_count() == 4);
  CHECK(s.context_count() == 4);  // every cross-party pair
  CHECK(s.parties().at("X1") == "A");
  CHECK(s.parties().at("X2") == "B");
  CHECK(s.is_context(0, 3));
  CHECK_FALSE(s.is_context(0, 2));  // same party

  CHECK(make_bell_cycle(6).context_count() == 9);
  CHECK_THROWS_AS(make_bell_cycle(5), ScenarioError);
  CHECK_THROWS_AS(make_bell_cycle(2), ScenarioError);
}

TEST_CASE("hybrid pentagon-plus-pair scenario") {
  Scenario s = make_kcbs_chsh_hybrid();
  CHECK(s.variable_count() == 7);
  CHECK(s.context_count() == 15);
  CHECK(s.is_context(s.index_of("A1"), s.index_of("A2")));
  CHECK_FALSE(s.is_context(s.index_of("A1"), s.index_of("A3")));
  CHECK(s.is_context(s.index_of("A3"), s.index_of("B2")));
  CHECK_FALSE(s.is_context(s.index_of("B1"), s.index_of("B2")));
}

TEST_CASE("tripartite scenario") {
  Scenario s = make_tripartite_chsh();
  CHECK(s.variable_count() == 6);
  CHECK(s.context_count() == 12);
  CHECK(s.is_context(s.index_of("A1"), s.index_of("B2")));
  CHECK(s.is_context(s.index_of("B1"), s.index_of("C2")));
  CHECK_FALSE(s.is_context(s.index_of("A1"), s.index_of("A2")));
}

TEST_CASE("triangle listing") {
  auto t3 = triangles(make_cycle(3));
  REQUIRE(t3.size() == 1);
  CHECK(t3[0] == std::array<int, 3>{0, 1, 2});

  CHECK(triangles(make_cycle(5)).empty());
  CHECK(triangles(make_bell_cycle(4)).empty());

  Scenario h = make_kcbs_chsh_hybrid();
  auto th = triangles(h);
  CHECK(th.size() == 10);
  std::set<std::array<int, 3>> set(th.begin(), th.end());
  CHECK(set.count({h.index_of("A1"), h.index_of("A2"), h.index_of("B1")}));

  // Brute-force cross-check on the tripartite scenario: a triple of
  // pairwise-compatible variables must span three distinct parties there.
  Scenario t = make_tripartite_chsh();
  auto tt = triangles(t);
  std::vector<std::array<int, 3>> brute;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        if (t.is_context(i, j) && t.is_context(j, k) && t.is_context(i, k))
          brute.push_back({i, j, k});
  CHECK(tt == brute);
  CHECK(tt.size() == 8);
}

TEST_CASE("triangle-free counting in cycles") {
  for (int n = 4; n <= 8; ++n) {
    Scenario s = make_cycle(n);
    CHECK(triangles(s).empty());
    int non_contexts = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!s.is_context(i, j)) ++non_contexts;
    CHECK(non_contexts == n * (n - 1) / 2 - n);
  }
}
