#include "ctxdist/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctxdist/common.hpp"
#include "ctxdist/polytope.hpp"
#include "ctxdist/quantum.hpp"
#include "doctest.h"

using namespace ctxdist;
using nlohmann::json;

TEST_CASE("rounding to twelve significant digits") {
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
  CHECK(round12(2.0 / 3.0) == 0.666666666667);
  CHECK(round12(0.5) == 0.5);
  CHECK(round12(-1.25e-40) == -1.25e-40);
  CHECK(round12(round12(std::sqrt(2.0))) == round12(std::sqrt(2.0)));
  CHECK(std::isnan(round12(std::nan(""))));
}

TEST_CASE("scenario round trip") {
  Scenario s = make_bell_cycle(4);
  json j = scenario_to_json(s);
  CHECK(j.at("variables").size() == 4);
  CHECK(j.at("parties").at("X2") == "B");
  Scenario back = scenario_from_json(j);
  CHECK(back.variables() == s.variables());
  CHECK(back.contexts() == s.contexts());
  CHECK(back.parties() == s.parties());

  Scenario plain = make_cycle(3);
  json pj = scenario_to_json(plain);
  CHECK_FALSE(pj.contains("parties"));
  CHECK(scenario_from_json(pj).context_count() == 3);
}

TEST_CASE("behavior round trip preserves every entry") {
  Behavior q =
      chsh_quantum_behavior(0.0, M_PI / 2, 7 * M_PI / 4, 5 * M_PI / 4);
  json j = behavior_to_json(q);
  CHECK(j.at("tables").size() == 4);
  Behavior back = behavior_from_json(j);
  for (int c = 0; c < 4; ++c)
    for (const char* k : {"++", "+-", "-+", "--"})
      CHECK(std::abs(back.table(c).entry(k) - q.table(c).entry(k)) <= 1e-12);
}

TEST_CASE("saved files are stable on disk") {
  const char* path = "roundtrip_tmp.json";
  save_behavior(fixture_p2(), path);
  Behavior back = load_behavior(path);
  CHECK(back.table(0).p_pm == 0.25);   // mixed edge goes uniform
  CHECK(back.table(1).p_pp == 0.5);    // wrap edge stays correlated
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  save_behavior(back, path);
  std::ifstream in2(path);
  std::stringstream second;
  second << in2.rdbuf();
  CHECK(first.str() == second.str());
  std::remove(path);
}

TEST_CASE("malformed behavior input is rejected") {
  CHECK_THROWS_AS(load_behavior("does_not_exist.json"), InputError);

  json j = behavior_to_json(fixture_nc());
  json missing = j;
  missing.at("tables").erase("X1|X2");
  CHECK_THROWS_AS(behavior_from_json(missing), InputError);

  json unknown = j;
  unknown["tables"]["X1|X9"] = j["tables"]["X1|X2"];
  CHECK_THROWS_AS(behavior_from_json(unknown), InputError);

  json bad_entry = j;
  bad_entry["tables"]["X1|X2"].erase("+-");
  CHECK_THROWS_AS(behavior_from_json(bad_entry), InputError);

  json no_scenario = j;
  no_scenario.erase("scenario");
  CHECK_THROWS_AS(behavior_from_json(no_scenario), InputError);

  json bad_context = j;
  bad_context["scenario"]["contexts"].push_back({"X1", "Y7"});
  CHECK_THROWS_AS(behavior_from_json(bad_context), InputError);
}

TEST_CASE("objective round trip") {
  Scenario s = make_cycle(4);
  NamedObjective named = inequality_objective(s, "ch");
  json j = objective_to_json(s, named.objective);
  LinearObjective back = objective_from_json(j, s);
  Behavior b = sample_no_disturbance(s, 19);
  CHECK(back.evaluate(b) ==
        doctest::Approx(named.objective.evaluate(b)).epsilon(1e-12));

  json bad = j;
  bad["table_terms"][0]["context"] = "X1|X9";
  CHECK_THROWS_AS(objective_from_json(bad, s), InputError);
}
