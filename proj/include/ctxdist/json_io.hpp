#pragma once

#include <string>

#include "ctxdist/behavior.hpp"
#include "ctxdist/polytope.hpp"
#include "json.hpp"

namespace ctxdist {

// Floats in reports are rounded to 12 significant digits so identical runs
// serialize identically.
double round12(double x);

nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const nlohmann::json& j);

Behavior load_behavior(const std::string& path);
void save_behavior(const Behavior& b, const std::string& path);

nlohmann::json objective_to_json(const Scenario& s, const LinearObjective& o);
LinearObjective objective_from_json(const nlohmann::json& j,
                                    const Scenario& s);

}  // namespace ctxdist
