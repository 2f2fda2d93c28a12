#include "ctxdist/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctxdist/common.hpp"

namespace ctxdist {

using nlohmann::json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json scenario_to_json(const Scenario& s) {
  json contexts = json::array();
  for (const auto& [a, b] : s.contexts())
    contexts.push_back(json::array({s.variables()[a], s.variables()[b]}));
  json j;
  j["variables"] = s.variables();
  j["contexts"] = contexts;
  if (!s.parties().empty()) j["parties"] = s.parties();
  return j;
}

Scenario scenario_from_json(const json& j) {
  try {
    const auto vars = j.at("variables").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (size_t i = 0; i < vars.size(); ++i)
      index[vars[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> contexts;
    for (const auto& pair : j.at("contexts")) {
      const auto names = pair.get<std::vector<std::string>>();
      if (names.size() != 2)
        throw InputError("each context must name exactly two variables");
      for (const auto& n : names)
        if (!index.count(n))
          throw InputError("context references unknown variable '" + n + "'");
      contexts.emplace_back(index.at(names[0]), index.at(names[1]));
    }
    std::map<std::string, std::string> parties;
    if (j.contains("parties"))
      parties = j.at("parties").get<std::map<std::string, std::string>>();
    return Scenario(vars, std::move(contexts), std::move(parties));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed scenario JSON: ") + e.what());
  }
}

json behavior_to_json(const Behavior& b) {
  const Scenario& s = b.scenario();
  json tables = json::object();
  for (int c = 0; c < s.context_count(); ++c) {
    const JointTable& t = b.table(c);
    tables[s.context_key(c)] = {{"++", round12(t.p_pp)},
                                {"+-", round12(t.p_pm)},
                                {"-+", round12(t.p_mp)},
                                {"--", round12(t.p_mm)}};
  }
  json j;
  j["scenario"] = scenario_to_json(s);
  j["tables"] = tables;
  return j;
}

Behavior behavior_from_json(const json& j) {
  Scenario s = scenario_from_json([&]() -> const json& {
    try {
      return j.at("scenario");
    } catch (const json::exception&) {
      throw InputError("behavior JSON lacks a \"scenario\" object");
    }
  }());
  json tables;
  try {
    tables = j.at("tables");
  } catch (const json::exception&) {
    throw InputError("behavior JSON lacks a \"tables\" object");
  }
  if (!tables.is_object()) throw InputError("\"tables\" must be an object");

  std::vector<JointTable> list(s.context_count());
  std::vector<bool> seen(s.context_count(), false);
  std::map<std::string, int> by_key;
  for (int c = 0; c < s.context_count(); ++c) by_key[s.context_key(c)] = c;

  for (const auto& [key, entry] : tables.items()) {
    const auto it = by_key.find(key);
    if (it == by_key.end())
      throw InputError("table key '" + key +
                       "' does not match any context of the scenario");
    JointTable t;
    try {
      t.p_pp = entry.at("++").get<double>();
      t.p_pm = entry.at("+-").get<double>();
      t.p_mp = entry.at("-+").get<double>();
      t.p_mm = entry.at("--").get<double>();
    } catch (const json::exception&) {
      throw InputError("table '" + key +
                       "' needs numeric entries \"++\", \"+-\", \"-+\", "
                       "\"--\"");
    }
    list[it->second] = t;
    seen[it->second] = true;
  }
  for (int c = 0; c < s.context_count(); ++c)
    if (!seen[c])
      throw InputError("behavior JSON is missing the table for context " +
                       s.context_key(c));
  return Behavior(std::move(s), std::move(list));
}

Behavior load_behavior(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open behavior file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
  return behavior_from_json(j);
}

void save_behavior(const Behavior& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write behavior file '" + path + "'");
  out << behavior_to_json(b).dump(2) << '\n';
}

json objective_to_json(const Scenario& s, const LinearObjective& o) {
  json terms = json::array();
  for (const auto& t : o.table_terms) {
    if (t.context < 0 || t.context >= s.context_count())
      throw InputError("objective references context " +
                       std::to_string(t.context) + " which does not exist");
    terms.push_back({{"context", s.context_key(t.context)},
                     {"entry", t.entry},
                     {"coeff", round12(t.coeff)}});
  }
  json j;
  j["table_terms"] = terms;
  if (!o.marginal_terms.empty()) {
    json marginals = json::array();
    for (const auto& m : o.marginal_terms)
      marginals.push_back({{"variable", m.variable},
                           {"outcome", m.outcome},
                           {"coeff", round12(m.coeff)}});
    j["marginal_terms"] = marginals;
  }
  return j;
}

LinearObjective objective_from_json(const json& j, const Scenario& s) {
  std::map<std::string, int> by_key;
  for (int c = 0; c < s.context_count(); ++c) by_key[s.context_key(c)] = c;

  LinearObjective o;
  try {
    for (const auto& term : j.at("table_terms")) {
      const auto key = term.at("context").get<std::string>();
      const auto it = by_key.find(key);
      if (it == by_key.end())
        throw InputError("objective term names unknown context '" + key + "'");
      o.table_terms.push_back({it->second, term.at("entry").get<std::string>(),
                               term.at("coeff").get<double>()});
    }
    if (j.contains("marginal_terms"))
      for (const auto& term : j.at("marginal_terms"))
        o.marginal_terms.push_back({term.at("variable").get<std::string>(),
                                    term.at("outcome").get<int>(),
                                    term.at("coeff").get<double>()});
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed objective JSON: ") + e.what());
  }
  return o;
}

}  // namespace ctxdist
