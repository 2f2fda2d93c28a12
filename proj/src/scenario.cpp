#include "ctxdist/scenario.hpp"

#include <algorithm>
#include <set>

#include "ctxdist/common.hpp"

namespace ctxdist {

Scenario::Scenario(std::vector<std::string> variables,
                   std::vector<std::pair<int, int>> contexts,
                   std::map<std::string, std::string> parties)
    : variables_(std::move(variables)), parties_(std::move(parties)) {
  const int n = static_cast<int>(variables_.size());
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (static_cast<int>(seen.size()) != n)
    throw ScenarioError("duplicate variable labels");

  for (auto [a, b] : contexts) {
    if (a == b) throw ScenarioError("context pairs a variable with itself");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ScenarioError("context references an undeclared variable");
    if (a > b) std::swap(a, b);
    contexts_.push_back({a, b});
  }
  std::sort(contexts_.begin(), contexts_.end());
  if (std::adjacent_find(contexts_.begin(), contexts_.end()) !=
      contexts_.end())
    throw ScenarioError("duplicate context");
  for (const auto& [name, party] : parties_) {
    (void)party;
    if (!seen.count(name))
      throw ScenarioError("party label for undeclared variable " + name);
  }
  for (int c = 0; c < static_cast<int>(contexts_.size()); ++c)
    lookup_[contexts_[c]] = c;
}

int Scenario::index_of(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(variables_.size()); ++i)
    if (variables_[i] == name) return i;
  throw ScenarioError("unknown variable " + name);
}

int Scenario::context_id(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = lookup_.find({a, b});
  return it == lookup_.end() ? -1 : it->second;
}

std::vector<int> Scenario::contexts_of(int v) const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(contexts_.size()); ++c)
    if (contexts_[c].first == v || contexts_[c].second == v) out.push_back(c);
  return out;
}

std::string Scenario::context_key(int context) const {
  const auto& [a, b] = contexts_.at(context);
  return variables_[a] + "|" + variables_[b];
}

Scenario make_cycle(int n) {
  if (n < 3) throw ScenarioError("cycle scenario needs at least 3 variables");
  std::vector<std::string> vars;
  std::vector<std::pair<int, int>> ctx;
  for (int i = 0; i < n; ++i) vars.push_back("X" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) ctx.push_back({i, (i + 1) % n});
  return Scenario(std::move(vars), std::move(ctx));
}

Scenario make_bell_cycle(int n) {
  if (n < 4 || n % 2 != 0)
    throw ScenarioError("Bell cycle needs an even number of variables >= 4");
  std::vector<std::string> vars;
  std::map<std::string, std::string> parties;
  for (int i = 0; i < n; ++i) {
    vars.push_back("X" + std::to_string(i + 1));
    parties[vars.back()] = (i % 2 == 0) ? "A" : "B";
  }
  // Spacelike separation makes every Alice/Bob pair jointly measurable,
  // not just the cycle edges.
  std::vector<std::pair<int, int>> ctx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (i % 2 != j % 2) ctx.push_back({i, j});
  return Scenario(std::move(vars), std::move(ctx), std::move(parties));
}

Scenario make_kcbs_chsh_hybrid() {
  std::vector<std::string> vars = {"A1", "A2", "A3", "A4", "A5", "B1", "B2"};
  std::map<std::string, std::string> parties;
  for (int i = 0; i < 5; ++i) parties[vars[i]] = "A";
  parties["B1"] = parties["B2"] = "B";
  std::vector<std::pair<int, int>> ctx;
  for (int i = 0; i < 5; ++i) ctx.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i)
    for (int j = 5; j < 7; ++j) ctx.push_back({i, j});
  return Scenario(std::move(vars), std::move(ctx), std::move(parties));
}

Scenario make_tripartite_chsh() {
  std::vector<std::string> vars = {"A1", "A2", "B1", "B2", "C1", "C2"};
  std::map<std::string, std::string> parties;
  for (const auto& v : vars) parties[v] = v.substr(0, 1);
  std::vector<std::pair<int, int>> ctx;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (vars[i][0] != vars[j][0]) ctx.push_back({i, j});
  return Scenario(std::move(vars), std::move(ctx), std::move(parties));
}

std::vector<std::array<int, 3>> triangles(const Scenario& s) {
  std::vector<std::array<int, 3>> out;
  const int n = s.variable_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!s.is_context(i, j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (s.is_context(j, k) && s.is_context(i, k)) out.push_back({i, j, k});
    }
  return out;
}

}  // namespace ctxdist
