#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ctxdist {

/// A measurement scenario: binary (+1/-1) variables plus the pairs that can
/// be measured jointly.  Contexts are stored canonically as index pairs
/// (lower variable index first) in lexicographic order, so tables and
/// reports are reproducible.  Immutable after construction.
class Scenario {
 public:
  Scenario(std::vector<std::string> variables,
           std::vector<std::pair<int, int>> contexts,
           std::map<std::string, std::string> parties = {});

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::pair<int, int>>& contexts() const { return contexts_; }
  const std::map<std::string, std::string>& parties() const { return parties_; }

  int variable_count() const { return static_cast<int>(variables_.size()); }
  int context_count() const { return static_cast<int>(contexts_.size()); }

  /// Index of a variable label; throws ScenarioError if unknown.
  int index_of(const std::string& name) const;

  /// Context id of the unordered pair (a, b), or -1 if not a context.
  int context_id(int a, int b) const;
  bool is_context(int a, int b) const { return context_id(a, b) >= 0; }

  /// Contexts containing variable v, in canonical order.
  std::vector<int> contexts_of(int v) const;

  /// Canonical "v|w" key of a context (v before w in variable order).
  std::string context_key(int context) const;

 private:
  std::vector<std::string> variables_;
  std::vector<std::pair<int, int>> contexts_;
  std::map<std::string, std::string> parties_;
  std::map<std::pair<int, int>, int> lookup_;
};

/// Cycle scenario X1..Xn with contexts (Xi, Xi+1 mod n).  n >= 3.
Scenario make_cycle(int n);

/// Even cycle with parties alternating Alice ("A", odd Xi) / Bob ("B", even
/// Xi) and every cross-party pair promoted to a context.  n >= 4, n even.
Scenario make_bell_cycle(int n);

/// Five cyclically compatible measurements A1..A5 for one party plus B1, B2
/// for the other; contexts are the five A-cycle edges and all ten (Ai, Bj)
/// pairs.
Scenario make_kcbs_chsh_hybrid();

/// Three parties with two measurements each (A1,A2,B1,B2,C1,C2); contexts
/// are the twelve cross-party pairs.
Scenario make_tripartite_chsh();

/// All unordered variable triples whose three pairs are all contexts, in
/// lexicographic index order.
std::vector<std::array<int, 3>> triangles(const Scenario& s);

}  // namespace ctxdist
