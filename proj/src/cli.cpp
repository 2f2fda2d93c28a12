#include "ctxdist/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctxdist/behavior.hpp"
#include "ctxdist/common.hpp"
#include "ctxdist/distance.hpp"
#include "ctxdist/inequality.hpp"
#include "ctxdist/json_io.hpp"
#include "ctxdist/monogamy.hpp"
#include "ctxdist/polytope.hpp"
#include "ctxdist/quantum.hpp"

namespace ctxdist {
namespace {

using nlohmann::json;

json result_to_json(const InequalityResult& r) {
  json terms = json::array();
  for (const auto& [label, v] : r.witness_terms)
    terms.push_back({{"term", label}, {"value", round12(v)}});
  json j;
  j["name"] = r.name;
  j["value"] = round12(r.value);
  j["bound"] = round12(r.bound);
  j["violated"] = r.violated;
  j["tight"] = r.tight;
  j["witness_terms"] = terms;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Scenario scenario_by_name(const std::string& name) {
  if (name == "hybrid") return make_kcbs_chsh_hybrid();
  if (name == "tripartite") return make_tripartite_chsh();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const std::string tail = name.substr(colon + 1);
    char* end = nullptr;
    const long n = std::strtol(tail.c_str(), &end, 10);
    if (end && *end == '\0' && n > 0) {
      if (head == "cycle") return make_cycle(static_cast<int>(n));
      if (head == "bell") return make_bell_cycle(static_cast<int>(n));
    }
  }
  throw InputError("unknown scenario '" + name +
                   "' (use cycle:N, bell:N, hybrid, or tripartite)");
}

// Expands "chained:N" with --kind into "chained:<kind>:N"; rejects
// contradictory or dangling --kind.
std::string effective_inequality(const std::string& name,
                                 const std::string& kind) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  for (std::string piece; std::getline(ss, piece, ':');)
    parts.push_back(piece);
  if (!parts.empty() && parts[0] == "chained") {
    if (parts.size() == 2) {
      if (kind.empty())
        throw InputError("chained:<N> needs --kind "
                         "(covariance, entropic, or kolmogorov)");
      return "chained:" + kind + ":" + parts[1];
    }
    if (parts.size() == 3 && !kind.empty() && kind != parts[1])
      throw InputError("--kind " + kind + " contradicts inequality '" + name +
                       "'");
    return name;
  }
  if (!kind.empty())
    throw InputError("--kind only applies to chained:<N> evaluations");
  return name;
}

void csv_escape(std::ostream& out, const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) {
    out << cell;
    return;
  }
  out << '"';
  for (char c : cell) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit_report(const json& report, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << '\n';
    return;
  }
  // CSV: metadata as comment lines, then one row per result item.
  out << "# command: " << report.at("command").get<std::string>() << '\n';
  out << "# version: " << report.at("version").get<std::string>() << '\n';
  out << "# seed: " << report.at("seed").dump() << '\n';
  const json& items = report.at("results");
  if (!items.empty()) {
    bool first = true;
    for (const auto& [key, value] : items.front().items()) {
      (void)value;
      if (!first) out << ',';
      csv_escape(out, key);
      first = false;
    }
    out << '\n';
    for (const auto& item : items) {
      first = true;
      for (const auto& [key, value] : item.items()) {
        (void)key;
        if (!first) out << ',';
        csv_escape(out, csv_cell(value));
        first = false;
      }
      out << '\n';
    }
  }
  out << "# duration_ms: " << report.at("duration_ms").dump() << '\n';
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "ctxdist";
  for (const auto& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"information-distance toolkit for pairwise measurement "
               "scenarios"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  bool assert_satisfied = false;
  app.add_flag("--assert-satisfied", assert_satisfied,
               "exit 1 when any evaluated relation is violated");
  uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for all randomized work");
  bool parallel = false;
  app.add_flag("--parallel", parallel, "run solver/scan kernels in parallel");

  std::string behavior_path, inequality_name, kind_code, scenario_name,
      objective_arg, target, relation, emit_dir;
  int restarts = 20;
  long long samples = 10000;

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate an inequality");
  c_eval->add_option("--behavior", behavior_path, "behavior JSON file")
      ->required();
  c_eval->add_option("--inequality", inequality_name, "inequality name")
      ->required();
  c_eval->add_option("--kind", kind_code,
                     "distance kind for chained:<N> evaluations");

  CLI::App* c_jpd =
      app.add_subcommand("jpd", "decide joint-distribution existence");
  c_jpd->add_option("--behavior", behavior_path, "behavior JSON file")
      ->required();

  CLI::App* c_max =
      app.add_subcommand("maximize", "maximize an objective over the "
                         "no-disturbance polytope");
  c_max->add_option("--scenario", scenario_name,
                    "cycle:N, bell:N, hybrid, or tripartite")
      ->required();
  c_max->add_option("--objective", objective_arg,
                    "objective JSON file or inequality name")
      ->required();

  CLI::App* c_q =
      app.add_subcommand("quantum-max", "multistart quantum optimization");
  c_q->add_option("--target", target, "gnc:4, excl:5, or gnc:5")->required();
  c_q->add_option("--restarts", restarts, "number of restarts")
      ->check(CLI::PositiveNumber);

  CLI::App* c_mono =
      app.add_subcommand("monogamy", "evaluate a monogamy relation");
  c_mono->add_option("--behavior", behavior_path, "behavior JSON file");
  c_mono->add_option("--relation", relation,
                     "mono:hybrid:<kind>, mono:tripartite:<kind>, "
                     "mono-bound:hybrid, or mono-bound:tripartite")
      ->required();

  CLI::App* c_fix = app.add_subcommand("fixtures", "write built-in behaviors");
  c_fix->add_option("--emit", emit_dir, "output directory")->required();

  CLI::App* c_ax =
      app.add_subcommand("axioms", "randomized pseudometric axiom sweep");
  c_ax->add_option("--kind", kind_code, "distance kind")->required();
  c_ax->add_option("--samples", samples, "number of sampled triples")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ctxdist");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  }

  const Exec mode = parallel ? Exec::parallel : Exec::serial;
  LpOptions lp;
  lp.mode = mode;

  const auto started = std::chrono::steady_clock::now();
  json report;
  report["command"] = join_args(args);
  report["version"] = kVersion;
  report["seed"] = seed;
  json items = json::array();
  int exit_code = 0;

  try {
    if (c_eval->parsed()) {
      const Behavior b = load_behavior(behavior_path);
      const std::string name = effective_inequality(inequality_name, kind_code);
      const InequalityResult r = evaluate_named(b, name);
      items.push_back(result_to_json(r));
      if (assert_satisfied && r.violated) exit_code = 1;
    } else if (c_jpd->parsed()) {
      const Behavior b = load_behavior(behavior_path);
      const Decomposition d = decompose_noncontextual(b, lp);
      json item;
      item["exists"] = d.ok;
      if (d.ok) {
        json weights = json::object();
        for (const auto& [assignment, w] : d.weights)
          weights[std::to_string(assignment)] = round12(w);
        item["weights"] = weights;
        item["reconstruction_residual"] = round12(d.reconstruction_residual);
      } else {
        json cert = json::array();
        for (double y : d.certificate) cert.push_back(round12(y));
        item["certificate"] = cert;
      }
      items.push_back(item);
      if (assert_satisfied && !d.ok) exit_code = 1;
    } else if (c_max->parsed()) {
      const Scenario s = scenario_by_name(scenario_name);
      json item;
      item["objective"] = objective_arg;
      NoDisturbanceMax m = [&]() {
        if (std::filesystem::exists(objective_arg)) {
          std::ifstream in(objective_arg);
          if (!in)
            throw InputError("cannot open objective file '" + objective_arg +
                             "'");
          json raw;
          try {
            in >> raw;
          } catch (const json::exception& e) {
            throw InputError("cannot parse '" + objective_arg +
                             "': " + e.what());
          }
          return max_over_no_disturbance(s, objective_from_json(raw, s), {},
                                         lp);
        }
        const NamedObjective named = inequality_objective(s, objective_arg);
        item["bound"] = round12(named.bound);
        return max_over_no_disturbance(s, named.objective, {}, lp);
      }();
      item["value"] = round12(m.value);
      item["witness"] = behavior_to_json(m.witness);
      items.push_back(item);
    } else if (c_q->parsed()) {
      const QuantumSearchResult r =
          optimize_quantum_value(target, restarts, seed, mode);
      json item;
      item["target"] = r.target;
      item["value"] = round12(r.value);
      json params = json::array();
      for (double p : r.parameters) params.push_back(round12(p));
      item["parameters"] = params;
      item["orientations"] = r.orientations;
      item["best_restart"] = r.best_restart;
      items.push_back(item);
    } else if (c_mono->parsed()) {
      json item;
      item["relation"] = relation;
      if (relation.rfind("mono-bound:", 0) == 0) {
        const std::string which = relation.substr(11);
        item["bound"] = round12(monogamy_bound_via_lp(
            which, DistanceKind::make_covariance(), lp));
      } else if (relation.rfind("mono:", 0) == 0) {
        if (behavior_path.empty())
          throw InputError("relation '" + relation + "' needs --behavior");
        const auto mid = relation.find(':', 5);
        if (mid == std::string::npos)
          throw InputError("relation must look like mono:<scenario>:<kind>");
        const std::string which = relation.substr(5, mid - 5);
        const DistanceKind kind = kind_from_code(relation.substr(mid + 1));
        const Behavior b = load_behavior(behavior_path);
        const MonogamyResult r = [&] {
          if (which == "hybrid") return chsh_kcbs_monogamy(b, kind);
          if (which == "tripartite") return bell_bell_monogamy(b, kind);
          throw InputError("unknown monogamy scenario '" + which +
                           "' (use hybrid or tripartite)");
        }();
        item["lhs"] = round12(r.lhs_value);
        item["rhs"] = round12(r.rhs_value);
        item["first_margin"] = round12(r.first_expression);
        item["second_margin"] = round12(r.second_expression);
        item["satisfied"] = r.satisfied;
        if (assert_satisfied && !r.satisfied) exit_code = 1;
      } else {
        throw InputError("unknown relation '" + relation +
                         "' (use mono:<scenario>:<kind> or "
                         "mono-bound:<scenario>)");
      }
      items.push_back(item);
    } else if (c_fix->parsed()) {
      std::error_code ec;
      std::filesystem::create_directories(emit_dir, ec);
      if (ec)
        throw InputError("cannot create directory '" + emit_dir +
                         "': " + ec.message());
      const auto emit = [&](const std::string& name, const Behavior& b) {
        const std::string path =
            (std::filesystem::path(emit_dir) / (name + ".json")).string();
        save_behavior(b, path);
        json item;
        item["file"] = path;
        item["contexts"] = b.scenario().context_count();
        items.push_back(item);
      };
      emit("p1", fixture_p1());
      emit("p2", fixture_p2());
      emit("nc", fixture_nc());
      emit("chsh", chsh_quantum_behavior(0.0, M_PI / 2, 7 * M_PI / 4,
                                         5 * M_PI / 4));
      emit("kcbs", kcbs_quantum_behavior(KcbsParams::pentagram()));
    } else if (c_ax->parsed()) {
      const DistanceKind kind = kind_from_code(kind_code);
      const AxiomScanResult r = axiom_scan(kind, samples, seed, mode);
      json item;
      item["kind"] = kind_code;
      item["samples"] = r.samples;
      item["failures"] = r.failures;
      item["worst_triangle_margin"] = round12(r.worst_triangle_margin);
      items.push_back(item);
      if (assert_satisfied && r.failures > 0) exit_code = 1;
    }
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  report["results"] = items;
  report["duration_ms"] = round12(elapsed);
  emit_report(report, format, out);
  return exit_code;
}

}  // namespace ctxdist
