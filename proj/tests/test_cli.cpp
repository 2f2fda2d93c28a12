#include "ctxdist/cli.hpp"

#include <filesystem>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = ctxdist::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string strip_duration(const std::string& s) {
  static const std::regex line("[^\n]*duration_ms[^\n]*\n");
  return std::regex_replace(s, line, "");
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "ctxdist_cli_test";
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("fixtures then evaluation round trip") {
  TempDir tmp;
  RunResult fx = run_cli({"fixtures", "--emit", tmp.path.string()});
  REQUIRE(fx.code == 0);
  CHECK(fx.out.find("p1.json") != std::string::npos);
  CHECK(fx.out.find("kcbs.json") != std::string::npos);

  RunResult eval =
      run_cli({"eval", "--behavior", tmp.file("p1.json"), "--inequality",
               "gnc:3"});
  CHECK(eval.code == 0);
  CHECK(eval.out.find("\"value\": 3.0") != std::string::npos);
  CHECK(eval.out.find("\"violated\": true") != std::string::npos);
  CHECK(eval.out.find("\"version\": \"0.1.0\"") != std::string::npos);

  RunResult chsh =
      run_cli({"eval", "--behavior", tmp.file("chsh.json"), "--inequality",
               "gnc:4"});
  CHECK(chsh.out.find("\"value\": 2.82842712475") != std::string::npos);

  RunResult asserted =
      run_cli({"eval", "--behavior", tmp.file("p1.json"), "--inequality",
               "gnc:3", "--assert-satisfied"});
  CHECK(asserted.code == 1);
}

TEST_CASE("reports are reproducible modulo the run time") {
  TempDir tmp;
  run_cli({"fixtures", "--emit", tmp.path.string()});
  const std::vector<std::string> args = {"quantum-max", "--target", "gnc:5",
                                         "--restarts", "12", "--seed", "4"};
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(strip_duration(a.out) == strip_duration(b.out));
  CHECK(a.out.find("\"seed\": 4") != std::string::npos);

  RunResult csv = run_cli({"quantum-max", "--target", "gnc:5", "--restarts",
                           "12", "--seed", "4", "--format", "csv"});
  CHECK(strip_duration(csv.out).find("best_restart,orientations") !=
        std::string::npos);
}

TEST_CASE("chained evaluations take an explicit kind") {
  TempDir tmp;
  run_cli({"fixtures", "--emit", tmp.path.string()});
  RunResult ok = run_cli({"eval", "--behavior", tmp.file("nc.json"),
                          "--inequality", "chained:3", "--kind", "entropic"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("chained:entropic:3") != std::string::npos);

  RunResult missing = run_cli({"eval", "--behavior", tmp.file("nc.json"),
                               "--inequality", "chained:3"});
  CHECK(missing.code == 2);

  RunResult clash =
      run_cli({"eval", "--behavior", tmp.file("nc.json"), "--inequality",
               "chained:covariance:3", "--kind", "entropic"});
  CHECK(clash.code == 2);
}

TEST_CASE("decision and maximization commands") {
  TempDir tmp;
  run_cli({"fixtures", "--emit", tmp.path.string()});
  RunResult nc = run_cli({"jpd", "--behavior", tmp.file("nc.json"),
                          "--assert-satisfied"});
  CHECK(nc.code == 0);
  CHECK(nc.out.find("\"exists\": true") != std::string::npos);

  RunResult kcbs = run_cli({"jpd", "--behavior", tmp.file("kcbs.json"),
                            "--assert-satisfied"});
  CHECK(kcbs.code == 1);
  CHECK(kcbs.out.find("\"certificate\"") != std::string::npos);

  RunResult max =
      run_cli({"maximize", "--scenario", "cycle:3", "--objective", "gnc:3"});
  CHECK(max.code == 0);
  CHECK(max.out.find("\"value\": 3.0") != std::string::npos);

  RunResult mono = run_cli({"monogamy", "--relation", "mono-bound:hybrid"});
  CHECK(mono.code == 0);
  CHECK(mono.out.find("\"bound\": 5.0") != std::string::npos);

  RunResult axioms = run_cli({"axioms", "--kind", "covariance", "--samples",
                              "500", "--seed", "2", "--assert-satisfied"});
  CHECK(axioms.code == 0);
  CHECK(axioms.out.find("\"failures\": 0") != std::string::npos);
}

TEST_CASE("monogamy relations on behavior files") {
  TempDir tmp;
  run_cli({"fixtures", "--emit", tmp.path.string()});
  // fixture files live on the 3-cycle, so the hybrid relation must reject
  RunResult wrong = run_cli({"monogamy", "--behavior", tmp.file("p1.json"),
                             "--relation", "mono:hybrid:covariance"});
  CHECK(wrong.code == 2);

  RunResult missing =
      run_cli({"monogamy", "--relation", "mono:hybrid:covariance"});
  CHECK(missing.code == 2);
}

TEST_CASE("bad input paths exit with the usage code") {
  RunResult unknown_sub = run_cli({"transmogrify"});
  CHECK(unknown_sub.code == 2);
  CHECK(!unknown_sub.err.empty());

  RunResult unknown_flag = run_cli({"jpd", "--nope"});
  CHECK(unknown_flag.code == 2);
  CHECK(unknown_flag.err.find("Usage") != std::string::npos);

  RunResult no_file =
      run_cli({"eval", "--behavior", "missing.json", "--inequality", "gnc:3"});
  CHECK(no_file.code == 2);

  RunResult bad_name = run_cli({"maximize", "--scenario", "cycle:3",
                                "--objective", "mystery:9"});
  CHECK(bad_name.code == 2);

  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}
