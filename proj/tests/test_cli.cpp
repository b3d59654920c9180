#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "starsat/cli.hpp"
#include "starsat/edge_list.hpp"

using namespace starsat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("starsat_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("formula subcommands") {
  CHECK(run({"formula", "star", "6", "3"}).out == "5\n");
  CHECK(run({"formula", "star", "6", "3"}).code == kExitOk);
  CHECK(run({"formula", "clique", "4", "3"}).out == "3\n");
  const Run bad = run({"formula", "star", "3", "3"});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run({"formula", "bands", "--n", "1024", "--p", "0.5", "--r", "3", "--epsilon", "0.1"}).out ==
        "1002\n1006\n");
}

TEST_CASE("usage errors") {
  const Run unknown = run({"frobnicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.out.empty());
  const Run flag = run({"formula", "bands", "--n", "10", "--p", "0.5", "--r", "2", "--bogus", "1"});
  CHECK(flag.code == kExitUsage);
  CHECK(flag.err.find("--bogus") != std::string::npos);
  const Run missing = run({"gen", "gnp", "--n", "5", "--p", "0.5"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("--seed") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("sat-exact") != std::string::npos);
}

TEST_CASE("gen and graph commands") {
  TempDir dir;
  const std::string g = dir.file("g.txt");
  CHECK(run({"gen", "complete", "--n", "4", "--out", g}).code == kExitOk);
  CHECK(read_file(g) == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(run({"gen", "gnp", "--n", "30", "--p", "0.3", "--seed", "4"}).out ==
        run({"gen", "gnp", "--n", "30", "--p", "0.3", "--seed", "4"}).out);
  CHECK(run({"gen", "empty", "--n", "3"}).out == "3 0\n");
  CHECK(run({"gen", "regular", "--n", "5", "--d", "2"}).out == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  const Run infeasible = run({"gen", "regular", "--n", "5", "--d", "3"});
  CHECK(infeasible.code == kExitDomain);
  CHECK(run({"gen", "induced", "--graph", g, "--vertices", "0,1"}).out == "2 1\n0 1\n");

  CHECK(run({"alpha", "exact", "--graph", g, "--k", "0"}).out == "1\n");
  CHECK(run({"alpha", "greedy", "--graph", g, "--k", "3"}).out == "4\n");
  CHECK(run({"alpha", "check", "--graph", g, "--k", "0", "--vertices", "0,1"}).out == "false\n");
  CHECK(run({"sat-lower", "--graph", g, "--r", "2"}).out == "1.5\n");
  CHECK(run({"sat-upper", "--graph", g, "--r", "2"}).out == "2\n");
  CHECK(run({"sat-exact", "--graph", g, "--r", "2"}).out == "2\n");
  CHECK(run({"factor", "matching", "--graph", g}).out.rfind("2\n", 0) == 0);
  CHECK(run({"factor", "find", "--graph", g, "--d", "3"}).out.rfind("found\n", 0) == 0);
  CHECK(run({"factor", "brute", "--graph", g, "--d", "2"}).out.rfind("found\n", 0) == 0);
  CHECK(run({"factor", "condition", "--n", "1000", "--delta", "1", "--p", "0.5"}).out == "true\n");
  CHECK(run({"moment", "xs", "--n", "3", "--p", "0.5", "--k", "1", "--s", "3"}).out == "0.5\n");
  CHECK(run({"moment", "tail", "--n", "2", "--s", "0", "--p", "0.5"}).out == "0.25\n");
  CHECK(run({"moment", "cdf", "--n", "2", "--s", "0", "--p", "0.5"}).out == "0.25\n");
  const auto j = nlohmann::json::parse(run({"moment", "band", "--n", "500", "--p", "0.5", "--k", "0", "--format",
                                            "json"}).out);
  CHECK(j.at("hi").get<double>() == doctest::Approx(16.93).epsilon(1e-3));

  write_file(dir.file("bad.txt"), "2 1\n0 0\n");
  const Run parse = run({"sat-exact", "--graph", dir.file("bad.txt"), "--r", "2"});
  CHECK(parse.code == kExitDomain);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("certificate round trip through check") {
  TempDir dir;
  const std::string g = dir.file("g.txt"), c = dir.file("c.json");
  run({"gen", "gnp", "--n", "25", "--p", "0.5", "--seed", "8", "--out", g});
  CHECK(run({"sat-upper", "--graph", g, "--r", "3", "--cert-out", c}).code == kExitOk);
  const Run ok = run({"check", "--graph", g, "--cert", c});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "valid\n");

  write_file(dir.file("k4.txt"), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto cert = nlohmann::json::parse(read_file(c));
  cert["edges"] = nlohmann::json::array();
  cert["r"] = 2;
  cert["n"] = 4;
  run({"sat-upper", "--graph", dir.file("k4.txt"), "--r", "2", "--cert-out", dir.file("k4.json")});
  auto k4 = nlohmann::json::parse(read_file(dir.file("k4.json")));
  k4["edges"] = nlohmann::json::array();
  write_file(dir.file("empty.json"), k4.dump());
  const Run bad = run({"check", "--graph", dir.file("k4.txt"), "--cert", dir.file("empty.json")});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.out == "not-edge-maximal\n");

  const Run mismatch = run({"check", "--graph", dir.file("k4.txt"), "--cert", c});
  CHECK(mismatch.code == kExitDomain);
  CHECK(mismatch.err.find("host_hash") != std::string::npos);
}

TEST_CASE("experiment commands") {
  TempDir dir;
  const std::string cfg = dir.file("cfg.json");
  write_file(cfg, R"({"n_values": [8, 10], "p_values": [0.5], "r_values": [2, 3], "trials_per_cell": 3,
                      "master_seed": 17, "methods": ["lower", "upper-greedy", "exact"]})");
  const std::string a = dir.file("a.csv"), b = dir.file("b.csv");
  CHECK(run({"experiment", "run", "--config", cfg, "--jobs", "1", "--out", a}).code == kExitOk);
  CHECK(run({"experiment", "run", "--config", cfg, "--jobs", "8", "--out", b}).code == kExitOk);
  CHECK(read_file(a) == read_file(b));
  const Run summary = run({"experiment", "summarize", "--in", a});
  CHECK(summary.code == kExitOk);
  CHECK(summary.out.rfind("n,p_decimal,r,method,count,mean,stdev,min,max,band_lo,band_hi,band_hit_frac\n", 0) == 0);
  const Run verify = run({"experiment", "verify-small", "--max-n", "6", "--r", "2,3", "--count", "30", "--seed", "3"});
  CHECK(verify.code == kExitOk);
  CHECK(verify.out == "0\n");

  write_file(dir.file("bad.json"), R"({"n_values": [8]})");
  const std::string target = dir.file("never.csv");
  CHECK(run({"experiment", "run", "--config", dir.file("bad.json"), "--out", target}).code == kExitDomain);
  CHECK_FALSE(std::filesystem::exists(target));
  CHECK_FALSE(std::filesystem::exists(target + ".tmp"));
}

TEST_CASE("command table covers distinct subcommands") {
  std::set<std::string_view> ops, cmds;
  for (const CommandEntry& e : command_table()) {
    CHECK(ops.insert(e.operation).second);
    CHECK(cmds.insert(e.command).second);
  }
  CHECK(ops.size() >= 24);
  for (const CommandEntry& e : command_table()) {
    std::vector<std::string> args;
    std::istringstream ss{std::string(e.command)};
    for (std::string w; ss >> w;)
      if (w.rfind("--", 0) != 0) args.push_back(w);
      else break;
    args.push_back("--help");
    const Run r = run(args);
    CHECK_MESSAGE(r.code == kExitOk, e.command);
  }
}
