#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  nlohmann::ordered_json report;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MEDIANKIT_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!r.out.empty() && r.out.front() == '{') r.report = nlohmann::ordered_json::parse(r.out);
  return r;
}

std::string tmpPath(const std::string& name) { return std::string(TEST_TMP_DIR) + "/" + name; }

void writeFile(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("rank of SQUARE") {
  auto r = run("rank --fixture SQUARE");
  CHECK(r.code == 0);
  CHECK(r.report["result"]["rank"] == 2);
  CHECK(r.report["tool"] == "mediankit");
  CHECK(r.report["command"].size() == 3);
  CHECK(r.report["input"]["digest"].get<std::string>().size() == 16);
}

TEST_CASE("free-subgroup certificate") {
  auto r = run("free-cert --fixture F2BALL --a a --b b --h wa+ --k wb+ --max-word-len 4 --verify");
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "VERIFIED");
  CHECK(r.report["result"]["wordsChecked"] == 160);
  CHECK(r.report["verification"]["passed"] == true);
  auto bad = run("free-cert --fixture F2BALL --h wa+ --k wa+");
  CHECK(bad.code == 2);
  CHECK(bad.report["error"]["code"] == "NOT_FACING");
}

TEST_CASE("UBS graph with DOT output") {
  std::string dot = tmpPath("g.dot");
  std::remove(dot.c_str());
  auto r = run("ubs-graph --fixture STAIRFLAP --dot " + dot);
  CHECK(r.code == 0);
  CHECK(r.report["result"]["vertices"].size() == 2);
  CHECK(r.report["result"]["edges"].size() == 1);
  std::ifstream in(dot);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  CHECK(text.rfind("digraph", 0) == 0);
  CHECK(text.find("->") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from timing") {
  auto a = run("classify --fixture SQUARE");
  auto b = run("classify --fixture SQUARE");
  a.report.erase("timingMs");
  b.report.erase("timingMs");
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.report["verdict"] == "ROLLER_ELEMENTARY");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 64);
  CHECK(run("frobnicate").code == 64);
  CHECK(run("rank --fixture SQUARE --no-such-flag").code == 64);
  CHECK(run("rank --fixture NOPE").code == 65);
  CHECK(run("rank").code == 65);
  CHECK(run("facing --fixture SQUARE").code == 2);
  CHECK(run("flip --fixture LINE --halfspace w10+ --max-word-len 3").code == 3);
  CHECK(run("sectors --fixture F2BALL --pair wa+,wb+").code == 2);
  CHECK(run("points --fixture LINE").code == 3);
  CHECK(run("--help").code == 0);
}

TEST_CASE("malformed files") {
  std::string path = tmpPath("broken.json");
  writeFile(path, "{\n \"walls\": [\n  {\"id\": \"a\",}\n ]\n}\n");
  auto r = run("rank --file " + path);
  CHECK(r.code == 65);
  CHECK(r.report["error"]["message"].get<std::string>().find("line 3") != std::string::npos);
  writeFile(path, R"({"walls": [{"id": "a", "pos": "a"}]})");
  auto r2 = run("points --file " + path);
  CHECK(r2.code == 65);
  CHECK(r2.report["error"]["message"].get<std::string>().find("walls[0].neg") != std::string::npos);
  CHECK(run("rank --file " + tmpPath("missing.json")).code == 65);
}

TEST_CASE("files and dumped fixtures") {
  auto d = run("--dump-fixture TRIPOD");
  REQUIRE(d.code == 0);
  std::string path = tmpPath("tripod.json");
  writeFile(path, d.report["action"].dump());
  auto r = run("facing --file " + path + " --verify");
  CHECK(r.code == 0);
  CHECK(r.report["result"]["tuple"] == nlohmann::ordered_json({"h1", "h2", "h3"}));
  CHECK(r.report["verification"]["passed"] == true);

  auto s = run("--dump-fixture STAIRFLAP");
  REQUIRE(s.code == 0);
  std::string spath = tmpPath("stairflap.json");
  writeFile(spath, s.report["system"].dump());
  auto v = run("ubs-validate --file " + spath);
  CHECK(v.code == 0);
  CHECK(v.report["verdict"] == "VALID");
  CHECK(run("--dump-fixture NOPE").code == 65);
}

TEST_CASE("core commands") {
  auto p = run("points --fixture GRID");
  CHECK(p.code == 0);
  CHECK(p.report["result"]["count"] == 16);
  auto m = run("median --fixture SQUARE --x a,b --y a*,b --z a*,b* --verify");
  CHECK(m.code == 0);
  CHECK(m.report["result"]["median"] == nlohmann::ordered_json({"a*", "b"}));
  auto dist = run("distance --fixture GRID --x '#0' --y '#15'");
  CHECK(dist.code == 0);
  CHECK(dist.report["result"]["distance"] == "6");
  auto dec = run("decompose --fixture GRID");
  CHECK(dec.report["result"]["factorCount"] == 2);
  auto sub = run("subdivide --fixture EDGE -n 2");
  CHECK(sub.code == 0);
  CHECK(sub.report["result"]["walls"] == 4);
  CHECK(sub.report["result"]["pocset"]["walls"][0]["weight"] == "1/4");
  auto val = run("validate --fixture F2BALL");
  CHECK(val.code == 0);
  CHECK(val.report["verdict"] == "VALID");
  auto lin = run("lineal --fixture SQUARE --verify");
  CHECK(lin.report["result"]["count"] == 2);
}

TEST_CASE("action commands") {
  auto o = run("orbits --fixture SQUARE");
  CHECK(o.code == 0);
  CHECK(o.report["result"]["minOrbitSize"] == 4);
  auto f = run("flip --fixture TRIPOD --halfspace h1* --verify");
  CHECK(f.code == 0);
  CHECK(f.report["verdict"] == "FLIPPED");
  CHECK(f.report["verification"]["passed"] == true);
  auto inv = run("flip --fixture TRIPOD --halfspace h1");
  CHECK(inv.code == 2);
  CHECK(inv.report["verdict"] == "INVARIANT_SET");
  auto s = run("skewer --fixture LINE --halfspace w10- --verify");
  CHECK(s.code == 0);
  CHECK(s.report["result"]["word"] == "s^-1");
  auto n = run("nested --fixture LINE --word s^9 --point center --verify");
  CHECK(n.code == 0);
  CHECK(n.report["result"]["halfspace"] == "w10+");
  auto sec = run("sectors --fixture SQUARE --pair a,b");
  CHECK(sec.report["verdict"] == "PRODUCT");
  auto c = run("classify --fixture F2BALL --max-word-len 3");
  CHECK(c.code == 0);
  CHECK(c.report["verdict"] == "FREE_SUBGROUP");
}

TEST_CASE("boundary commands") {
  auto chi = run("ubs-chi --fixture STAIRFLAP --shift shift");
  CHECK(chi.code == 0);
  CHECK(chi.report["result"]["chi"][0]["chi"] == "1");
  CHECK(chi.report["result"]["chi"][1]["chi"] == "1");
  CHECK(chi.report["verdict"] == "NOT_IN_KERNEL");
  auto tx = run("ubs-chi --fixture CORNER4 --shift tx");
  CHECK(tx.report["result"]["chi"][0]["chi"] == "1");
  CHECK(tx.report["result"]["chi"][1]["chi"] == "0");
  std::string path = tmpPath("shift.json");
  writeFile(path, R"({"tau": {"X": "X", "Y": "Y"}, "shift": {"X": 0, "Y": 0}, "minIndex": 0})");
  auto id = run("ubs-chi --fixture CORNER4 --shift-file " + path);
  CHECK(id.code == 0);
  CHECK(id.report["verdict"] == "IN_KERNEL");
  auto v = run("ubs-validate --fixture CORNER4");
  CHECK(v.code == 0);
}

TEST_CASE("budget override") {
  auto r = run("points --fixture LINE");
  CHECK(r.report["error"]["code"] == "WALL_BUDGET_EXCEEDED");
  std::string cmd = "MEDIANKIT_BUDGET=30 " + std::string(MEDIANKIT_BIN) + " points --fixture LINE >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
}
