#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dtc/cli.hpp"

using namespace dtc;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DTC_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("dtc_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

Run verify_text(const std::string& name, const std::string& cert) {
  return run({"verify", write_temp(name, cert)});
}

}  // namespace

TEST_CASE("tc and scat of the boundary triangle") {
  auto t = run({"tc", data("boundary-delta2.txt")});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("TC = 2 (exact)\n", 0) == 0);
  CHECK(t.out.find("cover (3 subcomplexes)") != std::string::npos);

  auto s = run({"scat", data("boundary-delta2.txt")});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("scat = 1 (exact)\n", 0) == 0);
}

TEST_CASE("core and product") {
  auto c = run({"core", data("simplex3.txt")});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("core: 1 vertices, 1 facets (strongly collapsible)\n", 0) == 0);
  CHECK(c.out.find("collapse sequence (3 steps)") != std::string::npos);

  auto p = run({"product", data("boundary-delta2.txt")});
  CHECK(p.code == 0);
  CHECK(p.out.rfind("# 9 vertices, 9 facets\n", 0) == 0);
}

TEST_CASE("checks and plans") {
  auto no = run({"is-farber", data("boundary-delta2.txt")});
  CHECK(no.code == 0);
  CHECK(no.out.rfind("Farber: no", 0) == 0);
  auto yes = run({"is-farber", data("boundary-delta2.txt"), "--omega", "a|a,a|b;b|b,b|c"});
  CHECK(yes.out.rfind("Farber: yes", 0) == 0);

  auto cat = run({"is-categorical", data("boundary-delta2.txt"), "--sub", "a,b;b,c"});
  CHECK(cat.out.rfind("categorical: yes", 0) == 0);

  auto plan = run({"plan", data("boundary-delta2.txt"), "--from", "a", "--to", "c"});
  CHECK(plan.code == 0);
  CHECK(plan.out.rfind("plan a -> c", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"tc", "--budget", "2", data("boundary-delta2.txt")}).code == 2);

  auto bad = run({"tc", write_temp("bad.txt", "a b\nb c\nx|y\n")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 3") != std::string::npos);

  CHECK(run({"tc", "/nonexistent/complex.txt"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"plan", data("boundary-delta2.txt"), "--from", "a", "--to", "zz"}).code == 1);
  CHECK(run({"verify", write_temp("garbage.json", "{not json")}).code == 1);

  auto apart = run({"tc", write_temp("apart.txt", "p\nq\n")});
  CHECK(apart.code == 0);
  CHECK(apart.out.find("not coverable") != std::string::npos);
}

TEST_CASE("verify accepts every emitted certificate") {
  const std::string k = data("boundary-delta2.txt");
  std::vector<std::vector<std::string>> commands{
      {"tc", k},
      {"scat", k},
      {"scat", k, "--square"},
      {"core", k},
      {"core", data("simplex3.txt")},
      {"product", k},
      {"is-farber", k},
      {"is-farber", k, "--omega", "a|a,a|b;b|b,b|c"},
      {"is-categorical", k},
      {"is-categorical", k, "--sub", "a,b;b,c"},
      {"tc", write_temp("apart2.txt", "p\nq\n")},
  };
  for (const char* x : {"a", "b", "c"})
    for (const char* y : {"a", "b", "c"}) commands.push_back({"plan", k, "--from", x, "--to", y});

  int n = 0;
  for (auto cmd : commands) {
    cmd.push_back("--json");
    auto r = run(cmd);
    REQUIRE(r.code == 0);
    auto v = verify_text("cert" + std::to_string(n++) + ".json", r.out);
    INFO(cmd[0], " ", r.out.substr(0, 200), " -> ", v.out);
    CHECK(v.code == 0);
    CHECK(v.out.rfind("ACCEPTED", 0) == 0);
  }
}

TEST_CASE("verify rejects mutated certificates") {
  auto r = run({"tc", data("boundary-delta2.txt"), "--json"});
  const json cert = json::parse(r.out);
  const auto& labels = cert["cover"][0]["witness"]["domain"];

  // Every single flip of one vertex image in the first witness step.
  int flips = 0;
  for (std::size_t i = 0; i < cert["cover"][0]["witness"]["steps"][0].size(); ++i)
    for (const auto& other : labels) {
      json bad = cert;
      auto& slot = bad["cover"][0]["witness"]["steps"][0][i];
      if (slot == other) continue;
      slot = other;
      auto v = verify_text("mut.json", bad.dump());
      REQUIRE(v.code == 1);
      REQUIRE(v.out.rfind("REJECTED", 0) == 0);
      ++flips;
    }
  CHECK(flips > 0);

  json lie = cert;
  lie["value"] = 1;
  lie["upper_bound"] = 1;
  lie["lower_bound"] = 1;
  CHECK(verify_text("lie.json", lie.dump()).code == 1);

  json fake = cert;
  fake["status"] = "not-coverable";
  fake["cover"] = json::array();
  fake["value"] = nullptr;
  fake["upper_bound"] = nullptr;
  CHECK(verify_text("fake.json", fake.dump()).code == 1);

  json short_cover = cert;
  short_cover["cover"].erase(2);
  CHECK(verify_text("short.json", short_cover.dump()).code == 1);

  auto core = json::parse(run({"core", data("simplex3.txt"), "--json"}).out);
  core["steps"][0][1] = core["steps"][0][0];
  CHECK(verify_text("core.json", core.dump()).code == 1);
  core = json::parse(run({"core", data("simplex3.txt"), "--json"}).out);
  core["steps"].erase(2);
  CHECK(verify_text("core.json", core.dump()).code == 1);
}

TEST_CASE("json output is deterministic") {
  const std::string k = data("boundary-delta2.txt");
  auto a = run({"tc", k, "--json"});
  auto b = run({"tc", k, "--json"});
  auto c = run({"tc", k, "--json", "--threads", "4"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}
