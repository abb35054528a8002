#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "support.hpp"

using namespace rvs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expect = 0) {
  args.push_back("--print-json");
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == expect, r.err);
  return Json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rvs-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

/// Bruhat flow with the identity hexagon oriented to have two sources.
Json two_source_flow(const std::shared_ptr<const Region>& r) {
  auto dirs = bruhat_flow(r).directions();
  const std::vector<bool> up{true, false, true, true, false, false};
  for (const auto& f : r->flats()) {
    if (f.base != 0 || f.i != 0 || f.j != 1) continue;
    const auto members = r->flat_cycle_indices(f);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int gen = k % 2 == 0 ? f.i : f.j;
      const std::size_t w = r->wall_index(*members[k], gen);
      const bool from_base = r->walls()[w].base == *members[k];
      dirs[w] = (up[k] == from_base) ? Direction::Above : Direction::Below;
    }
  }
  return flow_to_json(FlowAssignment(r, dirs));
}

}  // namespace

TEST_CASE("classify") {
  const Json h = run_json({"classify", "--catalog", "A_hyp:1"});
  CHECK(h["type"] == "Hyperbolic");
  CHECK(h["determinant"] == "-2");
  CHECK(h["adjugate"] == Json::parse("[[0,2,2],[2,4,4],[2,4,3]]"));
  CHECK(h["schema_version"] == kSchemaVersion);
  CHECK(h["command"] == "classify");

  const Json a = run_json({"classify", "--catalog", "A_tilde:2"});
  CHECK(a["type"] == "Affine");
  CHECK(a["null_root"] == Json::parse("[1,1,1]"));
  CHECK(run_json({"classify", "--catalog", "K:1"})["type"] == "Finite");

  const Run text = run({"classify", "--catalog", "K:3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("Hyperbolic") != std::string::npos);
}

TEST_CASE("graph files") {
  const fs::path g = scratch("tri.json");
  std::ofstream(g) << R"({"name":"tri","vertices":3,"edges":[[0,1,2],[1,2,2],[0,2,2]]})";
  CHECK(run_json({"classify", "--graph", g.string()})["type"] == "Hyperbolic");

  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << R"({"vertices":2,"edges":[[0,1,1],[1,0,3]]})";
  CHECK(run({"classify", "--graph", bad.string()}).code == 2);
  CHECK(run({"classify", "--graph", scratch("missing.json").string()}).code == 2);
  const fs::path broken = scratch("broken.json");
  std::ofstream(broken) << "{not json";
  CHECK(run({"classify", "--graph", broken.string()}).code == 2);
}

TEST_CASE("region") {
  const fs::path out = scratch("region.json");
  CHECK(run({"region", "--catalog", "A_tilde:2", "--radius", "3", "--json", out.string()}).code == 0);
  std::ifstream in(out);
  const Json j = Json::parse(in);
  const auto ball = oracle::cayley_ball(testing::to_oracle(gcm(catalog("A_tilde:2"))), 3);
  CHECK(j["region"]["alcove_count"] == ball.size());
  CHECK(j["region"]["alcoves"].size() == ball.size());
  CHECK(j["region"]["alcoves"][0] == Json::array());
  CHECK(j["config"]["radius"] == 3);
  CHECK(j["exit_code"] == 0);
  const Json& w = j["region"]["walls"][0];
  CHECK(w.contains("alcove"));
  CHECK(w.contains("gen"));
  CHECK(w.contains("root"));
}

TEST_CASE("certify") {
  const Json ok = run_json({"certify", "--catalog", "A_tilde:2", "--radius", "4"});
  CHECK(ok["pass"] == true);
  CHECK(ok["checks"]["flow_validation"]["valid"] == true);
  CHECK(ok["checks"]["matsumoto"]["pass"] == true);
  CHECK(ok["checks"]["positivity"]["min_pairing"].get<double>() > 0);
  CHECK(ok["checks"]["wall_vanishing"]["max_residual"].get<double>() < 1e-9);
  CHECK(ok["checks"]["monodromy"]["loops"].get<int>() > 0);
  CHECK(ok["config"]["seed"] == 1);
  CHECK(ok["config"]["samples"] == 5);

  const Json rnd = run_json({"certify", "--catalog", "A_tilde:2,3", "--radius", "4", "--flow", "random:7"});
  CHECK(rnd["pass"] == true);
  CHECK(rnd["config"]["flow"] == "random:7");

  const auto region = enumerate_region(RootSystem(catalog("A_tilde:2")), 3);
  const fs::path bad = scratch("two-source.json");
  write_json_file(bad.string(), two_source_flow(region));
  const Run fail = run({"certify", "--catalog", "A_tilde:2", "--radius", "3", "--flow", "file:" + bad.string()});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("invalid flat at e pair (0,1)") != std::string::npos);
  const Json witness =
      run_json({"certify", "--catalog", "A_tilde:2", "--radius", "3", "--flow", "file:" + bad.string()}, 1);
  bool named = false;
  for (const auto& f : witness["checks"]["flow_validation"]["flats"])
    if (f["valid"] == false) {
      CHECK(f["base"] == Json::array());
      CHECK(f["pair"] == Json::parse("[0,1]"));
      CHECK(f["sources"] == Json::parse("[0,2]"));
      named = true;
    }
  CHECK(named);
  CHECK(witness["checks"]["matsumoto"]["pass"] == false);
}

TEST_CASE("flow export round trip") {
  const fs::path out = scratch("flow.json");
  CHECK(run({"flow", "--catalog", "A_hyp:1", "--radius", "3", "--json", out.string()}).code == 0);
  const auto region = enumerate_region(RootSystem(catalog("A_hyp:1")), 3);
  const FlowAssignment loaded = flow_from_json(region, read_json_file(out.string()));
  CHECK(loaded.directions() == bruhat_flow(region).directions());
  CHECK(run({"certify", "--catalog", "A_hyp:1", "--radius", "3", "--flow", "file:" + out.string()}).code == 0);

  Json arr = flow_to_json(bruhat_flow(region));
  CHECK(flow_from_json(region, arr).directions() == bruhat_flow(region).directions());
  Json missing = arr;
  for (std::size_t k = 0; k < missing.size(); ++k) {
    const auto& wall = region->walls()[k];
    if (wall.interior()) {
      missing.erase(k);
      break;
    }
  }
  CHECK(testing::error_of([&] { flow_from_json(region, missing); }) == Errc::IncompleteAssignment);
  Json contradiction = arr;
  Json dup = arr[0];
  dup["above"] = !dup["above"].get<bool>();
  contradiction.push_back(dup);
  CHECK(testing::error_of([&] { flow_from_json(region, contradiction); }) == Errc::Parse);
  CHECK(testing::error_of([&] { flow_from_json(region, Json::parse(R"({"x":1})")); }) == Errc::Parse);
}

TEST_CASE("braid table and parameter checks") {
  const Json t = run_json({"braid-table", "--type", "A2"});
  REQUIRE(t["tables"].size() == 1);
  CHECK(t["tables"][0]["count"] == 6);
  CHECK(t["tables"][0]["equalities"].size() == 6);
  const Json both = run_json({"braid-table", "--type", "all"});
  CHECK(both["tables"].size() == 2);
  CHECK(both["tables"][0]["count"] == 4);

  const Json p = run_json({"param-check", "--m", "3", "--trials", "100"});
  CHECK(p["pass"] == true);
  CHECK(p["rank2"][0]["max_residual"].get<double>() < 1e-10);
  const Json h = run_json({"param-check", "--catalog", "A_hyp:1"});
  CHECK(h["hyperboloid"]["max_residual"].get<double>() < 1e-8);
}

TEST_CASE("render") {
  const fs::path svg = scratch("tiling.svg");
  const Json j = run_json({"render", "--kind", "affine", "--catalog", "A_tilde:2", "--radius", "3", "--flow", "bruhat",
                           "--svg", svg.string()});
  CHECK(j["polygons"] == j["alcoves"]);
  CHECK(fs::file_size(svg) > 1000);
  const Json h = run_json({"render", "--kind", "hyperbolic", "--catalog", "A_tilde:2,3", "--radius", "3", "--svg",
                           scratch("disc.svg").string()});
  CHECK(h["interior_crossings"] == 0);
  CHECK(run({"render", "--kind", "rank2", "--catalog", "K:3", "--svg", scratch("k3.svg").string()}).code == 0);
  CHECK(run({"render", "--kind", "affine", "--catalog", "A_hyp:1", "--svg", scratch("x.svg").string()}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "--catalog", "K:3", "--graph", "x.json"}).code == 2);
  CHECK(run({"classify", "--catalog", "Nope:3"}).code == 2);
  CHECK(run({"classify", "--catalog", "K:0"}).code == 2);
  CHECK(run({"certify", "--catalog", "A_tilde:2", "--flow", "sideways"}).code == 2);
  CHECK(run({"certify", "--catalog", "A_tilde:2", "--flow", "random:x"}).code == 2);
  CHECK(run({"certify", "--catalog", "A:3"}).code == 2);
  CHECK(run({"region", "--catalog", "A_tilde:2", "--radius", "-1"}).code == 2);
  CHECK(run({"braid-table", "--type", "B2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
