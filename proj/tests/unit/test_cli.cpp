#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "essentia/generators.hpp"
#include "essentia/instance_io.hpp"
#include "json.hpp"

using namespace essentia;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("essentia_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("detect on the m = 6 star") {
  auto path = write_temp("star6.json", instance_to_json(gen_star_multicut(6)));
  auto r = run({"detect", "--k", "1", path});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["selected"] == json::array({0}));
  CHECK(j["lp_values"]["0"] == "3/1");
  CHECK(j["lp_values"]["1"] == "1/1");
  CHECK(r.out.rfind("{\"selected\":[0],\"lp_values\":{\"0\":\"3/1\"", 0) == 0);
}

TEST_CASE("gap on matching+apex m = 10") {
  auto path = write_temp("apex10.json", instance_to_json(gen_matching_apex(10)));
  auto r = run({"gap", "--pin", "0", path});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["ratio"] == "9/5");
  CHECK(j["fractional"] == "5/1");
  CHECK(j["integral"] == 9);

  auto csv = run({"gap", "--pin", "0", "--csv", path});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("id,n,fractional,integral,ratio\n") == 0);
  CHECK(csv.out.find(",21,5/1,9,9/5") != std::string::npos);
}

TEST_CASE("solve on an obstacle-free instance") {
  auto path = write_temp("empty.json", R"({"problem":"vertex-cover","directed":false,"n":3,"edges":[],"terminals":[]})");
  auto r = run({"solve", path});
  REQUIRE(r.code == 0);
  CHECK(r.out == "{\"opt\":0,\"solution\":[]}\n");
}

TEST_CASE("generate, write, read is structurally identical") {
  auto r = run({"generate", "random", "--problem", "DVM", "--n", "7", "--seed", "4"});
  REQUIRE(r.code == 0);
  Instance inst = instance_from_json(r.out);
  CHECK(inst == gen_random({Problem::DirectedVertexMulticut, 7}, 4));
  auto path = write_temp("dvm7.json", r.out);
  auto again = run({"convert", "--to", "vertex-multicut", path});
  CHECK(again.code == 1);
}

TEST_CASE("reduce, convert and gadgets") {
  auto star = write_temp("star5.json", instance_to_json(gen_star_multicut(5)));
  auto r = run({"reduce", star});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["opt"] == 1);
  CHECK(j["residual_budget"] == 0);

  auto tri = write_temp("tri.json", R"({"problem":"dfvs","directed":true,"n":3,"edges":[[0,1],[1,2],[2,0]]})");
  auto c = run({"convert", "--to", "DVM", tri});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["terminals"].size() == 3);
  auto g = run({"generate", "dfvs-gadget", "--eps", "1", "--base", tri});
  REQUIRE(g.code == 0);
  auto gj = json::parse(g.out);
  CHECK(gj["labels"]["Q_in"].size() == 3);
  CHECK(gj["copies"] == 2);
}

TEST_CASE("verify replays detection reports and certificates") {
  auto star = write_temp("star4.json", instance_to_json(gen_star_multicut(4)));
  auto d = run({"detect", "--k", "1", "--certificate", star});
  REQUIRE(d.code == 0);
  auto report = write_temp("detect_report.json", d.out);
  auto ok = run({"verify", report});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["valid"] == true);

  auto tampered = json::parse(d.out);
  tampered["selected"] = json::array();
  auto bad = run({"verify", write_temp("detect_bad.json", tampered.dump())});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["valid"] == false);

  auto gap = run({"gap", "--pin", "0", "--certificate", star});
  REQUIRE(gap.code == 0);
  auto gj = json::parse(gap.out);
  REQUIRE(gj.contains("certificate"));
  CHECK(run({"verify", write_temp("cert.json", gap.out)}).code == 0);
  gj["certificate"]["integral_set"] = json::array({1});
  CHECK(run({"verify", write_temp("cert_bad.json", gj.dump())}).code == 1);
}

TEST_CASE("input errors exit 1, caps exit 2") {
  auto bad = write_temp("bad.json", R"({"problem":"vertex-cover","n":3,"edges":[[0,5]]})");
  auto r = run({"solve", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("edges[0][1]") != std::string::npos);
  CHECK(run({"solve", write_temp("junk.json", "{")}).code == 1);
  CHECK(run({"solve", write_temp("tag.json", R"({"problem":"x","n":1,"edges":[]})")}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  auto big = write_temp("big.json", instance_to_json(gen_random({Problem::VertexCover, 14, Rational(1, 2)}, 3)));
  CHECK(run({"solve", "--node-cap", "1", big}).code == 2);
  CHECK(run({"gap", "--size-cap", "4", big}).code == 2);
}

TEST_CASE("dimacs import") {
  auto path = write_temp("tri.dimacs", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  auto r = run({"solve", "--format", "dimacs-edges", "--problem", "VC", path});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["opt"] == 2);
}

TEST_CASE("no floats in numeric output") {
  auto path = write_temp("cd.json", instance_to_json(gen_random({Problem::CographDeletion, 7, Rational(1, 2)}, 8)));
  for (auto args : {std::vector<std::string>{"detect", "--k", "2", path}, {"gap", path}, {"reduce", path}}) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    std::function<void(const json&)> walk = [&](const json& j) {
      CHECK_FALSE(j.is_number_float());
      if (j.is_structured())
        for (const auto& item : j) walk(item);
    };
    walk(json::parse(r.out));
  }
}
