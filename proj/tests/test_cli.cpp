#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "uberhom/graph.hpp"

using Json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = uberhom::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("uberhom_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("horizontal homology from a facet file") {
  const auto triangle = write_temp("triangle.txt", "3\n# the full triangle\n0 1 2\n");
  auto j = run_json({"horizontal", triangle, "--colouring", "100"});
  CHECK(j["results"][0]["ranks"] == Json::parse(R"j({"(0,0)": 1})j"));
  CHECK(j["input"]["vertices"] == 3);
  CHECK(j["input"]["fnv1a64"].get<std::string>().size() == 16);

  const auto tetra = write_temp("tetra.txt", "4\n0 1 2 3\n");
  j = run_json({"horizontal", tetra, "--colouring", "1010"});
  CHECK(j["results"][0]["ranks"] == Json::parse(R"j({"(0,0)": 1})j"));

  j = run_json({"diagonal", triangle, "--colouring", "100"});
  CHECK(j["results"][0]["ranks"] == Json::parse(R"j({"(0,1)": 1})j"));

  j = run_json({"horizontal", triangle, "--colouring", "all"});
  CHECK(j["results"].size() == 8);
  CHECK(run_json({"horizontal", tetra, "--colouring", "level:2"})["results"].size() == 6);
  CHECK(run_json({"horizontal", tetra, "--colouring", "elementary:3"})["results"][0]["colouring"] == "0001");
}

TEST_CASE("generators are listed on request") {
  const auto j = run_json({"horizontal", "builtin:boundary:2", "--colouring", "111", "--generators"});
  const auto gens = j["results"][0]["generators"];
  CHECK(gens["(0,0)"].size() == 1);
  CHECK(gens["(1,0)"].size() == 1);
  CHECK(gens["(1,0)"][0].size() == 3);
  const auto csv = run({"horizontal", "builtin:boundary:2", "--colouring", "111", "--generators", "--format", "csv"});
  CHECK(csv.out.find("\"<0,1>+<0,2>+<1,2>\"") != std::string::npos);
}

TEST_CASE("überhomology of an edge") {
  const auto j = run_json({"uber", "builtin:simplex:1"});
  CHECK(j["levels"]["0"] == Json::parse(R"j({"(0,1)": 2, "(1,2)": 1})j"));
  CHECK(j["levels"]["1"] == Json::parse(R"j({"(0,0)": 1})j"));
  CHECK(j["levels"].size() == 2);
  CHECK(run_json({"uber", "builtin:simplex:1", "--level", "1"})["levels"].size() == 1);
  CHECK(run_json({"uber0", "builtin:simplex:1"})["ranks"] == j["levels"]["0"]);
}

TEST_CASE("dissimilarity of the two cubic graphs on six vertices") {
  const auto corpus =
      write_temp("corpus.txt", "prism " + uberhom::to_graph6(uberhom::prism_graph()) + "\nk33 builtin:bipartite:3,3\n");
  auto r = run({"dissim", corpus});
  REQUIRE(r.code == 0);
  CHECK(r.out == "name1,name2,delta_num,delta_den,first_differing_level\nprism,k33,2,3,2\n");
  const auto j = run_json({"dissim", corpus, "--format", "json"});
  CHECK(j["pairs"][0]["delta"] == "2/3");
  CHECK(j["pairs"][0]["first_differing_level"] == 2);

  const auto mixed = write_temp("mixed.txt", "Bw\nCl\n# comment\nCl\n");
  r = run({"dissim", mixed});
  CHECK(r.out == "name1,name2,delta_num,delta_den,first_differing_level\ng0,g1,inf,1,none\ng0,g2,inf,1,none\n"
                 "g1,g2,0,1,none\n");
}

TEST_CASE("theta on a regular graph") {
  const auto j = run_json({"theta", "builtin:complete:4", "--level", "1", "--mode", "per-colouring"});
  const auto tuples = j["levels"]["1"];
  REQUIRE(tuples.size() == 8);
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(tuples[t] == tuples[0]);
    CHECK(tuples[4 + t] == tuples[4]);
  }
  CHECK(run_json({"theta", "builtin:complete:4"})["levels"].size() == 5);
}

TEST_CASE("graph commands") {
  const auto path = write_temp("grid.g6", uberhom::to_graph6(uberhom::grid_graph(3, 3)) + "\n");
  CHECK(run_json({"graph-hom", "h0", path})["ranks"] == Json::parse(R"j({"6": 1})j"));
  CHECK(run_json({"graph-hom", "h1_0", "builtin:complete:3"})["ranks"] == Json::parse(R"j({"0": 3})j"));
  const auto mc = run_json({"matching-complex", "builtin:cycle:6"});
  CHECK(mc["f_vector"] == Json::parse("[6, 9, 2]"));
  CHECK(mc["homology"] == Json::parse("[1, 2]"));
}

TEST_CASE("Morse and decomposition reports") {
  auto j = run_json({"morse", "builtin:torus_min", "--colouring", "elementary:0"});
  CHECK(j["results"][0]["dalmatian"] == true);
  CHECK(j["results"][0]["critical_counts"] == Json::parse("[1, 9, 8]"));
  j = run_json({"decompose", "builtin:simplex:2", "--colouring", "101"});
  CHECK(j["results"][0]["parts"].size() == 2);
  j = run_json({"euler", "builtin:boundary:2", "--colouring", "all"});
  for (const auto& entry : j["results"]) CHECK(entry["euler_characteristic"] == 0);
  j = run_json({"filtered", "builtin:simplex:2", "--colouring", "100", "--level", "2"});
  CHECK(j["results"][0]["filtration"]["2"] == Json::parse("[1]"));
}

TEST_CASE("plane graph commands") {
  const auto triangle = write_temp("triangle.rot", "v 0: 1 2\nv 1: 2 0\nv 2: 0 1\n");
  const auto j = run_json({"verify-thm42", triangle});
  CHECK(j["ok"] == true);
  CHECK(j["weight_zero"] == Json::parse("[1, 2]"));
  CHECK(run_json({"tait", "builtin:cycle:3"})["tait"]["crossings"] == 3);
  CHECK(run({"verify-thm42", "builtin:wheel:3", "--format", "table"}).code == 0);
}

TEST_CASE("exit codes") {
  const auto bad = write_temp("bad.txt", "3\n0 1 x\n");
  CHECK(run({"horizontal", bad, "--colouring", "100"}).code == 2);
  CHECK(run({"horizontal", "builtin:simplex:2", "--colouring", "10"}).code == 3);
  CHECK(run({"horizontal", "builtin:simplex:2", "--colouring", "1x0"}).code == 2);
  CHECK(run({"horizontal", "builtin:simplex:2"}).code == 2);
  CHECK(run({"uber", "builtin:cube:3", "--cap", "4"}).code == 4);
  CHECK(run({"horizontal", "builtin:loop:8", "--colouring", "all", "--cap", "6"}).code == 4);
  CHECK(run({"theta", "builtin:complete:7", "--cap", "6"}).code == 4);
  CHECK(run({"theta", "builtin:complete:7", "--cap", "6", "--level", "1"}).code == 0);
  CHECK(run({"tait", "builtin:cycle:17"}).code == 4);
  CHECK(run({"graph-hom", "h3", "builtin:complete:3"}).code == 2);
  CHECK(run({"frobnicate", "x"}).code == 2);
  CHECK(run({"uber", "builtin:simplex:1", "--format", "xml"}).code == 2);
  CHECK(run({"uber", "/no/such/file"}).code == 2);
  CHECK(run({"theta", write_temp("two.g6", "Bw\nCl\n")}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify-thm42", "builtin:torus:3"}).code == 2);
}

TEST_CASE("output does not depend on the number of workers") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"uber", "builtin:boundary:3"}, {"theta", "builtin:prism"},
        {"graph-hom", "h0", "builtin:cube:3"}, {"dissim", "builtin:prism"}}) {
    auto serial = args;
    serial.insert(serial.end(), {"--jobs", "1"});
    auto parallel = args;
    parallel.insert(parallel.end(), {"--jobs", "4"});
    const auto a = run(serial);
    const auto b = run(parallel);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
