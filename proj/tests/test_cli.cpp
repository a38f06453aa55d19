#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lchord/cli.hpp"

using namespace lchord;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_text);
  Run r;
  r.code = run_cli(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(LCHORD_GOLDEN_DIR) + "/" + name);
  REQUIRE(f);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("index on the fig1 fixture") {
  const Run r = run({"index", "--fixture", "paper_fig1", "--json"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["value"] == 2);
  CHECK(j["exact"] == true);
  CHECK(r.out == golden("fig1_index.json"));
}

TEST_CASE("chordalize with the labeled partition matches the golden chain") {
  const Run r = run({"chordalize", "--fixture", "paper_fig1", "--partition", R"([["u","v","w"],["x"]])", "--json"});
  CHECK(r.code == 0);
  CHECK(r.json()["stages"].size() == 2);
  CHECK(r.json()["chordal"] == true);
  CHECK(r.json()["minimal"] == true);
  CHECK(r.out == golden("fig1_chain.json"));
}

TEST_CASE("chordalize rejects a single stage with an NC diagnostic") {
  const Run r = run({"chordalize", "--fixture", "paper_fig1", "--cover", R"(["u","v","w","x"])", "--json"});
  CHECK(r.code == 1);
  CHECK(r.json()["error"] == "nc_violation");
  CHECK(r.json()["diagnostics"]["ok"] == false);
  CHECK(r.err.find("fails NC") != std::string::npos);
}

TEST_CASE("chordalize without a cover searches for a witness") {
  const Run r = run({"chordalize", "--gen", "cycle:6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chordal yes, minimal yes") != std::string::npos);
  const Run chordal = run({"chordalize", "--gen", "complete:4", "--json"});
  CHECK(chordal.code == 0);
  CHECK(chordal.json()["stages"].empty());
}

TEST_CASE("verify on the 4-cycle shows the DP row") {
  const Run r = run({"verify", "--gen", "cycle:4", "--json"});
  CHECK(r.code == 0);
  bool seen = false;
  const auto j = r.json();
  for (const auto& row : j["ledger"]) {
    if (row["id"] == "chi_dp_le_beta_plus_1") {
      seen = true;
      CHECK(row["lhs"] == 3);
      CHECK(row["rhs"] == 3);
      CHECK(row["status"] == "pass");
    }
  }
  CHECK(seen);
  CHECK(run({"verify", "--gen", "cycle:4"}).out.find("pass  chi_dp_le_beta_plus_1") != std::string::npos);
}

TEST_CASE("analyze reports holes, components and NC covers") {
  const Run r = run({"analyze", "--fixture", "paper_fig1", "--json"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["hole_count"] == 10);
  CHECK(j["components"]["classes"].size() == 3);
  CHECK(j["nc_cover_status"] == "none");
  CHECK_FALSE(j["labels"].contains("x"));
  CHECK(j["labels"]["13"] == "x");
  const Run c = run({"analyze", "--gen", "cycle:5", "--json"});
  CHECK(c.json()["nc_cover_status"] == "found");
}

TEST_CASE("gen writes every format and is seed-deterministic") {
  const Run a = run({"gen", "--gen", "random:8,0.5", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == "8 15\n0 4\n0 6\n1 2\n1 3\n1 4\n1 5\n2 7\n3 4\n3 5\n3 7\n4 5\n4 6\n4 7\n5 6\n6 7\n");
  CHECK(run({"gen", "--gen", "random:8,0.5", "--seed", "42"}).out == a.out);
  CHECK(run({"gen", "--gen", "cycle:3", "--format", "json"}).out == "{\"n\":3,\"edges\":[[0,1],[0,2],[1,2]]}\n");
  CHECK(run({"gen", "--gen", "cycle:3", "--format", "dot"}).out.rfind("graph {", 0) == 0);
}

TEST_CASE("graphs read from stdin in either format") {
  const Run e = run({"index", "--input", "-", "--json"}, "4 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(e.code == 0);
  CHECK(e.json()["value"] == 1);
  const Run j = run({"index", "--input", "-", "--json"}, R"({"n":3,"edges":[[0,1]]})");
  CHECK(j.code == 0);
  CHECK(j.json()["value"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"index"}).code == 2);
  CHECK(run({"index", "--fixture", "paper_fig1", "--gen", "cycle:4"}).code == 2);
  CHECK(run({"index", "--fixture", "nope"}).code == 2);
  CHECK(run({"index", "--fixture", "paper_fig1", "--bogus"}).code == 2);
  CHECK(run({"index", "--fixture", "paper_fig1", "--budget", "0"}).code == 2);
  CHECK(run({"index", "--gen", "cycle:1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run parse = run({"index", "--input", "-"}, "3 1\n0 7\n");
  CHECK(parse.code == 3);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(run({"chordalize", "--fixture", "paper_fig1", "--partition", "[[\"u\""}).code == 3);
  CHECK(run({"index", "--fixture", "paper_fig1", "--budget", "1"}).code == 4);
  CHECK(run({"analyze", "--fixture", "paper_fig1", "--max-holes", "3"}).code == 4);
  CHECK(run({"chordalize", "--fixture", "paper_fig1", "--partition", R"([["nobody"]])"}).code == 1);
}

TEST_CASE("oracle verbs") {
  CHECK(run({"oracle", "chordal", "--gen", "cycle:5", "--json"}).json()["chordal"] == false);
  CHECK(run({"oracle", "omega", "--fixture", "paper_fig5", "--json"}).json()["omega"] == 11);
  CHECK(run({"oracle", "chromatic", "--gen", "cycle:5", "--json"}).json()["chromatic"] == 3);
  const char* lists = R"({"lists":{"0":[1,2],"1":[3,4],"2":[1,3],"3":[1,4],"4":[2,3],"5":[2,4]}})";
  CHECK(run({"oracle", "list", "--gen", "sharpness:1", "--lists", lists, "--json"}).json()["colorable"] == false);
  CHECK(run({"oracle", "dp", "--gen", "cycle:4", "--k", "2", "--json"}).json()["colorable"] == true);
  const char* twisted = R"({"k":2,"edges":{"0-1":[[0,0],[1,1]],"1-2":[[0,0],[1,1]],"2-3":[[0,0],[1,1]],"0-3":[[0,1],[1,0]]}})";
  CHECK(run({"oracle", "dp", "--gen", "cycle:4", "--correspondence", twisted, "--json"}).json()["colorable"] ==
        false);
  CHECK(run({"oracle", "dp_tiny", "--gen", "cycle:4", "--json"}).json()["chi_dp"] == 3);
  CHECK(run({"oracle", "degeneracy", "--gen", "cycle:4", "--json"}).json()["beta"] == 2);
  CHECK(run({"oracle", "join", "--fixture", "paper_fig5", "--join", "8,4", "--json"}).json()["found"] == false);
  CHECK(run({"oracle", "minor", "--gen", "complete:5", "--t", "5", "--json"}).json()["status"] == "yes");
  const Run efl = run({"oracle", "efl", "--gen", "efl_near_pencil:3", "--cliques", "[[0,1,2],[0,3,4],[0,5,6]]",
                       "--json"});
  CHECK(efl.code == 0);
  CHECK(efl.json()["status"] == "pass");
  CHECK(run({"oracle", "hole_cover", "--fixture", "paper_fig1", "--json"}).json()["optimal"] == true);
  const Run nc = run({"oracle", "nc", "--fixture", "paper_fig1", "--cover", R"(["u","v","w","x"])", "--json"});
  CHECK(nc.json()["ok"] == false);
  CHECK(nc.json()["hole_cover"] == true);
  CHECK(run({"oracle", "nothing", "--gen", "cycle:4"}).code == 2);
  CHECK(run({"oracle", "list", "--gen", "cycle:4"}).code == 2);
}
