// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  json report;  // null when stdout was empty or not JSON
  std::string raw;
};

std::string temp_dir() {
  static int counter = 0;
  std::string dir = "cli_test_tmp_" + std::to_string(counter++);
  if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0)
    FAIL("cannot create temp dir");
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_path = "cli_test_out_" + std::to_string(counter++);
  std::string cmd = std::string(FLAMES_CLI_PATH) + " " + args + " > " + out_path +
                    " 2> " + out_path + ".err";
  int status = std::system(cmd.c_str());
  int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string raw = buffer.str();
  std::remove(out_path.c_str());
  std::remove((out_path + ".err").c_str());

  json report;
  if (!raw.empty() && raw[0] == '{') report = json::parse(raw, nullptr, false);
  return {exit_code, std::move(report), std::move(raw)};
}

std::string fixture(const std::string& name) {
  return std::string(FLAMES_FIXTURES_DIR) + "/" + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("lambda emits the connectivity table") {
  RunResult r = run_cli("lambda " + fixture("fx2.graph"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.report.is_object());
  const json& table = r.report["result"]["lambda"];
  CHECK(table["a"] == "1/1");
  CHECK(table["b"] == "1/1");
  CHECK(table["v"] == "2/1");
  CHECK(r.report["command"] == "lambda");
  CHECK(r.report["warnings"].empty());
  CHECK(r.report["vertex_index"]["r"] == 0);
}

TEST_CASE("extract on a graph that is already a flame returns it unchanged") {
  RunResult r = run_cli("extract " + fixture("fx1.graph"));
  REQUIRE(r.exit_code == 0);
  for (const json& row : r.report["result"]["f"]) CHECK(row["value"] == "1/1");
  CHECK(r.report["result"]["report"]["is_flame"] == true);
  CHECK(r.report["result"]["report"]["preserves"] == true);
  CHECK(r.report["mode"] == "integral");
  CHECK(r.report["result"]["subgraph"].size() == 4);
}

TEST_CASE("extract then verify round-trips through the f file") {
  std::string dir = temp_dir();
  for (const std::string name : {"fx1", "fx2", "fx3", "fx4", "fx5", "fx6"}) {
    std::string f_path = dir + "/" + name + ".f";
    RunResult ext = run_cli("extract " + fixture(name + ".graph") + " --emit-f " + f_path);
    REQUIRE(ext.exit_code == 0);
    RunResult ver =
        run_cli("verify " + fixture(name + ".graph") + " --against " + f_path);
    CHECK(ver.exit_code == 0);
    CHECK(ver.report["result"]["report"]["is_flame"] == true);
    CHECK(ver.report["result"]["report"]["preserves"] == true);
    CHECK(ver.report["result"]["report"]["f_le_c"] == true);
  }
}

TEST_CASE("verify against a non-flame exits 1") {
  RunResult r = run_cli("verify " + fixture("fx2.graph") + " --against " +
                        fixture("fx2.graph"));
  CHECK(r.exit_code == 1);
  CHECK(r.report["result"]["report"]["is_flame"] == false);
  const json& at_v = r.report["result"]["report"]["vertices"]["v"];
  CHECK(at_v["lambda_f"] == "2/1");
  CHECK(at_v["rho_f"] == "3/1");
}

TEST_CASE("extract honors an explicit order and a shuffle seed") {
  RunResult ordered =
      run_cli("extract " + fixture("fx2.graph") + " --order v,b,a");
  REQUIRE(ordered.exit_code == 0);
  CHECK(ordered.report["vertex_order"] == json::array({"v", "b", "a"}));

  RunResult s1 = run_cli("extract " + fixture("fx2.graph") + " --shuffle-seed 9");
  RunResult s2 = run_cli("extract " + fixture("fx2.graph") + " --shuffle-seed 9");
  CHECK(s1.report["vertex_order"] == s2.report["vertex_order"]);

  RunResult bad = run_cli("extract " + fixture("fx2.graph") + " --order v,b");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("decompose reports the exact paths") {
  RunResult r = run_cli("decompose " + fixture("fx5.graph") + " --sink v");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["amount"] == "5/6");
  CHECK(r.report["result"]["decomposition"]["paths"].size() == 2);
  CHECK(r.report["result"]["decomposition"]["cycles"].empty());

  RunResult missing = run_cli("decompose " + fixture("fx5.graph") + " --sink nope");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("greedoid-check confirms the fixtures") {
  RunResult r = run_cli("greedoid-check " + fixture("fx3.graph"));
  REQUIRE(r.exit_code == 0);
  const json& rep = r.report["result"]["report"];
  CHECK(rep["flame_set_count"] == 3);
  CHECK(rep["augmentation"] == true);
  CHECK(rep["accessible"] == true);
  CHECK(rep["basis_sizes"] == json::array({2}));
  CHECK(rep["sum_lambda"] == 2);
  CHECK(r.report["result"]["greedoid"] == true);
}

TEST_CASE("greedoid-check refuses oversized ground sets") {
  std::string dir = temp_dir();
  std::ostringstream text;
  text << "root r\n";
  for (int i = 0; i < 13; ++i) text << "arc r v\n";
  write_file(dir + "/big.graph", text.str());
  RunResult r = run_cli("greedoid-check " + dir + "/big.graph");
  CHECK(r.exit_code == 3);
  RunResult forced = run_cli("greedoid-check " + dir + "/big.graph --max-edges 13");
  CHECK(forced.exit_code == 0);
}

TEST_CASE("augment performs one integral step") {
  std::string dir = temp_dir();
  write_file(dir + "/h.graph", "root r\narc r a 1\narc a v 0\n");
  RunResult r = run_cli("augment " + fixture("fx3.graph") + " --flame " + dir +
                        "/h.graph --vertex v");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["step"]["edge"] == 1);
  CHECK(r.report["result"]["step"]["epsilon"].is_null());
  CHECK(r.report["result"]["step"]["tight_set"]["vertices"] == json::array({"v"}));

  // no deficit: the flame already matches the digraph
  RunResult full = run_cli("augment " + fixture("fx3.graph") + " --flame " +
                           fixture("fx3.graph") + " --vertex v");
  CHECK(full.exit_code == 1);
}

TEST_CASE("augment performs one fractional step") {
  std::string dir = temp_dir();
  write_file(dir + "/y.graph", "root r\narc r a 1\narc a u 1\narc r u 0\n");
  RunResult r = run_cli("augment " + fixture("fx6.graph") + " --flame " + dir +
                        "/y.graph --vertex u --fractional");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["step"]["edge"] == 2);
  CHECK(r.report["result"]["step"]["epsilon"] == "1/1");
  CHECK(r.report["result"]["step"]["tight_set"]["vertices"] == json::array({"a", "u"}));
  for (const json& row : r.report["result"]["augmented"])
    if (row["edge"] == 2) CHECK(row["value"] == "1/1");
}

TEST_CASE("malformed input exits 2 with a line number on stderr") {
  std::string dir = temp_dir();
  write_file(dir + "/bad.graph", "root r\narc r v kaput\n");
  RunResult r = run_cli("lambda " + dir + "/bad.graph");
  CHECK(r.exit_code == 2);
  CHECK(r.report.is_null());

  RunResult missing = run_cli("lambda " + dir + "/does_not_exist.graph");
  CHECK(missing.exit_code == 2);

  RunResult no_args = run_cli("lambda");
  CHECK(no_args.exit_code == 2);
}

TEST_CASE("arcs into the root are dropped with a warning") {
  std::string dir = temp_dir();
  write_file(dir + "/into_root.graph", "root r\narc r v\narc v r\n");
  RunResult r = run_cli("lambda " + dir + "/into_root.graph");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.report["warnings"].size() == 1);
  std::string warning = r.report["warnings"][0];
  CHECK(warning.find("root") != std::string::npos);
  CHECK(r.report["result"]["lambda"]["v"] == "1/1");
}

TEST_CASE("fractional mode merges parallel arcs before extracting") {
  std::string dir = temp_dir();
  write_file(dir + "/par.graph", "root r\narc r v 1/2\narc r v 1/3\n");
  RunResult r = run_cli("extract " + dir + "/par.graph");
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["mode"] == "fractional");
  REQUIRE(r.report["result"]["f"].size() == 1);
  CHECK(r.report["result"]["f"][0]["value"] == "5/6");
}
