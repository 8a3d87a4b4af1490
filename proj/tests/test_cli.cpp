// Copyright 2026 The Observa Authors
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

#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "observa/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("observa_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(OBSERVA_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("cli gen is deterministic and writes the expected edge count") {
  Scratch s;
  REQUIRE(run("gen --kind csf --n 200 --seed 4 --out " + s.file("a.edges")) == 0);
  REQUIRE(run("gen --kind csf --n 200 --seed 4 --out " + s.file("b.edges")) == 0);
  CHECK(slurp(s.file("a.edges")) == slurp(s.file("b.edges")));
  auto g = observa::load_edge_list_file(s.file("a.edges")).graph;
  CHECK(g.num_nodes() == 200);
  CHECK(g.num_edges() == 3 + 2 * 197);
}

TEST_CASE("cli analyze") {
  Scratch s;
  spit(s.file("tri.edges"), "a b\nb c\nc a\n");
  REQUIRE(run("analyze " + s.file("tri.edges") + " --out " + s.file("tri.json")) == 0);
  auto tri = nlohmann::json::parse(slurp(s.file("tri.json")));
  CHECK(tri["contraction_report"]["num_contractions"] == 0);
  CHECK(tri["metrics"]["gcc"] == 1.0);

  spit(s.file("star.edges"), "0 1\n0 2\n0 3\n");
  REQUIRE(run("analyze --in " + s.file("star.edges") + " --out " + s.file("star.json")) == 0);
  auto star = nlohmann::json::parse(slurp(s.file("star.json")));
  CHECK(star["contraction_report"]["num_contractions"] == 2);
  CHECK(star["mean_contraction_size"] == 3.0);
  CHECK(star["measurement_set"].size() == 2);
}

TEST_CASE("cli grid writes edges and comparison") {
  Scratch s;
  spit(s.file("star.edges"), "0 1\n0 2\n0 3\n");
  REQUIRE(run("grid --in " + s.file("star.edges") + " --budget 1 --out-edges " +
              s.file("add.edges") + " --out-csv " + s.file("cmp.csv")) == 0);
  auto added = observa::load_edge_list_file(s.file("add.edges")).graph;
  CHECK(added.num_edges() == 1);
  CHECK(slurp(s.file("cmp.csv")).find("after,4,2,0.6,0") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  Scratch s;
  CHECK(run("") == 1);
  CHECK(run("gen --kind er") == 1);
  CHECK(run("gen --n 1") == 1);
  CHECK(run("mc --realizations 0 --quiet") == 1);
  spit(s.file("bad.edges"), "0 1\n2\n");
  CHECK(run("analyze " + s.file("bad.edges")) == 2);
  CHECK(run("analyze " + s.file("missing.edges")) == 3);
  spit(s.file("dir.edges"), "%directed\n0 1\n1 0\n");
  CHECK(run("grid " + s.file("dir.edges")) == 1);
}

TEST_CASE("cli mc output does not depend on --jobs") {
  Scratch s;
  const std::string common = "mc --kinds sf,csf --n-values 100:300:100 --realizations 4 --quiet ";
  REQUIRE(run(common + "--jobs 1 --records " + s.file("r1.csv") + " --aggregates " +
              s.file("a1.csv")) == 0);
  REQUIRE(run(common + "--jobs 3 --records " + s.file("r3.csv") + " --aggregates " +
              s.file("a3.csv")) == 0);
  CHECK(slurp(s.file("r1.csv")) == slurp(s.file("r3.csv")));
  CHECK(slurp(s.file("a1.csv")) == slurp(s.file("a3.csv")));
  CHECK(!slurp(s.file("r1.csv")).empty());
}
