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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "catch2/catch_amalgamated.hpp"
#include "json.hpp"
#include "matsplit/cli.hpp"

namespace {

using json = nlohmann::json;
using namespace matsplit;

struct CliRun {
  int rc = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"matsplit"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return CliRun{rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli split prints the split representation") {
  CliRun r = run({"split", "R10", "4", "5"});
  REQUIRE(r.rc == 0);
  REQUIRE(r.out.substr(0, 5) == "6 10\n");

  MatrixText parsed = read_matrix_text(r.out);
  REQUIRE(parsed.labels.has_value());
  BinaryMatroid round_trip = from_matrix(parsed.matrix, *parsed.labels);
  BinaryMatroid direct = split(catalog_get("R10").as_matroid(), SplitPair{"4", "5"});
  REQUIRE(same_matroid(round_trip, direct));

  CliRun j = run({"split", "R10", "4", "5", "--json"});
  REQUIRE(j.rc == 0);
  json parsed_json = json::parse(j.out);
  REQUIRE(parsed_json["rank"] == 6);
  REQUIRE(parsed_json["elements"].size() == 10);
  REQUIRE(parsed_json["rows"].size() == 6);

  CliRun bad = run({"split", "R10", "4", "nope"});
  REQUIRE(bad.rc == 2);
  REQUIRE(bad.err.find("error:") == 0);
}

TEST_CASE("cli split-graph matches the library and rejects bad pairs") {
  CliRun r = run({"split-graph", "K4", "12", "13"});
  REQUIRE(r.rc == 0);
  Multigraph expected = split_graph(*catalog_get("K4").graph, SplitPair{"12", "13"});
  REQUIRE(r.out == graph_to_text(expected));

  REQUIRE(run({"split-graph", "K4", "12", "34"}).rc == 2);  // not adjacent
  REQUIRE(run({"split-graph", "R10", "1", "2"}).rc == 2);   // not a graph
}

TEST_CASE("cli classify reports flags and witnesses") {
  CliRun r10 = run({"classify", "R10"});
  REQUIRE(r10.rc == 0);
  REQUIRE(r10.out.find("regular: yes") != std::string::npos);
  REQUIRE(r10.out.find("graphic: no") != std::string::npos);
  REQUIRE(r10.out.find("cographic: no") != std::string::npos);

  CliRun k4 = run({"classify", "K4"});
  REQUIRE(k4.rc == 0);
  REQUIRE(k4.out.find("witness") == std::string::npos);  // nothing excluded

  json f7 = json::parse(run({"classify", "F7", "--json"}).out);
  REQUIRE(f7["regular"] == false);
  REQUIRE(f7["graphic"] == false);
  REQUIRE(f7["cographic"] == false);
  REQUIRE(f7["witnesses"]["regular"]["forbidden"] == "F7");
}

TEST_CASE("cli has-minor verdicts map to exit codes") {
  CliRun hit = run({"has-minor", "R10", "G1", "--json"});
  REQUIRE(hit.rc == 0);
  json w = json::parse(hit.out);
  REQUIRE(w["delete"].empty());
  REQUIRE(w["contract"] == json::array({"1", "2"}));
  REQUIRE(w["bijection"].size() == 8);

  CliRun miss = run({"has-minor", "R10", "F7"});
  REQUIRE(miss.rc == 1);
  REQUIRE(miss.out.find("no minor") != std::string::npos);
  REQUIRE(json::parse(run({"has-minor", "R10", "F7", "--json"}).out)["found"] ==
          false);

  REQUIRE(run({"has-minor", "K4", "R10"}).rc == 2);  // target too large
}

TEST_CASE("cli decide maps verdicts and preconditions") {
  CliRun yes = run({"decide", "--case", "1.3", "K4"});
  REQUIRE(yes.rc == 0);
  REQUIRE(yes.out.find("verdict: true") != std::string::npos);
  REQUIRE(yes.out.find("precondition: passed") != std::string::npos);

  CliRun no = run({"decide", "--case", "3.2", "R10"});
  REQUIRE(no.rc == 1);
  REQUIRE(no.out.find("verdict: false") != std::string::npos);
  REQUIRE(no.out.find("witness: G1") != std::string::npos);

  json ma1 = json::parse(run({"decide", "--case", "3.4", "MA1", "--json"}).out);
  REQUIRE(ma1["precondition"] == "violated");
  REQUIRE(ma1["tilde_witness"] == "K33");
  REQUIRE(ma1["verdict"] == false);
  REQUIRE(ma1["witness"]["forbidden"] == "G1");

  REQUIRE(run({"decide", "--case", "9.9", "K4"}).rc == 2);   // unknown case
  REQUIRE(run({"decide", "--case", "1.3", "R10"}).rc == 2);  // not graphic
  REQUIRE(run({"decide", "K4"}).rc == 2);                    // --case required
}

TEST_CASE("cli export round-trips every catalog entry") {
  for (const std::string& name : catalog_names()) {
    CliRun r = run({"export", name});
    REQUIRE(r.rc == 0);
    CatalogEntry entry = catalog_get(name);
    BinaryMatroid loaded = [&] {
      if (entry.is_graph()) return from_graph(read_graph_text(r.out));
      MatrixText mt = read_matrix_text(r.out);
      REQUIRE(mt.labels.has_value());
      return from_matrix(mt.matrix, *mt.labels);
    }();
    INFO("catalog entry " << name);
    REQUIRE(isomorphic(loaded, entry.as_matroid()).has_value());
  }

  // A written export file is accepted wherever a path is expected.
  const std::string path =
      (std::filesystem::temp_directory_path() / "matsplit_cli_r10.txt").string();
  std::ofstream(path) << run({"export", "R10"}).out;
  REQUIRE(run({"has-minor", path, "R10"}).rc == 0);
  std::filesystem::remove(path);

  REQUIRE(run({"export", "NOPE"}).rc == 2);
}

TEST_CASE("cli flags thread through to the library") {
  CliRun bounded = run({"has-minor", "R10", "G1", "--max-elements", "9"});
  REQUIRE(bounded.rc == 2);
  REQUIRE(bounded.err.find("enumeration bound") != std::string::npos);

  REQUIRE(run({"classify", "K4", "--seed", "7"}).rc == 0);
  REQUIRE(run({"nonsense"}).rc == 2);
  REQUIRE(run({}).rc == 2);
  REQUIRE(run({"--help"}).rc == 0);
}

TEST_CASE("cli json output is stable under re-runs") {
  for (int pass = 0; pass < 2; ++pass) {
    REQUIRE(run({"has-minor", "MA1", "R10", "--json"}).out ==
            run({"has-minor", "MA1", "R10", "--json"}).out);
    REQUIRE(run({"classify", "MA1", "--json"}).out ==
            run({"classify", "MA1", "--json"}).out);
  }
}

TEST_CASE("cli verify-paper emits one passing record per criterion") {
  CliRun r = run({"verify-paper"});
  REQUIRE(r.rc == 0);
  json records = json::parse(r.out);
  REQUIRE(records.size() == 9);
  for (const json& rec : records) {
    INFO("criterion " << rec["id"] << " " << rec["name"] << ": "
                      << rec["detail"]);
    REQUIRE(rec["passed"] == true);
    REQUIRE(rec.contains("seconds"));
  }
}

#ifdef MATSPLIT_CLI_PATH
TEST_CASE("cli binary exits with the documented status codes") {
  auto shell = [](const std::string& args) {
    std::string cmd = std::string(MATSPLIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
    int status = pclose(pipe);
    return std::pair<int, std::string>(WEXITSTATUS(status), out);
  };

  auto [rc0, out0] = shell("split R10 4 5");
  REQUIRE(rc0 == 0);
  REQUIRE(out0.substr(0, 5) == "6 10\n");
  REQUIRE(shell("decide --case 3.2 R10").first == 1);
  REQUIRE(shell("classify NOPE").first == 2);
}
#endif
