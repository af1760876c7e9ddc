// Copyright 2026 The cxg Authors
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
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string temp(const std::string& name) {
  return std::string("/tmp/cxg-cli-") + std::to_string(::getpid()) + "-" +
         name;
}

// Runs the CLI with stdout+stderr captured; stdin from `input` when given.
RunResult run_cli(const std::string& args, const std::string& input = "") {
  const std::string out_path = temp("out.txt");
  std::string command = std::string(CXG_CLI_PATH) + " " + args;
  if (!input.empty()) {
    const std::string in_path = temp("in.txt");
    std::ofstream in(in_path, std::ios::trunc);
    in << input;
    in.close();
    command += " < " + in_path;
  }
  command += " > " + out_path + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  return result;
}

const std::string kDemoGrammar =
    cxg::test::resource_path("demo-resultative.ofef.json");

}  // namespace

TEST_CASE("comprehend prints the canonical meaning of the demo utterance") {
  RunResult result = run_cli("comprehend --grammar " + kDemoGrammar +
                             " --utterance \"Firefighters cut the child "
                             "free.\"");
  CHECK(result.exit_code == 0);
  CHECK(cxg::test::collapse_whitespace(result.out) ==
        cxg::test::kChildPenman);
}

TEST_CASE("pretty mode spreads roles over indented lines") {
  RunResult result = run_cli("comprehend --grammar " + kDemoGrammar +
                             " --utterance \"Firefighters cut the child "
                             "free.\" --pretty");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("\n      :arg0 ") != std::string::npos);
  CHECK(cxg::test::collapse_whitespace(result.out) ==
        cxg::test::kChildPenman);
}

TEST_CASE("formulate inverts comprehend through the CLI") {
  const std::string penman = run_cli("comprehend --grammar " + kDemoGrammar +
                                     " --utterance \"Firefighters cut the "
                                     "child free.\"")
                                 .out;
  RunResult result = run_cli(
      "formulate --grammar " + kDemoGrammar + " --penman -", penman);
  CHECK(result.exit_code == 0);
  CHECK(result.out == "Firefighters cut the child free.\n");
}

TEST_CASE("missing grammar file exits 2") {
  RunResult result =
      run_cli("comprehend --grammar /nonexistent.ofef.json --utterance x");
  CHECK(result.exit_code == 2);
}

TEST_CASE("malformed grammar file exits 1") {
  const std::string path = temp("broken.ofef.json");
  std::ofstream(path) << "{ not json";
  RunResult result =
      run_cli("comprehend --grammar " + path + " --utterance x");
  CHECK(result.exit_code == 1);
  std::remove(path.c_str());
}

TEST_CASE("an utterance outside the grammar exits 3") {
  RunResult result = run_cli("comprehend --grammar " + kDemoGrammar +
                             " --utterance \"xyzzy\"");
  CHECK(result.exit_code == 3);
}

TEST_CASE("a search that exhausts its node budget exits 4") {
  const std::string path = temp("capped.ofef.json");
  std::ofstream(path) << R"({
    "format_version": "ofef-inspired-v1",
    "config": {"max_nodes": 1},
    "constructions": [{
      "name": "dog-cxn",
      "conditional_pole": [["?u",
        {"#meaning": [["dog", "?d"]]},
        {"#form": [["sequence", "\"dog\"", "?l", "?r"]]}]]
    }]
  })";
  RunResult result =
      run_cli("comprehend --grammar " + path + " --utterance dog");
  CHECK(result.exit_code == 4);
  std::remove(path.c_str());
}

TEST_CASE("trace reports are written even without a solution") {
  const std::string trace = temp("trace.html");
  RunResult result = run_cli("comprehend --grammar " + kDemoGrammar +
                             " --utterance \"xyzzy\" --trace " + trace);
  CHECK(result.exit_code == 3);
  const std::string html = slurp(trace);
  CHECK(html.rfind("<!DOCTYPE html>", 0) == 0);
  CHECK(html.find("</html>") != std::string::npos);
  CHECK(html.find("found no solution") != std::string::npos);
  std::remove(trace.c_str());
}

TEST_CASE("trace reports balance their tags and embed the derivation") {
  const std::string trace = temp("trace-ok.html");
  RunResult result = run_cli("comprehend --grammar " + kDemoGrammar +
                             " --utterance \"Firefighters cut the child "
                             "free.\" --trace " + trace);
  CHECK(result.exit_code == 0);
  const std::string html = slurp(trace);
  auto count = [&](const std::string& needle) {
    int n = 0;
    for (std::size_t at = 0; (at = html.find(needle, at)) != std::string::npos;
         at += needle.size()) {
      ++n;
    }
    return n;
  };
  CHECK(count("<table>") == count("</table>"));
  CHECK(count("<pre>") == count("</pre>"));
  CHECK(count("<h2>") == count("</h2>"));
  CHECK(html.find("resultative-cxn") != std::string::npos);
  CHECK(html.find("Final output") != std::string::npos);
  std::remove(trace.c_str());
}

TEST_CASE("naming-game writes a CSV with one row per interaction") {
  const std::string metrics = temp("metrics.csv");
  RunResult result = run_cli(
      "naming-game --agents 10 --objects 5 --interactions 1500 --seed 8 "
      "--out " + metrics);
  CHECK(result.exit_code == 0);
  CHECK(result.out.rfind("final windowed success:", 0) == 0);
  const std::string csv = slurp(metrics);
  int lines = 0;
  for (char c : csv) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 1501);  // header + 1500 rows
  std::remove(metrics.c_str());
}

TEST_CASE("naming-game runs are reproducible byte-for-byte given a seed") {
  const std::string a = temp("a.csv");
  const std::string b = temp("b.csv");
  run_cli("naming-game --agents 6 --objects 3 --interactions 300 --seed 5 "
          "--out " + a);
  run_cli("naming-game --agents 6 --objects 3 --interactions 300 --seed 5 "
          "--out " + b);
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("naming-game accepts a JSON config file") {
  const std::string config = temp("exp.json");
  std::ofstream(config) << R"({
    "nr_of_agents": 4, "nr_of_objects": 2, "seed": 9, "interactions": 50
  })";
  const std::string metrics = temp("cfg-metrics.json");
  RunResult result =
      run_cli("naming-game --config " + config + " --out " + metrics);
  CHECK(result.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(slurp(metrics));
  CHECK(doc["success"].size() == 50);
  std::remove(config.c_str());
  std::remove(metrics.c_str());
}

TEST_CASE("learn-propbank then extract-frames reproduces the golden frame") {
  const std::string image = temp("pb.ofgi");
  RunResult learnt =
      run_cli("learn-propbank --conll " +
              cxg::test::resource_path("pb-annotations.conll") +
              " --save-image " + image);
  CHECK(learnt.exit_code == 0);
  CHECK(learnt.out.find("give(v)-cxn") != std::string::npos);

  RunResult frames =
      run_cli("extract-frames --image " + image + " --input " +
              cxg::test::resource_path("forrest-gump.tokens.json"));
  CHECK(frames.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(frames.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["roleset"] == "send.01");
  REQUIRE(doc[0]["roles"].size() == 4);
  CHECK(doc[0]["roles"][0] == nlohmann::json::array({"v", "sent"}));
  CHECK(doc[0]["roles"][1] ==
        nlohmann::json::array({"arg0", "The King of the Belgians"}));
  std::remove(image.c_str());
}

TEST_CASE("penman filters convert in both directions") {
  RunResult network = run_cli("penman --to-network", "(d / dog)");
  CHECK(network.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(network.out);
  CHECK(doc == nlohmann::json::parse(R"([["dog", "d"]])"));

  RunResult penman =
      run_cli("penman --to-penman", R"([["dog","d"],["arg1","d","c"],["cat","c"]])");
  CHECK(penman.exit_code == 0);
  CHECK(penman.out == "(d / dog :arg1 (c / cat))\n");

  RunResult invalid = run_cli("penman --to-network", "(d / dog");
  CHECK(invalid.exit_code == 1);
}

TEST_CASE("grammar info lists constructions in order") {
  RunResult result = run_cli("grammar info " + kDemoGrammar);
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("size: 6") != std::string::npos);
  const std::vector<std::string> names{
      "firefighters-cxn", "child-cxn", "cut-cxn",
      "free-cxn",         "np-cxn",    "resultative-cxn"};
  std::size_t at = 0;
  for (const std::string& name : names) {
    at = result.out.find(name, at);
    REQUIRE(at != std::string::npos);
  }
}
