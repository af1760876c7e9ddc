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
#include <fstream>
#include <string>
#include <vector>

#include "cxg/engine.hpp"
#include "cxg/ofef.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cxg;
using cxg::test::resource_path;
using cxg::test::TestRng;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/cxg-test-") + std::to_string(::getpid()) + "-" +
         name;
}


}  // namespace

TEST_CASE("the bundled demo grammar loads with the six expected names") {
  Grammar grammar =
      load_grammar_from_file(resource_path("demo-resultative.ofef.json"));
  CHECK(grammar.cxn_names() ==
        std::vector<std::string>{"firefighters-cxn", "child-cxn", "cut-cxn",
                                 "free-cxn", "np-cxn", "resultative-cxn"});
  CHECK(grammar.categorial_network().linked("child-cxn", "np-cxn-n"));
}

TEST_CASE("a document with zero constructions is an empty grammar") {
  Grammar grammar = grammar_from_ofef_json(
      "{\"format_version\": \"ofef-inspired-v1\", \"constructions\": []}");
  CHECK(grammar.empty());
}

TEST_CASE("truncated JSON is a malformed document") {
  CHECK_THROWS_AS(
      grammar_from_ofef_json("{\"format_version\": \"ofef-inspired-v1\""),
      MalformedDocumentError);
}

TEST_CASE("missing and unsupported versions are rejected") {
  CHECK_THROWS_AS(grammar_from_ofef_json("{\"constructions\": []}"),
                  MalformedDocumentError);
  CHECK_THROWS_AS(
      grammar_from_ofef_json(
          "{\"format_version\": \"ofef-inspired-v99\", \"constructions\": []}"),
      VersionUnsupportedError);
}

TEST_CASE("scores default to 0.5 when absent") {
  Grammar grammar = grammar_from_ofef_json(R"({
    "format_version": "ofef-inspired-v1",
    "constructions": [{
      "name": "x-cxn",
      "conditional_pole": [["?u", {}, {"#form": [["sequence", "\"x\"", "?l", "?r"]]}]]
    }]
  })");
  CHECK(grammar.cxn("x-cxn").get_score() == doctest::Approx(0.5));
}

TEST_CASE("loading a missing file reports not-found") {
  CHECK_THROWS_AS(load_grammar_from_file("/nonexistent/g.ofef.json"),
                  FileNotFoundError);
}

TEST_CASE("OFEF save-load-save is byte-identical on random grammars") {
  TestRng rng(2026);
  for (int round = 0; round < 50; ++round) {
    Grammar grammar = cxg::test::random_grammar(rng);
    const std::string first = grammar_to_ofef_json(grammar);
    Grammar reloaded = grammar_from_ofef_json(first);
    const std::string second = grammar_to_ofef_json(reloaded);
    REQUIRE(first == second);
  }
}

TEST_CASE("unknown fields survive a document load-then-save") {
  const std::string path = temp_path("extra.ofef.json");
  {
    std::ofstream out(path);
    out << R"({
      "format_version": "ofef-inspired-v1",
      "constructions": [],
      "x-custom-annotations": {"origin": "hand-written", "revision": 7}
    })";
  }
  OfefDocument document = load_ofef_document(path);
  const std::string out_path = temp_path("extra-out.ofef.json");
  save_ofef_document(document, out_path);
  std::ifstream in(out_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("x-custom-annotations") != std::string::npos);
  CHECK(text.find("hand-written") != std::string::npos);
  std::remove(path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("image roundtrip preserves the whole grammar") {
  Grammar grammar =
      load_grammar_from_file(resource_path("demo-resultative.ofef.json"));
  const std::vector<std::uint8_t> bytes = grammar_to_image_bytes(grammar);
  Grammar reloaded = grammar_from_image_bytes(bytes);
  CHECK(reloaded.size() == grammar.size());
  CHECK(reloaded.cxn_names() == grammar.cxn_names());
  CHECK(reloaded.categorial_network() == grammar.categorial_network());
  for (const Construction& cxn : grammar.cxns()) {
    CHECK(reloaded.cxn(cxn.name()) == cxn);
  }
  CHECK(grammar_to_image_bytes(reloaded) == bytes);
}

TEST_CASE("an empty grammar image roundtrips") {
  Grammar grammar;
  Grammar reloaded = grammar_from_image_bytes(grammar_to_image_bytes(grammar));
  CHECK(reloaded.size() == 0);
}

TEST_CASE("corrupted magic is rejected") {
  Grammar grammar;
  std::vector<std::uint8_t> bytes = grammar_to_image_bytes(grammar);
  bytes[0] = 'X';
  CHECK_THROWS_AS(grammar_from_image_bytes(bytes), BadMagicError);
}

TEST_CASE("unsupported image versions are rejected") {
  Grammar grammar;
  std::vector<std::uint8_t> bytes = grammar_to_image_bytes(grammar);
  bytes[4] = 0x7f;
  CHECK_THROWS_AS(grammar_from_image_bytes(bytes), VersionUnsupportedError);
}

TEST_CASE("truncated images are rejected") {
  Grammar grammar =
      load_grammar_from_file(resource_path("demo-resultative.ofef.json"));
  std::vector<std::uint8_t> bytes = grammar_to_image_bytes(grammar);
  bytes.resize(bytes.size() / 2);
  CHECK_THROWS_AS(grammar_from_image_bytes(bytes), MalformedDocumentError);
}

TEST_CASE("image roundtrip preserves comprehension behavior") {
  Grammar grammar =
      load_grammar_from_file(resource_path("demo-resultative.ofef.json"));
  Engine engine;
  auto [before, c1] =
      engine.comprehend(grammar, cxg::test::kResultativeUtterance);
  REQUIRE(before.has_value());

  const std::string path = temp_path("demo.ofgi");
  save_grammar_image(grammar, path);
  Grammar reloaded = load_grammar_image(path);
  std::remove(path.c_str());

  auto [after, c2] =
      engine.comprehend(reloaded, cxg::test::kResultativeUtterance);
  REQUIRE(after.has_value());
  CHECK(predicate_network_to_penman(*before) ==
        predicate_network_to_penman(*after));
}
