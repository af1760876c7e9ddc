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

#include "cxg/grammar.hpp"
#include "cxg/ofef.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cxg;
using cxg::test::make_dog_cxn;
using cxg::test::resource_path;
using cxg::test::TestRng;

TEST_CASE("adding the dog construction grows the demo grammar to seven") {
  Grammar grammar =
      load_grammar_from_file(resource_path("demo-resultative.ofef.json"));
  REQUIRE(grammar.size() == 6);
  grammar.add_cxn(make_dog_cxn());
  CHECK(grammar.size() == 7);
  CHECK(grammar.has_cxn("dog-cxn"));
}

TEST_CASE("adding to an empty grammar") {
  Grammar grammar;
  grammar.add_cxn(make_dog_cxn());
  CHECK(grammar.size() == 1);
}

TEST_CASE("duplicate names are rejected unless replacing") {
  Grammar grammar;
  grammar.add_cxn(make_dog_cxn());
  CHECK_THROWS_AS(grammar.add_cxn(make_dog_cxn()), DuplicateNameError);
  Construction replacement = make_dog_cxn();
  replacement.set_score(0.9);
  grammar.add_cxn(replacement, /*replace=*/true);
  CHECK(grammar.size() == 1);
  CHECK(grammar.cxn("dog-cxn").get_score() == doctest::Approx(0.9));
}

TEST_CASE("delete_cxn removes and re-add starts fresh") {
  Grammar grammar;
  grammar.add_cxn(make_dog_cxn());
  grammar.cxn("dog-cxn").set_score(0.9);
  grammar.delete_cxn("dog-cxn");
  CHECK(grammar.size() == 0);
  CHECK_THROWS_AS(grammar.delete_cxn("dog-cxn"), UnknownNameError);
  grammar.add_cxn(make_dog_cxn());
  CHECK(grammar.size() == 1);
  CHECK(grammar.cxn("dog-cxn").get_score() == doctest::Approx(0.5));
}

TEST_CASE("add then delete restores the name set") {
  Grammar grammar =
      load_grammar_from_file(resource_path("demo-resultative.ofef.json"));
  const auto names = grammar.cxn_names();
  grammar.add_cxn(make_dog_cxn());
  grammar.delete_cxn("dog-cxn");
  CHECK(grammar.cxn_names() == names);
}

TEST_CASE("score updates clamp to the unit interval") {
  Construction cxn = make_dog_cxn();
  cxn.set_score(0.5);
  cxn.increase_score(0.1);
  CHECK(cxn.get_score() == doctest::Approx(0.6));
  cxn.set_score(0.1);
  cxn.decrease_score(0.2);
  CHECK(cxn.get_score() == doctest::Approx(0.0));
  cxn.set_score(0.95);
  cxn.increase_score(0.1);
  CHECK(cxn.get_score() == doctest::Approx(1.0));
}

TEST_CASE("random score walks stay in bounds") {
  TestRng rng(5);
  Construction cxn = make_dog_cxn();
  for (int i = 0; i < 2000; ++i) {
    const double delta = static_cast<double>(rng.below(30)) / 100.0;
    if (rng.chance(0.5)) {
      cxn.increase_score(delta);
    } else {
      cxn.decrease_score(delta);
    }
    CHECK(cxn.get_score() >= 0.0);
    CHECK(cxn.get_score() <= 1.0);
  }
}

TEST_CASE("categorial links are symmetric with identity") {
  CategorialNetwork net;
  net.add_category("dog-cxn");
  net.add_category("np-cxn-n");
  net.add_category("resultative-cxn");
  net.add_link("dog-cxn", "np-cxn-n");
  CHECK(net.linked("dog-cxn", "np-cxn-n"));
  CHECK(net.linked("np-cxn-n", "dog-cxn"));
  CHECK(net.linked("dog-cxn", "dog-cxn"));
  CHECK_FALSE(net.linked("dog-cxn", "resultative-cxn"));
  CHECK_THROWS_AS(net.add_link("dog-cxn", "missing"), UnknownNameError);
}

TEST_CASE("constructions need a conditional pole and proper hash placement") {
  CHECK_THROWS_AS(Construction("bad-cxn", {}, {}), Error);

  ConditionalUnit cu;
  cu.name = Term::var("?u");
  cu.formulation_lock.set(
      "#form", FeatureValue::predicates({Predicate(
                   "sequence", {Term::str("x"), Term::var("?l"),
                                Term::var("?r")})}));
  CHECK_THROWS_AS(Construction("bad-cxn", {}, {cu}), Error);
}
