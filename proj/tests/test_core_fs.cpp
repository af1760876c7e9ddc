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

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "cxg/engine.hpp"
#include "cxg/unify.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cxg;
using cxg::test::TestRng;

namespace {

Term atom(const char* s) { return Term::atom(s); }
Term var(const char* s) { return Term::var(s); }

// Compound elements stay ground so the no-occurs-check substitution always
// terminates on generated data.
Term random_ground_term(TestRng& rng, int depth = 0) {
  static const char* kAtoms[] = {"a", "b", "c", "d-1"};
  switch (rng.below(depth > 0 ? 3 : 4)) {
    case 0:
      return Term::atom(kAtoms[rng.below(4)]);
    case 1:
      return Term::integer(static_cast<std::int64_t>(rng.below(5)));
    case 2:
      return Term::str(rng.below(2) == 0 ? "s" : "t");
    default: {
      std::vector<Term> elements;
      const std::uint64_t n = 1 + rng.below(2);
      for (std::uint64_t i = 0; i < n; ++i) {
        elements.push_back(random_ground_term(rng, depth + 1));
      }
      return Term::compound(std::move(elements));
    }
  }
}

Term random_term(TestRng& rng, int depth = 0) {
  static const char* kVars[] = {"?x", "?y", "?z", "?w"};
  if (depth == 0 && rng.chance(0.3)) return Term::var(kVars[rng.below(4)]);
  return random_ground_term(rng, depth);
}

Predicate random_predicate(TestRng& rng) {
  static const char* kNames[] = {"p", "q", "r"};
  std::vector<Term> args;
  const std::uint64_t n = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < n; ++i) args.push_back(random_term(rng));
  return Predicate(kNames[rng.below(3)], std::move(args));
}

// Independent oracle: all injective assignments of pattern onto target,
// checked by sequential predicate unification.
std::vector<std::vector<std::size_t>> brute_force_assignments(
    const std::vector<Predicate>& pattern,
    const std::vector<Predicate>& target) {
  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const Bindings&)> rec =
      [&](std::size_t pi, const Bindings& b) {
        if (pi == pattern.size()) {
          result.push_back(chosen);
          return;
        }
        for (std::size_t ti = 0; ti < target.size(); ++ti) {
          if (std::find(chosen.begin(), chosen.end(), ti) != chosen.end()) {
            continue;
          }
          auto b2 = unify_predicates(pattern[pi], target[ti], b);
          if (!b2) continue;
          chosen.push_back(ti);
          rec(pi + 1, *b2);
          chosen.pop_back();
        }
      };
  rec(0, Bindings{});
  return result;
}

// Character-by-character occurrence scan.
int naive_occurrence_count(const std::string& needle,
                           const std::string& haystack) {
  if (needle.empty()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (haystack.compare(i, needle.size(), needle) == 0) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("unify_terms binds variables to atoms") {
  auto result = unify_terms(var("?x"), atom("dog"), {});
  REQUIRE(result.has_value());
  CHECK(result->walk(var("?x")) == atom("dog"));
  CHECK(result->size() == 1);
}

TEST_CASE("unify_terms on identical atoms extends nothing") {
  auto result = unify_terms(atom("dog"), atom("dog"), {});
  REQUIRE(result.has_value());
  CHECK(result->empty());
}

TEST_CASE("unify_terms accepts directly linked categories") {
  CategorialNetwork net;
  net.add_category("dog-cxn");
  net.add_category("np-cxn-n");
  net.add_link("dog-cxn", "np-cxn-n");
  auto linked = unify_terms(atom("dog-cxn"), atom("np-cxn-n"), {}, &net);
  REQUIRE(linked.has_value());
  CHECK(linked->empty());
  CHECK_FALSE(unify_terms(atom("dog-cxn"), atom("np-cxn-n"), {}).has_value());
  // Direct links only: a two-hop path does not unify.
  net.add_category("res-obj");
  net.add_link("np-cxn-n", "res-obj");
  CHECK_FALSE(unify_terms(atom("dog-cxn"), atom("res-obj"), {}, &net)
                  .has_value());
  CHECK(net.connected("dog-cxn", "res-obj"));
}

TEST_CASE("unify_terms is case-insensitive on atoms, exact on strings") {
  CHECK(unify_terms(atom("Dog"), atom("dog"), {}).has_value());
  CHECK(unify_terms(Term::str("Dog"), Term::str("Dog"), {}).has_value());
  CHECK_FALSE(unify_terms(Term::str("Dog"), Term::str("dog"), {}).has_value());
}

TEST_CASE("match_predicate_set single candidate") {
  std::vector<Predicate> pattern{Predicate("dog", {var("?d")})};
  std::vector<Predicate> target{Predicate("dog", {atom("d-1")}),
                                Predicate("cut-01", {atom("c-1")})};
  auto results = match_predicate_set(pattern, target, {});
  REQUIRE(results.size() == 1);
  CHECK(results[0].matched == std::vector<std::size_t>{0});
  CHECK(results[0].bindings.walk(var("?d")) == atom("d-1"));
}

TEST_CASE("match_predicate_set with no candidate") {
  std::vector<Predicate> pattern{Predicate("dog", {var("?d")})};
  std::vector<Predicate> target{Predicate("cut-01", {atom("c-1")})};
  CHECK(match_predicate_set(pattern, target, {}).empty());
}

TEST_CASE("match_predicate_set enumerates all injective assignments") {
  std::vector<Predicate> pattern{
      Predicate("arg1", {var("?c"), var("?f")})};
  std::vector<Predicate> target{
      Predicate("arg1", {atom("c-1"), atom("f-1")}),
      Predicate("arg1", {atom("c-2"), atom("f-2")})};
  auto results = match_predicate_set(pattern, target, {});
  REQUIRE(results.size() == 2);
  CHECK(results[0].matched == std::vector<std::size_t>{0});
  CHECK(results[1].matched == std::vector<std::size_t>{1});
  CHECK(results[0].bindings.walk(var("?c")) == atom("c-1"));
  CHECK(results[1].bindings.walk(var("?c")) == atom("c-2"));
}

TEST_CASE("match_predicate_set equals brute force on sets up to size 4") {
  TestRng rng(20260808);
  for (int round = 0; round < 600; ++round) {
    std::vector<Predicate> pattern;
    std::vector<Predicate> target;
    const std::uint64_t np = rng.below(4);
    const std::uint64_t nt = rng.below(5);
    for (std::uint64_t i = 0; i < np; ++i) {
      pattern.push_back(random_predicate(rng));
    }
    for (std::uint64_t i = 0; i < nt; ++i) {
      target.push_back(random_predicate(rng));
    }
    auto expected = brute_force_assignments(pattern, target);
    auto actual = match_predicate_set(pattern, target, {});
    REQUIRE(actual.size() == expected.size());
    for (std::size_t i = 0; i < actual.size(); ++i) {
      CHECK(actual[i].matched == expected[i]);
    }
  }
}

TEST_CASE("match_sequence finds the paper occurrence") {
  TransientStructure ts = Engine::de_render("Firefighters cut the dog free.");
  Predicate pattern("sequence",
                    {Term::str("dog"), var("?l"), var("?r")});
  auto results = match_sequence(pattern, ts.form(), {});
  REQUIRE(results.size() == 1);
  CHECK(results[0].start == 21);
  CHECK(results[0].end == 24);
  CHECK(results[0].bindings.walk(var("?l")) == Term::integer(21));
  CHECK(results[0].bindings.walk(var("?r")) == Term::integer(24));
}

TEST_CASE("match_sequence matches the whole string") {
  TransientStructure ts = Engine::de_render("dog");
  Predicate pattern("sequence", {Term::str("dog"), var("?l"), var("?r")});
  auto results = match_sequence(pattern, ts.form(), {});
  REQUIRE(results.size() == 1);
  CHECK(results[0].start == 0);
  CHECK(results[0].end == 3);
}

TEST_CASE("match_sequence enumerates left-to-right occurrences") {
  TransientStructure ts = Engine::de_render("the theory");
  Predicate pattern("sequence", {Term::str("the"), var("?l"), var("?r")});
  auto results = match_sequence(pattern, ts.form(), {});
  REQUIRE(results.size() == 2);
  CHECK(results[0].start == 0);
  CHECK(results[0].end == 3);
  CHECK(results[1].start == 4);
  CHECK(results[1].end == 7);
}

TEST_CASE("match_sequence respects claimed spans and bound boundaries") {
  TransientStructure ts = Engine::de_render("the theory");
  Predicate pattern("sequence", {Term::str("the"), var("?l"), var("?r")});
  ClaimedSpans claimed;
  claimed[0].emplace_back(0, 3);
  auto results = match_sequence(pattern, ts.form(), {}, &claimed);
  REQUIRE(results.size() == 1);
  CHECK(results[0].start == 4);

  Predicate anchored("sequence",
                     {Term::str("the"), Term::integer(4), var("?r")});
  auto anchored_results = match_sequence(anchored, ts.form(), {});
  REQUIRE(anchored_results.size() == 1);
  CHECK(anchored_results[0].start == 4);
}

TEST_CASE("match_sequence count equals a naive scanner") {
  TestRng rng(77);
  static const char* kPieces[] = {"ab", "ba", "a", "b", " "};
  for (int round = 0; round < 600; ++round) {
    std::string haystack;
    const std::uint64_t n = 1 + rng.below(12);
    for (std::uint64_t i = 0; i < n; ++i) haystack += kPieces[rng.below(5)];
    std::string needle;
    const std::uint64_t m = 1 + rng.below(3);
    for (std::uint64_t i = 0; i < m; ++i) needle += kPieces[rng.below(4)];

    TransientStructure ts = Engine::de_render(haystack);
    Predicate pattern("sequence", {Term::str(needle), var("?l"), var("?r")});
    auto results = match_sequence(pattern, ts.form(), {});
    CHECK(static_cast<int>(results.size()) ==
          naive_occurrence_count(needle, haystack));
  }
}

TEST_CASE("substitute replaces bound variables") {
  Bindings b;
  b.bind("?d", atom("d-1"));
  Predicate p("dog", {var("?d")});
  CHECK(substitute(b, p) == Predicate("dog", {atom("d-1")}));
}

TEST_CASE("substitute with empty bindings is the identity") {
  Predicate p("dog", {var("?d")});
  CHECK(substitute(Bindings{}, p) == p);
}

TEST_CASE("substitute walks chains to a fixpoint") {
  Bindings b;
  b.bind("?x", var("?y"));
  b.bind("?y", atom("dog"));
  CHECK(substitute(b, var("?x")) == atom("dog"));

  // Chain-walk oracle: repeated lookup until nothing changes.
  Term current = var("?x");
  for (int i = 0; i < 10; ++i) {
    auto looked = current.is_var() ? b.lookup(current.name()) : std::nullopt;
    if (!looked) break;
    current = *looked;
  }
  CHECK(substitute(b, var("?x")) == current);
}

TEST_CASE("substitute is idempotent on random terms") {
  TestRng rng(99);
  for (int round = 0; round < 600; ++round) {
    Bindings b;
    if (rng.chance(0.8)) b.bind("?x", random_ground_term(rng));
    if (rng.chance(0.5)) b.bind("?y", var("?x"));
    if (rng.chance(0.3)) b.bind("?z", random_ground_term(rng));
    Term t = random_term(rng);
    const Term once = substitute(b, t);
    CHECK(substitute(b, once) == once);
  }
}

TEST_CASE("unification success is symmetric and joins are equal") {
  TestRng rng(123);
  int successes = 0;
  for (int round = 0; round < 800; ++round) {
    Term a = random_term(rng);
    Term b = random_term(rng);
    auto ab = unify_terms(a, b, {});
    auto ba = unify_terms(b, a, {});
    REQUIRE(ab.has_value() == ba.has_value());
    if (ab) {
      ++successes;
      CHECK(substitute(*ab, a) == substitute(*ab, b));
      CHECK(substitute(*ba, a) == substitute(*ba, b));
    }
  }
  CHECK(successes > 50);  // the generator must exercise the success path
}

TEST_CASE("merge_unit inserts disjoint features") {
  Unit contribution;
  contribution.name = var("?u");
  contribution.features.set("category",
                            FeatureValue::single(atom("dog-cxn")));
  Unit target;
  target.name = atom("dog-unit-1");
  auto merged = merge_unit(contribution, target, {});
  REQUIRE(merged.has_value());
  const FeatureValue* category = merged->unit.features.find("category");
  REQUIRE(category != nullptr);
  CHECK(category->term() == atom("dog-cxn"));
}

TEST_CASE("merge_unit fails on clashing atoms without a link") {
  Unit contribution;
  contribution.name = var("?u");
  contribution.features.set("category",
                            FeatureValue::single(atom("dog-cxn")));
  Unit target;
  target.name = atom("unit-1");
  target.features.set("category", FeatureValue::single(atom("cut-cxn")));
  CHECK_FALSE(merge_unit(contribution, target, {}).has_value());
}

TEST_CASE("merge_unit substitutes pair values") {
  Unit contribution;
  contribution.name = var("?u");
  contribution.features.set("boundaries",
                            FeatureValue::pair(var("?l"), var("?r")));
  Unit target;
  target.name = atom("unit-1");
  Bindings b;
  b.bind("?l", Term::integer(21));
  b.bind("?r", Term::integer(24));
  auto merged = merge_unit(contribution, target, b);
  REQUIRE(merged.has_value());
  const FeatureValue* boundaries = merged->unit.features.find("boundaries");
  REQUIRE(boundaries != nullptr);
  CHECK(boundaries->as_pair().first == Term::integer(21));
  CHECK(boundaries->as_pair().second == Term::integer(24));
}

TEST_CASE("bindings reject conflicting rebinds") {
  Bindings b;
  CHECK(b.bind("?x", atom("a")));
  CHECK(b.bind("?x", atom("a")));  // equal value is a no-op
  CHECK_FALSE(b.bind("?x", atom("b")));
  CHECK(b.walk(var("?x")) == atom("a"));
}

TEST_CASE("variable and atom constructors enforce the ? convention") {
  CHECK_THROWS_AS(Term::atom("?x"), Error);
  CHECK_THROWS_AS(Term::var("x"), Error);
  CHECK(Term::from_symbol("?x").is_var());
  CHECK(Term::from_symbol("x").is_atom());
}
