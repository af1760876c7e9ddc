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

#include <benchmark/benchmark.h>

#include "cxg/amr.hpp"
#include "cxg/engine.hpp"
#include "cxg/naming_game.hpp"
#include "cxg/ofef.hpp"
#include "cxg/propbank.hpp"
#include "cxg/unify.hpp"

namespace {

const char* kUtterance = "Firefighters cut the child free.";

cxg::Grammar demo_grammar() {
  return cxg::load_grammar_from_file(std::string(CXG_RESOURCE_DIR) +
                                     "/demo-resultative.ofef.json");
}

void BM_ComprehendDemo(benchmark::State& state) {
  cxg::Grammar grammar = demo_grammar();
  cxg::Engine engine;
  for (auto _ : state) {
    auto result = engine.comprehend(grammar, kUtterance);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ComprehendDemo);

void BM_FormulateDemo(benchmark::State& state) {
  cxg::Grammar grammar = demo_grammar();
  cxg::Engine engine;
  auto [network, competitors] = engine.comprehend(grammar, kUtterance);
  for (auto _ : state) {
    auto result = engine.formulate(grammar, *network);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_FormulateDemo);

void BM_UnifyTerms(benchmark::State& state) {
  const cxg::Term a = cxg::Term::compound(
      {cxg::Term::var("?x"), cxg::Term::atom("dog"), cxg::Term::integer(3)});
  const cxg::Term b = cxg::Term::compound({cxg::Term::atom("cat"),
                                           cxg::Term::var("?y"),
                                           cxg::Term::integer(3)});
  for (auto _ : state) {
    auto result = cxg::unify_terms(a, b, {});
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_UnifyTerms);

void BM_MatchSequence(benchmark::State& state) {
  cxg::TransientStructure ts = cxg::Engine::de_render(
      "the theory of the theatre is the thesis of the day");
  const cxg::Predicate pattern(
      "sequence",
      {cxg::Term::str("the"), cxg::Term::var("?l"), cxg::Term::var("?r")});
  for (auto _ : state) {
    auto results = cxg::match_sequence(pattern, ts.form(), {});
    benchmark::DoNotOptimize(results);
  }
}
BENCHMARK(BM_MatchSequence);

void BM_PenmanRoundtrip(benchmark::State& state) {
  const char* penman =
      "(c / cut-01 :arg0 (p / person :arg0-of (f / fight-01 :arg1 (f2 / "
      "fire))) :arg0-of (c2 / cause-01 :arg1 (f3 / free-04 :arg1 (c3 / "
      "child))))";
  for (auto _ : state) {
    auto network = cxg::penman_to_predicate_network(penman);
    auto text = cxg::predicate_network_to_penman(network);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_PenmanRoundtrip);

void BM_NamingGameInteractions(benchmark::State& state) {
  for (auto _ : state) {
    cxg::ng::ExperimentConfig config;
    config.nr_of_agents = 10;
    config.nr_of_objects = 5;
    config.seed = 8;
    cxg::ng::Experiment experiment(config);
    experiment.run_series(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(experiment.monitors());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NamingGameInteractions)->Arg(100)->Arg(500);

void BM_GrammarImageRoundtrip(benchmark::State& state) {
  auto sentences = cxg::pb::parse_conll(std::string(CXG_RESOURCE_DIR) +
                                        "/pb-annotations.conll");
  cxg::Grammar grammar = cxg::pb::induce_grammar(sentences);
  for (auto _ : state) {
    auto bytes = cxg::grammar_to_image_bytes(grammar);
    auto reloaded = cxg::grammar_from_image_bytes(bytes);
    benchmark::DoNotOptimize(reloaded);
  }
}
BENCHMARK(BM_GrammarImageRoundtrip);

void BM_ExtractFrames(benchmark::State& state) {
  auto sentences = cxg::pb::parse_conll(std::string(CXG_RESOURCE_DIR) +
                                        "/pb-annotations.conll");
  cxg::Grammar grammar = cxg::pb::induce_grammar(sentences);
  std::vector<cxg::pb::Token> tokens{
      {"The", "the", "det"},      {"King", "king", "propn"},
      {"of", "of", "prep"},       {"the", "the", "det"},
      {"Belgians", "belgians", "propn"}, {"sent", "send", "verb"},
      {"a", "a", "det"},          {"box", "box", "noun"},
      {"of", "of", "prep"},       {"chocolates", "chocolate", "noun"},
      {"to", "to", "prep"},       {"Forrest", "forrest", "propn"},
      {"Gump", "gump", "propn"},  {".", ".", "punct"}};
  for (auto _ : state) {
    auto frames = cxg::pb::extract_frames(grammar, tokens);
    benchmark::DoNotOptimize(frames);
  }
}
BENCHMARK(BM_ExtractFrames);

}  // namespace

BENCHMARK_MAIN();
