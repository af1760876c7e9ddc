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

#include "cxg/agent.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

#include "cxg/error.hpp"
#include "cxg/ofef.hpp"

namespace cxg {

namespace {

std::atomic<std::uint64_t> g_agent_counter{0};

std::string lowercased(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

Agent::Agent(std::string name) : name_(std::move(name)) {
  if (name_.empty()) name_ = "agent";
  id_ = lowercased(name_) + "-" +
        std::to_string(g_agent_counter.fetch_add(1) + 1);
}

void Agent::reset_id_counter() { g_agent_counter.store(0); }

void Agent::load_grammar_from_file(const std::string& path) {
  grammar_ = cxg::load_grammar_from_file(path);
}

void Agent::save_grammar_to_file(const std::string& path) const {
  cxg::save_grammar_to_file(grammar_, path);
}

void Agent::save_grammar_image(const std::string& path) const {
  cxg::save_grammar_image(grammar_, path);
}

void Agent::load_grammar_image(const std::string& path) {
  grammar_ = cxg::load_grammar_image(path);
}

namespace {

void record_solutions(Agent& agent, const std::vector<std::string>& applied,
                      const std::vector<Solution>& competitors) {
  agent.applied_cxn =
      applied.empty() ? std::nullopt : std::optional(applied.front());
  agent.competitor_cxns.clear();
  for (const Solution& s : competitors) {
    for (const std::string& name : s.applied_names()) {
      if (std::find(agent.competitor_cxns.begin(),
                    agent.competitor_cxns.end(),
                    name) == agent.competitor_cxns.end()) {
        agent.competitor_cxns.push_back(name);
      }
    }
  }
}

}  // namespace

std::optional<PredicateNetwork> Agent::comprehend(
    const std::string& utterance) {
  SearchOutcome outcome = engine_.search(Engine::de_render(utterance),
                                         grammar_, Direction::comprehension);
  if (!outcome.best) {
    applied_cxn = std::nullopt;
    competitor_cxns.clear();
    return std::nullopt;
  }
  record_solutions(*this, outcome.best->applied_names(), outcome.competitors);
  return outcome.best->network;
}

std::optional<std::string> Agent::formulate(const PredicateNetwork& meaning) {
  TransientStructure initial = TransientStructure::empty();
  for (const Predicate& p : meaning.predicates()) initial.add_meaning(p);
  SearchOutcome outcome =
      engine_.search(initial, grammar_, Direction::formulation);
  if (!outcome.best) {
    applied_cxn = std::nullopt;
    competitor_cxns.clear();
    return std::nullopt;
  }
  record_solutions(*this, outcome.best->applied_names(), outcome.competitors);
  return outcome.best->utterance;
}

std::optional<std::string> Agent::formulate(const std::string& topic) {
  PredicateNetwork network;
  network.add(Predicate(topic, {Term::var("?x")}));
  return formulate(network);
}

std::string Agent::learn(const std::string& form, const std::string& meaning) {
  if (form.empty()) {
    throw Error(ErrorCategory::logic, "cannot learn an empty form");
  }
  std::string base = form + "-cxn";
  std::string name = base;
  for (int suffix = 2; grammar_.has_cxn(name); ++suffix) {
    name = base + "-" + std::to_string(suffix);
  }

  Unit contributing;
  contributing.name = Term::var("?" + form + "-unit");
  contributing.features.set("referent", FeatureValue::single(Term::var("?x")));
  contributing.features.set("category",
                            FeatureValue::single(Term::atom(name)));
  contributing.features.set(
      "boundaries",
      FeatureValue::pair(Term::var("?left"), Term::var("?right")));

  ConditionalUnit conditional;
  conditional.name = Term::var("?" + form + "-unit");
  conditional.formulation_lock.set(
      kHashMeaning, FeatureValue::predicates(
                        {Predicate(meaning, {Term::var("?x")})}));
  conditional.comprehension_lock.set(
      kHashForm,
      FeatureValue::predicates({Predicate(
          kSequencePredicate, {Term::str(form), Term::var("?left"),
                               Term::var("?right")})}));

  grammar_.add_cxn(Construction(name, {std::move(contributing)},
                                {std::move(conditional)},
                                grammar_.config().initial_score));
  return name;
}

void Agent::reward() {
  const double up = grammar_.config().reward_delta;
  const double down = grammar_.config().inhibit_delta;
  if (communicated_successfully) {
    if (!applied_cxn.has_value()) throw MissingAppliedCxnError();
    grammar_.cxn(*applied_cxn).increase_score(up);
    for (const std::string& name : competitor_cxns) {
      if (!grammar_.has_cxn(name)) continue;
      Construction& cxn = grammar_.cxn(name);
      cxn.decrease_score(down);
      if (cxn.get_score() <= 0.0) grammar_.delete_cxn(name);
    }
    return;
  }
  if (discourse_role == DiscourseRole::speaker && applied_cxn.has_value() &&
      grammar_.has_cxn(*applied_cxn)) {
    Construction& cxn = grammar_.cxn(*applied_cxn);
    cxn.decrease_score(down);
    if (cxn.get_score() <= 0.0) grammar_.delete_cxn(*applied_cxn);
  }
}

void Agent::reset_interaction_state() {
  utterance = std::nullopt;
  topic = std::nullopt;
  applied_cxn = std::nullopt;
  competitor_cxns.clear();
  communicated_successfully = false;
  discourse_role = DiscourseRole::none;
}

std::string to_string(const Agent& agent) {
  std::ostringstream out;
  out << "<Agent: " << agent.name() << " (id: " << agent.id() << ") ~ "
      << agent.grammar().size() << " cxns>";
  return out.str();
}

}  // namespace cxg
