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

#ifndef CXG_AGENT_HPP_
#define CXG_AGENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cxg/engine.hpp"
#include "cxg/grammar.hpp"

namespace cxg {

enum class DiscourseRole { none, speaker, hearer };

/// A language user: identity, an owned grammar (created empty), and the
/// per-interaction state the naming game manipulates. Grammars are never
/// shared between agents.
class Agent {
 public:
  explicit Agent(std::string name = "agent");

  const std::string& name() const { return name_; }
  const std::string& id() const { return id_; }

  Grammar& grammar() { return grammar_; }
  const Grammar& grammar() const { return grammar_; }
  Engine& engine() { return engine_; }

  void add_cxn(Construction cxn) { grammar_.add_cxn(std::move(cxn)); }
  void delete_cxn(const std::string& name) { grammar_.delete_cxn(name); }
  void add_category(const std::string& category) {
    grammar_.categorial_network().add_category(category);
  }
  void add_link(const std::string& a, const std::string& b) {
    grammar_.categorial_network().add_link(a, b);
  }

  void load_grammar_from_file(const std::string& path);
  void save_grammar_to_file(const std::string& path) const;
  void save_grammar_image(const std::string& path) const;
  void load_grammar_image(const std::string& path);

  // Both record the best solution's construction as applied_cxn and the
  // competing solutions' constructions as competitor_cxns; on no solution
  // the applied construction is cleared.
  std::optional<PredicateNetwork> comprehend(const std::string& utterance);
  std::optional<std::string> formulate(const PredicateNetwork& meaning);
  // A bare topic symbol is wrapped as the meaning network {(topic ?x)}.
  std::optional<std::string> formulate(const std::string& topic);

  // Adds a naming construction pairing `form` with the object symbol
  // `meaning` at the configured initial score. Name is "<form>-cxn",
  // suffixed -2, -3, ... on collision. Returns the name.
  std::string learn(const std::string& form, const std::string& meaning);

  // The score dynamics of the naming game: on success the applied
  // construction gains reward_delta and every competitor loses
  // inhibit_delta (deleted at score <= 0); on failure only a speaker
  // decrements its applied construction.
  void reward();

  void reset_interaction_state();

  // Interaction state, driven by the experiment script.
  std::optional<std::string> utterance;
  std::optional<std::string> topic;
  std::optional<std::string> applied_cxn;
  std::vector<std::string> competitor_cxns;
  bool communicated_successfully = false;
  DiscourseRole discourse_role = DiscourseRole::none;

  // Ids are "<name-lowercased>-<counter>" with a process-wide counter.
  static void reset_id_counter();

 private:
  std::string name_;
  std::string id_;
  Grammar grammar_;
  Engine engine_;
};

std::string to_string(const Agent& agent);

}  // namespace cxg

#endif  // CXG_AGENT_HPP_
