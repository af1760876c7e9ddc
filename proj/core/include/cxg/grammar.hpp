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

#ifndef CXG_GRAMMAR_HPP_
#define CXG_GRAMMAR_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cxg/categorial_network.hpp"
#include "cxg/term.hpp"

namespace cxg {

/// One unit of a conditional pole with its two direction locks. "#meaning"
/// may appear only in the formulation lock, "#form" only in the
/// comprehension lock.
struct ConditionalUnit {
  Term name;
  FeatureMap formulation_lock;
  FeatureMap comprehension_lock;

  bool operator==(const ConditionalUnit& other) const {
    return name == other.name &&
           formulation_lock == other.formulation_lock &&
           comprehension_lock == other.comprehension_lock;
  }
};

/// A named, scored pairing of a conditional pole (match locks) and a
/// contributing pole (merge content). Scores live in [0, 1] and clamp on
/// update.
class Construction {
 public:
  Construction(std::string_view name, std::vector<Unit> contributing_pole,
               std::vector<ConditionalUnit> conditional_pole,
               double score = 0.5);

  const std::string& name() const { return name_; }
  const std::vector<Unit>& contributing_pole() const {
    return contributing_pole_;
  }
  const std::vector<ConditionalUnit>& conditional_pole() const {
    return conditional_pole_;
  }

  double get_score() const { return score_; }
  void set_score(double score);
  void increase_score(double delta);
  void decrease_score(double delta);

  const std::map<std::string, Term>& attributes() const { return attributes_; }
  void set_attribute(std::string_view key, Term value);
  const Term* attribute(std::string_view key) const;

  bool operator==(const Construction& other) const;

 private:
  std::string name_;
  std::vector<Unit> contributing_pole_;
  std::vector<ConditionalUnit> conditional_pole_;
  double score_;
  std::map<std::string, Term> attributes_;
};

/// Search limits and score parameters. Serialized with the grammar.
struct GrammarConfig {
  int max_depth = 32;
  int max_solutions = 16;
  int max_nodes = 2000;
  double initial_score = 0.5;
  double reward_delta = 0.1;
  double inhibit_delta = 0.2;

  bool operator==(const GrammarConfig& other) const = default;
};

/// An ordered construction inventory plus its categorial network. Grammars
/// are confined to one agent; distinct grammars may be used in parallel.
class Grammar {
 public:
  std::size_t size() const { return cxns_.size(); }
  bool empty() const { return cxns_.empty(); }

  // Duplicate names are an error unless replace is set.
  void add_cxn(Construction cxn, bool replace = false);
  void delete_cxn(std::string_view name);
  bool has_cxn(std::string_view name) const;

  const Construction& cxn(std::string_view name) const;
  Construction& cxn(std::string_view name);

  // Insertion order.
  const std::vector<Construction>& cxns() const { return cxns_; }
  std::vector<std::string> cxn_names() const;

  CategorialNetwork& categorial_network() { return net_; }
  const CategorialNetwork& categorial_network() const { return net_; }

  GrammarConfig& config() { return config_; }
  const GrammarConfig& config() const { return config_; }

 private:
  std::vector<Construction> cxns_;
  CategorialNetwork net_;
  GrammarConfig config_;
};

}  // namespace cxg

#endif  // CXG_GRAMMAR_HPP_
