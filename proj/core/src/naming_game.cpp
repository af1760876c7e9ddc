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

#include "cxg/naming_game.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <map>

#include "cxg/error.hpp"
#include "json.hpp"

namespace cxg::ng {

void ExperimentConfig::validate() const {
  if (nr_of_agents < 2) {
    throw Error(ErrorCategory::logic, "a naming game needs at least 2 agents");
  }
  if (nr_of_objects < 1) {
    throw Error(ErrorCategory::logic, "a naming game needs at least 1 object");
  }
}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  assert(n > 0);
  return next() % n;
}

std::string generate_word_form(Rng& rng) {
  static constexpr char kConsonants[] = "bdfgklmnprstvwxz";
  static constexpr char kVowels[] = "aeiou";
  std::string form;
  form.reserve(6);
  for (int syllable = 0; syllable < 3; ++syllable) {
    form += kConsonants[rng.below(16)];
    form += kVowels[rng.below(5)];
  }
  return form;
}

std::optional<std::pair<std::string, std::string>> naming_pair(
    const Construction& cxn) {
  if (cxn.conditional_pole().size() != 1) return std::nullopt;
  const ConditionalUnit& cu = cxn.conditional_pole().front();
  const FeatureValue* meaning = cu.formulation_lock.find(kHashMeaning);
  const FeatureValue* form = cu.comprehension_lock.find(kHashForm);
  if (meaning == nullptr || form == nullptr) return std::nullopt;
  if (meaning->kind() != FeatureValue::Kind::predicates ||
      form->kind() != FeatureValue::Kind::predicates) {
    return std::nullopt;
  }
  if (meaning->preds().size() != 1 || form->preds().size() != 1) {
    return std::nullopt;
  }
  const Predicate& concept_name = meaning->preds().front();
  const Predicate& sequence = form->preds().front();
  if (concept_name.args.size() != 1) return std::nullopt;
  if (sequence.name != kSequencePredicate || sequence.args.size() != 3 ||
      !sequence.args[0].is_str()) {
    return std::nullopt;
  }
  return std::pair(sequence.args[0].text(), concept_name.name);
}

double conventionality(const std::vector<Agent>& population,
                       const std::vector<std::string>& world) {
  if (world.empty() || population.empty()) return 0.0;
  double total = 0.0;
  for (const std::string& object : world) {
    std::vector<std::optional<std::string>> preferred;
    preferred.reserve(population.size());
    for (const Agent& agent : population) {
      std::optional<std::string> best_form;
      double best_score = -1.0;
      for (const Construction& cxn : agent.grammar().cxns()) {
        auto pair = naming_pair(cxn);
        if (!pair || pair->second != object) continue;
        const double score = cxn.get_score();
        if (score > best_score ||
            (score == best_score && best_form && pair->first < *best_form)) {
          best_score = score;
          best_form = pair->first;
        }
      }
      preferred.push_back(best_form);
    }
    std::map<std::string, int> counts;
    for (const auto& form : preferred) {
      if (form) ++counts[*form];
    }
    if (counts.empty()) continue;  // no modal form, object contributes 0
    std::string modal;
    int best_count = 0;
    for (const auto& [form, count] : counts) {
      if (count > best_count) {  // map order breaks ties lexicographically
        best_count = count;
        modal = form;
      }
    }
    int agreeing = 0;
    for (const auto& form : preferred) {
      if (form && *form == modal) ++agreeing;
    }
    total += static_cast<double>(agreeing) /
             static_cast<double>(population.size());
  }
  return total / static_cast<double>(world.size());
}

double windowed_success(const MonitorSeries& series, int window) {
  if (series.success.empty() || window <= 0) return 0.0;
  const std::size_t n = series.success.size();
  const std::size_t w = std::min<std::size_t>(n, window);
  int sum = 0;
  for (std::size_t i = n - w; i < n; ++i) sum += series.success[i];
  return static_cast<double>(sum) / static_cast<double>(w);
}

void export_metrics_csv(const MonitorSeries& series, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "interaction,success,lexicon_size,conventionality\n";
  char buffer[64];
  for (std::size_t i = 0; i < series.success.size(); ++i) {
    out << (i + 1) << "," << series.success[i] << ",";
    std::snprintf(buffer, sizeof(buffer), "%.6f", series.lexicon_size[i]);
    out << buffer << ",";
    std::snprintf(buffer, sizeof(buffer), "%.6f", series.conventionality[i]);
    out << buffer << "\n";
  }
  if (!out) throw IoError("failed to write " + path);
}

void export_metrics_json(const MonitorSeries& series,
                         const std::string& path) {
  nlohmann::json doc;
  doc["success"] = series.success;
  doc["lexicon_size"] = series.lexicon_size;
  doc["conventionality"] = series.conventionality;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("failed to write " + path);
}

Experiment::Experiment(ExperimentConfig config)
    : config_(config), rng_(config.seed) {
  config_.validate();
  world_.reserve(config_.nr_of_objects);
  for (int i = 1; i <= config_.nr_of_objects; ++i) {
    world_.push_back("obj-" + std::to_string(i));
  }
  population_.reserve(config_.nr_of_agents);
  for (int i = 0; i < config_.nr_of_agents; ++i) {
    Agent agent;
    agent.grammar().config().initial_score = config_.initial_score;
    agent.grammar().config().reward_delta = config_.reward_delta;
    agent.grammar().config().inhibit_delta = config_.inhibit_delta;
    population_.push_back(std::move(agent));
  }
}

InteractionRecord Experiment::run_interaction() {
  const std::size_t n = population_.size();
  const std::size_t speaker_index = rng_.below(n);
  std::size_t hearer_index = rng_.below(n - 1);
  if (hearer_index >= speaker_index) ++hearer_index;
  assert(speaker_index != hearer_index);
  const std::string& topic = world_[rng_.below(world_.size())];

  Agent& speaker = population_[speaker_index];
  Agent& hearer = population_[hearer_index];
  speaker.reset_interaction_state();
  hearer.reset_interaction_state();
  speaker.discourse_role = DiscourseRole::speaker;
  hearer.discourse_role = DiscourseRole::hearer;
  speaker.topic = topic;

  std::optional<std::string> utterance = speaker.formulate(topic);
  if (!utterance) {
    speaker.learn(generate_word_form(rng_), topic);
    utterance = speaker.formulate(topic);
  }
  speaker.utterance = utterance;
  hearer.utterance = utterance;

  bool success = false;
  std::optional<PredicateNetwork> heard = hearer.comprehend(*utterance);
  if (!heard) {
    hearer.learn(*utterance, topic);
  } else {
    std::string object;
    for (const Predicate& p : heard->predicates()) {
      if (p.args.size() == 1) {
        object = p.name;
        break;
      }
    }
    if (object == topic) {
      success = true;
    } else {
      hearer.learn(*utterance, topic);  // wrong object: fail and repair
    }
  }
  speaker.communicated_successfully = success;
  hearer.communicated_successfully = success;
  speaker.reward();
  hearer.reward();

  ++interactions_run_;
  InteractionRecord record;
  record.index = interactions_run_;
  record.speaker_id = speaker.id();
  record.hearer_id = hearer.id();
  record.topic = topic;
  record.utterance = *utterance;
  record.success = success;
  records_.push_back(record);

  monitors_.success.push_back(success ? 1 : 0);
  double total_cxns = 0.0;
  for (const Agent& agent : population_) {
    total_cxns += static_cast<double>(agent.grammar().size());
  }
  monitors_.lexicon_size.push_back(total_cxns /
                                   static_cast<double>(population_.size()));
  monitors_.conventionality.push_back(conventionality(population_, world_));
  return record;
}

MonitorSeries Experiment::run_series(int n) {
  if (n < 1) {
    throw Error(ErrorCategory::logic, "run_series needs n >= 1");
  }
  for (int i = 0; i < n; ++i) run_interaction();
  return monitors_;
}

}  // namespace cxg::ng
