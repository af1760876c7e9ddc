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

#ifndef CXG_NAMING_GAME_HPP_
#define CXG_NAMING_GAME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cxg/agent.hpp"
#include "cxg/grammar.hpp"

namespace cxg::ng {

struct ExperimentConfig {
  int nr_of_agents = 10;
  int nr_of_objects = 5;
  std::uint64_t seed = 0;
  double initial_score = 0.5;
  double reward_delta = 0.1;
  double inhibit_delta = 0.2;
  int success_window = 100;

  void validate() const;  // nr_of_agents >= 2, nr_of_objects >= 1
};

/// Deterministic generator (splitmix64). The experiment consumes draws in a
/// fixed order per interaction: speaker, hearer, topic, then one word form
/// when the speaker invents.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n); n > 0. Modulo reduction, documented as part of the
  // stream contract.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

// Three consonant-vowel syllables over consonants bdfgklmnprstvwxz and
// vowels aeiou; always six lowercase characters.
std::string generate_word_form(Rng& rng);

struct InteractionRecord {
  int index = 0;  // 1-based
  std::string speaker_id;
  std::string hearer_id;
  std::string topic;
  std::string utterance;
  bool success = false;
};

struct MonitorSeries {
  std::vector<int> success;              // 0/1 per interaction
  std::vector<double> lexicon_size;      // population mean construction count
  std::vector<double> conventionality;   // in [0, 1]
};

// The form/object pairing of a single-unit naming construction, when the
// construction has that shape.
std::optional<std::pair<std::string, std::string>> naming_pair(
    const Construction& cxn);

// Mean over objects of the fraction of agents whose preferred form (their
// highest-scored construction naming the object, score ties broken by
// lexicographically smaller form) equals the population-modal preferred
// form. Mode ties break lexicographically; with no preferred forms at all
// an object contributes zero.
double conventionality(const std::vector<Agent>& population,
                       const std::vector<std::string>& world);

// Mean success over the last `window` interactions (or fewer when the
// series is shorter).
double windowed_success(const MonitorSeries& series, int window);

void export_metrics_csv(const MonitorSeries& series, const std::string& path);
void export_metrics_json(const MonitorSeries& series, const std::string& path);

/// The canonical naming game: a population converging on names for the
/// objects of a world through pairwise interactions with success-based
/// score adaptation.
class Experiment {
 public:
  explicit Experiment(ExperimentConfig config);

  InteractionRecord run_interaction();
  MonitorSeries run_series(int n);

  const ExperimentConfig& config() const { return config_; }
  const std::vector<Agent>& population() const { return population_; }
  std::vector<Agent>& population() { return population_; }
  const std::vector<std::string>& world() const { return world_; }
  const MonitorSeries& monitors() const { return monitors_; }
  const std::vector<InteractionRecord>& records() const { return records_; }

 private:
  ExperimentConfig config_;
  std::vector<std::string> world_;
  std::vector<Agent> population_;
  Rng rng_;
  MonitorSeries monitors_;
  std::vector<InteractionRecord> records_;
  int interactions_run_ = 0;
};

}  // namespace cxg::ng

#endif  // CXG_NAMING_GAME_HPP_
