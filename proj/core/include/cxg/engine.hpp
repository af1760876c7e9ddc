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

#ifndef CXG_ENGINE_HPP_
#define CXG_ENGINE_HPP_

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cxg/amr.hpp"
#include "cxg/grammar.hpp"
#include "cxg/term.hpp"
#include "cxg/unify.hpp"

namespace cxg {

enum class Direction { comprehension, formulation };

inline const char* to_string(Direction dir) {
  return dir == Direction::comprehension ? "comprehension" : "formulation";
}

/// A claim on part of a root form predicate: the character span [start,end)
/// of inventory predicate pred_index, in utterance coordinates.
struct FormClaim {
  std::size_t pred_index;
  int start;
  int end;

  bool operator==(const FormClaim& other) const = default;
  auto operator<=>(const FormClaim& other) const = default;
};

/// What one construction application claimed: form spans, root meaning
/// predicates (by index), and the existing units it matched.
struct Footprint {
  std::vector<FormClaim> form;
  std::vector<std::size_t> meaning;
  std::vector<std::string> units;
};

/// The evolving unit set during one processing episode. The root unit holds
/// the form and meaning inventories; all other units have ground names.
class TransientStructure {
 public:
  static TransientStructure empty();

  const std::vector<Predicate>& form() const;
  const std::vector<Predicate>& meaning() const;
  // Appends unless a literally equal predicate is already present.
  void add_form(Predicate predicate);
  void add_meaning(Predicate predicate);

  const Unit& root() const { return root_; }
  const std::vector<Unit>& units() const { return units_; }
  std::vector<Unit>& units() { return units_; }
  const Unit* find_unit(const std::string& name) const;
  Unit* find_unit(const std::string& name);
  void add_unit(Unit unit);

  // Substitutes through the root inventories and every unit.
  void apply_bindings(const Bindings& bindings);

  const std::vector<std::pair<std::string, Footprint>>& footprints() const {
    return footprints_;
  }
  void record_footprint(const std::string& cxn_name, Footprint footprint);

  const ClaimedSpans& claimed_form() const { return claimed_form_; }
  const std::set<std::size_t>& claimed_meaning() const {
    return claimed_meaning_;
  }

  // Application signatures block re-application on identical material.
  bool signature_seen(const std::string& signature) const {
    return signatures_.count(signature) != 0;
  }
  void record_signature(std::string signature) {
    signatures_.insert(std::move(signature));
  }

 private:
  Unit root_;
  std::vector<Unit> units_;
  std::vector<std::pair<std::string, Footprint>> footprints_;
  ClaimedSpans claimed_form_;
  std::set<std::size_t> claimed_meaning_;
  std::set<std::string> signatures_;
};

std::string to_string(const TransientStructure& structure);

struct SearchNode {
  TransientStructure structure;
  std::vector<std::pair<std::string, Bindings>> applied;
  int depth = 0;

  std::vector<std::string> applied_names() const;
};

struct Solution {
  SearchNode node;
  Direction direction = Direction::comprehension;
  PredicateNetwork network;  // comprehension output
  std::string utterance;     // formulation output
  double mean_score = 0.0;

  std::vector<std::string> applied_names() const {
    return node.applied_names();
  }
};

// True when a ranks strictly better than b: higher mean applied score,
// then fewer applications, then lexicographically smaller name sequence.
bool ranks_before(const Solution& a, const Solution& b);

struct SearchOutcome {
  std::optional<Solution> best;
  std::vector<Solution> competitors;  // distinct construction multisets
  std::size_t expanded_nodes = 0;
};

/// Receives structured events from a search episode; consumed by the HTML
/// trace reporter.
class TraceObserver {
 public:
  virtual ~TraceObserver() = default;
  virtual void on_search_start(Direction, const TransientStructure&) {}
  virtual void on_application(const SearchNode& /*parent*/,
                              const std::string& /*cxn_name*/,
                              const Bindings& /*bindings*/,
                              const SearchNode& /*child*/) {}
  virtual void on_goal_test(const SearchNode&, bool /*passed*/) {}
  virtual void on_solution(const Solution&) {}
  virtual void on_search_end(const SearchOutcome&) {}
};

/// One processing session: owns the fresh-name counter and the trace
/// observers. Separate episodes on separate grammars may run concurrently
/// against one session.
class Engine {
 public:
  Engine() = default;
  Engine(const Engine& other);
  Engine& operator=(const Engine& other);

  // Root unit with form { (sequence <utterance> 0 <len>) } and an empty
  // meaning. Boundaries are byte offsets into the utterance, start
  // inclusive, end exclusive (identical to character offsets for ASCII).
  static TransientStructure de_render(const std::string& utterance);

  std::vector<SearchNode> apply_cxn(const Construction& cxn,
                                    const SearchNode& node, Direction dir,
                                    const Grammar& grammar);

  // Precondition: node is terminal (no construction applies).
  bool goal_test(const SearchNode& node, Direction dir) const;

  // Chains the root form sequences into blocks via shared boundaries and
  // joins distinct blocks with a single space. Fails on overlapping ground
  // spans or inconsistent chaining.
  static std::optional<std::string> render(const SearchNode& node);

  SearchOutcome search(const TransientStructure& initial,
                       const Grammar& grammar, Direction dir);

  std::pair<std::optional<PredicateNetwork>, std::vector<Solution>> comprehend(
      const Grammar& grammar, const std::string& utterance);

  std::pair<std::optional<std::string>, std::vector<Solution>> formulate(
      const Grammar& grammar, const PredicateNetwork& meaning);

  void add_observer(TraceObserver* observer) {
    observers_.push_back(observer);
  }
  void clear_observers() { observers_.clear(); }

  // Resets the fresh-name counter; only for reproducible traces in tests.
  void reset_counters() { counter_.store(0); }

 private:
  std::string fresh_suffix() {
    return std::to_string(counter_.fetch_add(1) + 1);
  }

  std::atomic<std::uint64_t> counter_{0};
  std::vector<TraceObserver*> observers_;
};

}  // namespace cxg

#endif  // CXG_ENGINE_HPP_
