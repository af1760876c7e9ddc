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

#include "cxg/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cxg/error.hpp"

namespace cxg {

TransientStructure TransientStructure::empty() {
  TransientStructure ts;
  ts.root_.name = Term::atom("root");
  ts.root_.features.set(kFormFeature, FeatureValue::predicates({}));
  ts.root_.features.set(kMeaningFeature, FeatureValue::predicates({}));
  return ts;
}

const std::vector<Predicate>& TransientStructure::form() const {
  return root_.features.find(kFormFeature)->preds();
}

const std::vector<Predicate>& TransientStructure::meaning() const {
  return root_.features.find(kMeaningFeature)->preds();
}

void TransientStructure::add_form(Predicate predicate) {
  auto& preds = root_.features.find(kFormFeature)->preds();
  if (std::find(preds.begin(), preds.end(), predicate) == preds.end()) {
    preds.push_back(std::move(predicate));
  }
}

void TransientStructure::add_meaning(Predicate predicate) {
  auto& preds = root_.features.find(kMeaningFeature)->preds();
  if (std::find(preds.begin(), preds.end(), predicate) == preds.end()) {
    preds.push_back(std::move(predicate));
  }
}

const Unit* TransientStructure::find_unit(const std::string& name) const {
  for (const Unit& u : units_) {
    if (u.name.is_atom() && u.name.symbol() == name) return &u;
  }
  return nullptr;
}

Unit* TransientStructure::find_unit(const std::string& name) {
  for (Unit& u : units_) {
    if (u.name.is_atom() && u.name.symbol() == name) return &u;
  }
  return nullptr;
}

void TransientStructure::add_unit(Unit unit) {
  units_.push_back(std::move(unit));
}

void TransientStructure::apply_bindings(const Bindings& bindings) {
  root_ = substitute(bindings, root_);
  for (Unit& u : units_) u = substitute(bindings, u);
}

void TransientStructure::record_footprint(const std::string& cxn_name,
                                          Footprint footprint) {
  for (const FormClaim& claim : footprint.form) {
    claimed_form_[claim.pred_index].emplace_back(claim.start, claim.end);
  }
  for (std::size_t index : footprint.meaning) claimed_meaning_.insert(index);
  footprints_.emplace_back(cxn_name, std::move(footprint));
}

std::string to_string(const TransientStructure& structure) {
  std::ostringstream out;
  out << to_string(structure.root());
  for (const Unit& u : structure.units()) out << "\n" << to_string(u);
  return out.str();
}

std::vector<std::string> SearchNode::applied_names() const {
  std::vector<std::string> names;
  names.reserve(applied.size());
  for (const auto& [name, bindings] : applied) names.push_back(name);
  return names;
}

bool ranks_before(const Solution& a, const Solution& b) {
  if (a.mean_score != b.mean_score) return a.mean_score > b.mean_score;
  if (a.node.depth != b.node.depth) return a.node.depth < b.node.depth;
  return a.applied_names() < b.applied_names();
}

Engine::Engine(const Engine& other)
    : counter_(other.counter_.load()), observers_(other.observers_) {}

Engine& Engine::operator=(const Engine& other) {
  counter_.store(other.counter_.load());
  observers_ = other.observers_;
  return *this;
}

TransientStructure Engine::de_render(const std::string& utterance) {
  if (utterance.empty()) throw EmptyUtteranceError();
  TransientStructure ts = TransientStructure::empty();
  ts.add_form(Predicate(
      kSequencePredicate,
      {Term::str(utterance), Term::integer(0),
       Term::integer(static_cast<std::int64_t>(utterance.size()))}));
  return ts;
}

namespace {

// Variables are renamed apart per application attempt; conditional units
// keep their original base for fresh unit naming.
struct RenamedConstruction {
  std::vector<Unit> contributing;
  std::vector<ConditionalUnit> conditional;
  std::vector<std::string> conditional_bases;
  std::map<std::string, std::string> contributing_bases;  // var -> base
};

void collect_vars(const Term& term, std::set<std::string>& vars) {
  if (term.is_var()) {
    vars.insert(term.name());
  } else if (term.is_compound()) {
    for (const Term& e : term.elements()) collect_vars(e, vars);
  }
}

void collect_vars(const FeatureValue& value, std::set<std::string>& vars) {
  switch (value.kind()) {
    case FeatureValue::Kind::single:
      collect_vars(value.term(), vars);
      break;
    case FeatureValue::Kind::pair:
      collect_vars(value.as_pair().first, vars);
      collect_vars(value.as_pair().second, vars);
      break;
    case FeatureValue::Kind::predicates:
      for (const Predicate& p : value.preds()) {
        for (const Term& a : p.args) collect_vars(a, vars);
      }
      break;
  }
}

void collect_vars(const FeatureMap& features, std::set<std::string>& vars) {
  for (const auto& [name, value] : features) collect_vars(value, vars);
}

std::string base_of(const Term& name) {
  if (name.is_var()) return name.name().substr(1);
  if (name.is_atom()) return name.symbol();
  return "unit";
}

// The per-unit lock content matched for one direction.
struct LockView {
  std::vector<std::pair<std::string, const FeatureValue*>> non_hash;
  const std::vector<Predicate>* hash = nullptr;  // #form or #meaning
};

LockView lock_view(const ConditionalUnit& cu, Direction dir) {
  const FeatureMap& lock = (dir == Direction::comprehension)
                               ? cu.comprehension_lock
                               : cu.formulation_lock;
  const char* hash_name =
      (dir == Direction::comprehension) ? kHashForm : kHashMeaning;
  LockView view;
  for (const auto& [name, value] : lock) {
    if (is_hash_feature(name)) {
      if (name == hash_name &&
          value.kind() == FeatureValue::Kind::predicates) {
        view.hash = &value.preds();
      }
    } else {
      view.non_hash.emplace_back(name, &value);
    }
  }
  return view;
}

std::optional<Bindings> match_lock_features(
    const LockView& view, const Unit& unit, const Bindings& bindings,
    const CategorialNetwork* net) {
  Bindings b = bindings;
  for (const auto& [name, value] : view.non_hash) {
    const FeatureValue* uv = unit.features.find(name);
    if (uv == nullptr || uv->kind() != value->kind()) return std::nullopt;
    const CategorialNetwork* feature_net =
        (name == "category") ? net : nullptr;
    switch (value->kind()) {
      case FeatureValue::Kind::single: {
        auto b2 = unify_terms(value->term(), uv->term(), b, feature_net);
        if (!b2) return std::nullopt;
        b = std::move(*b2);
        break;
      }
      case FeatureValue::Kind::pair: {
        auto b2 = unify_terms(value->as_pair().first, uv->as_pair().first, b);
        if (!b2) return std::nullopt;
        auto b3 =
            unify_terms(value->as_pair().second, uv->as_pair().second, *b2);
        if (!b3) return std::nullopt;
        b = std::move(*b3);
        break;
      }
      case FeatureValue::Kind::predicates: {
        auto matches = match_predicate_set(value->preds(), uv->preds(), b);
        if (matches.empty()) return std::nullopt;
        b = matches.front().bindings;
        break;
      }
    }
  }
  return b;
}

struct PartialMatch {
  Bindings bindings;
  std::vector<FormClaim> form_claims;
  std::vector<std::size_t> meaning_claims;
  std::vector<std::string> matched_units;
  // Conditional units to instantiate: (name term, fresh-name base).
  std::vector<std::pair<Term, std::string>> new_units;
};

std::string claim_signature(const std::string& cxn_name,
                            const PartialMatch& match) {
  std::ostringstream out;
  out << cxn_name << "|u:";
  std::vector<std::string> units = match.matched_units;
  std::sort(units.begin(), units.end());
  for (const std::string& u : units) out << u << ",";
  out << "|f:";
  std::vector<FormClaim> form = match.form_claims;
  std::sort(form.begin(), form.end());
  for (const FormClaim& c : form) {
    out << c.pred_index << ":" << c.start << "-" << c.end << ",";
  }
  out << "|m:";
  std::vector<std::size_t> meaning = match.meaning_claims;
  std::sort(meaning.begin(), meaning.end());
  for (std::size_t i : meaning) out << i << ",";
  return out.str();
}

}  // namespace

std::vector<SearchNode> Engine::apply_cxn(const Construction& cxn,
                                          const SearchNode& node,
                                          Direction dir,
                                          const Grammar& grammar) {
  const CategorialNetwork* net = &grammar.categorial_network();
  const TransientStructure& structure = node.structure;

  // Standardize the construction's variables apart.
  std::set<std::string> vars;
  for (const Unit& u : cxn.contributing_pole()) {
    collect_vars(u.name, vars);
    collect_vars(u.features, vars);
  }
  for (const ConditionalUnit& cu : cxn.conditional_pole()) {
    collect_vars(cu.name, vars);
    collect_vars(cu.formulation_lock, vars);
    collect_vars(cu.comprehension_lock, vars);
  }
  Bindings renaming;
  const std::string suffix = fresh_suffix();
  for (const std::string& v : vars) {
    renaming.bind(v, Term::var(v + "-" + suffix));
  }

  RenamedConstruction rc;
  for (const Unit& u : cxn.contributing_pole()) {
    rc.contributing.push_back(substitute(renaming, u));
    if (u.name.is_var()) {
      rc.contributing_bases[rc.contributing.back().name.name()] =
          base_of(u.name);
    }
  }
  for (const ConditionalUnit& cu : cxn.conditional_pole()) {
    ConditionalUnit renamed;
    renamed.name = substitute(renaming, cu.name);
    for (const auto& [name, value] : cu.formulation_lock) {
      renamed.formulation_lock.set(name, substitute(renaming, value));
    }
    for (const auto& [name, value] : cu.comprehension_lock) {
      renamed.comprehension_lock.set(name, substitute(renaming, value));
    }
    rc.conditional.push_back(std::move(renamed));
    rc.conditional_bases.push_back(base_of(cu.name));
  }

  // Enumerate consistent lock matches, one conditional unit at a time.
  std::vector<PartialMatch> partials{PartialMatch{}};
  for (std::size_t ci = 0; ci < rc.conditional.size(); ++ci) {
    const ConditionalUnit& cu = rc.conditional[ci];
    const LockView view = lock_view(cu, dir);
    std::vector<PartialMatch> next;

    for (const PartialMatch& partial : partials) {
      // Resolve the unit the lock applies to.
      std::vector<std::pair<std::optional<std::string>, Bindings>> candidates;
      if (view.non_hash.empty()) {
        const Term walked = partial.bindings.walk(cu.name);
        const Unit* existing =
            walked.is_atom() ? structure.find_unit(walked.symbol()) : nullptr;
        if (existing != nullptr) {
          candidates.emplace_back(existing->name.symbol(), partial.bindings);
        } else {
          candidates.emplace_back(std::nullopt, partial.bindings);
        }
      } else {
        for (const Unit& u : structure.units()) {
          if (std::find(partial.matched_units.begin(),
                        partial.matched_units.end(),
                        u.name.symbol()) != partial.matched_units.end()) {
            continue;  // slots bind distinct units
          }
          auto b = unify_terms(cu.name, u.name, partial.bindings);
          if (!b) continue;
          auto b2 = match_lock_features(view, u, *b, net);
          if (!b2) continue;
          candidates.emplace_back(u.name.symbol(), std::move(*b2));
        }
      }

      for (auto& [unit_name, base_bindings] : candidates) {
        std::vector<PartialMatch> expanded;
        {
          PartialMatch seeded = partial;
          seeded.bindings = base_bindings;
          if (unit_name.has_value()) {
            seeded.matched_units.push_back(*unit_name);
          } else {
            seeded.new_units.emplace_back(cu.name, rc.conditional_bases[ci]);
          }
          expanded.push_back(std::move(seeded));
        }

        if (view.hash != nullptr) {
          if (dir == Direction::comprehension) {
            for (const Predicate& pattern : *view.hash) {
              std::vector<PartialMatch> after;
              for (const PartialMatch& pm : expanded) {
                if (pattern.name == kSequencePredicate &&
                    pattern.args.size() == 3) {
                  ClaimedSpans claimed = structure.claimed_form();
                  for (const FormClaim& c : pm.form_claims) {
                    claimed[c.pred_index].emplace_back(c.start, c.end);
                  }
                  auto matches = match_sequence(pattern, structure.form(),
                                                pm.bindings, &claimed);
                  for (auto& m : matches) {
                    PartialMatch nx = pm;
                    nx.bindings = std::move(m.bindings);
                    nx.form_claims.push_back(
                        {m.inventory_index, m.start, m.end});
                    after.push_back(std::move(nx));
                  }
                } else {
                  std::vector<std::size_t> excluded;
                  for (const FormClaim& c : pm.form_claims) {
                    if (c.start < 0) excluded.push_back(c.pred_index);
                  }
                  for (const auto& [idx, spans] : structure.claimed_form()) {
                    for (const auto& [s, e] : spans) {
                      if (s < 0) excluded.push_back(idx);
                    }
                  }
                  auto matches = match_predicate_set(
                      std::span<const Predicate>(&pattern, 1),
                      structure.form(), pm.bindings, excluded);
                  for (auto& m : matches) {
                    PartialMatch nx = pm;
                    nx.bindings = std::move(m.bindings);
                    nx.form_claims.push_back(
                        {m.matched.front(), -1, -1});
                    after.push_back(std::move(nx));
                  }
                }
              }
              expanded = std::move(after);
            }
          } else {
            std::vector<PartialMatch> after;
            for (const PartialMatch& pm : expanded) {
              std::vector<std::size_t> excluded(
                  structure.claimed_meaning().begin(),
                  structure.claimed_meaning().end());
              excluded.insert(excluded.end(), pm.meaning_claims.begin(),
                              pm.meaning_claims.end());
              auto matches = match_predicate_set(
                  *view.hash, structure.meaning(), pm.bindings, excluded);
              for (auto& m : matches) {
                PartialMatch nx = pm;
                nx.bindings = std::move(m.bindings);
                nx.meaning_claims.insert(nx.meaning_claims.end(),
                                         m.matched.begin(), m.matched.end());
                after.push_back(std::move(nx));
              }
            }
            expanded = std::move(after);
          }
        }
        next.insert(next.end(), std::make_move_iterator(expanded.begin()),
                    std::make_move_iterator(expanded.end()));
      }
    }
    partials = std::move(next);
    if (partials.empty()) return {};
  }

  // Build a child node per complete assignment.
  std::vector<SearchNode> children;
  for (PartialMatch& match : partials) {
    const std::string signature = claim_signature(cxn.name(), match);
    if (node.structure.signature_seen(signature)) continue;

    SearchNode child;
    child.structure = node.structure;
    Bindings b = match.bindings;
    bool ok = true;

    for (const auto& [name_term, base] : match.new_units) {
      Term resolved = b.walk(name_term);
      std::string unit_name;
      if (resolved.is_var()) {
        unit_name = base + "-" + fresh_suffix();
        if (!b.bind(resolved.name(), Term::atom(unit_name))) {
          ok = false;
          break;
        }
      } else if (resolved.is_atom()) {
        unit_name = resolved.symbol();
      } else {
        ok = false;
        break;
      }
      if (child.structure.find_unit(unit_name) == nullptr) {
        child.structure.add_unit(Unit{Term::atom(unit_name), {}});
      }
    }
    if (!ok) continue;

    for (const Unit& contribution : rc.contributing) {
      Term resolved = b.walk(contribution.name);
      std::string unit_name;
      if (resolved.is_var()) {
        auto it = rc.contributing_bases.find(resolved.name());
        const std::string base =
            it != rc.contributing_bases.end() ? it->second : "unit";
        unit_name = base + "-" + fresh_suffix();
        if (!b.bind(resolved.name(), Term::atom(unit_name))) {
          ok = false;
          break;
        }
        child.structure.add_unit(Unit{Term::atom(unit_name), {}});
      } else if (resolved.is_atom()) {
        unit_name = resolved.symbol();
        if (child.structure.find_unit(unit_name) == nullptr) {
          child.structure.add_unit(Unit{Term::atom(unit_name), {}});
        }
      } else {
        ok = false;
        break;
      }
      Unit* target = child.structure.find_unit(unit_name);
      auto merged = merge_unit(contribution, *target, b, net);
      if (!merged) {
        ok = false;
        break;
      }
      *target = std::move(merged->unit);
      b = std::move(merged->bindings);
    }
    if (!ok) continue;

    for (const ConditionalUnit& cu : rc.conditional) {
      const FeatureMap& opposite = (dir == Direction::comprehension)
                                       ? cu.formulation_lock
                                       : cu.comprehension_lock;
      const char* hash_name =
          (dir == Direction::comprehension) ? kHashMeaning : kHashForm;
      const FeatureValue* hash = opposite.find(hash_name);
      if (hash == nullptr || hash->kind() != FeatureValue::Kind::predicates) {
        continue;
      }
      for (const Predicate& p : hash->preds()) {
        if (dir == Direction::comprehension) {
          child.structure.add_meaning(substitute(b, p));
        } else {
          child.structure.add_form(substitute(b, p));
        }
      }
    }

    Footprint footprint;
    footprint.form = match.form_claims;
    footprint.meaning = match.meaning_claims;
    footprint.units = match.matched_units;
    std::sort(footprint.units.begin(), footprint.units.end());
    child.structure.record_footprint(cxn.name(), footprint);
    child.structure.record_signature(signature);
    child.structure.apply_bindings(b);

    child.applied = node.applied;
    child.applied.emplace_back(cxn.name(), b);
    child.depth = node.depth + 1;

    for (TraceObserver* obs : observers_) {
      obs->on_application(node, cxn.name(), b, child);
    }
    children.push_back(std::move(child));
  }
  return children;
}

bool Engine::goal_test(const SearchNode& node, Direction dir) const {
  if (dir == Direction::comprehension) {
    return !node.structure.meaning().empty() && !node.applied.empty();
  }
  if (node.structure.form().empty()) return false;
  const std::size_t total = node.structure.meaning().size();
  if (node.structure.claimed_meaning().size() != total) return false;
  return render(node).has_value();
}

namespace {

struct RenderItem {
  std::string text;
  Term left;
  Term right;
  std::size_t pred_index;
};

std::optional<std::string> boundary_key(const Term& t) {
  if (t.is_integer()) return "i:" + std::to_string(t.value());
  if (t.is_var()) return "v:" + t.name();
  return std::nullopt;
}

}  // namespace

std::optional<std::string> Engine::render(const SearchNode& node) {
  std::vector<RenderItem> items;
  std::size_t index = 0;
  for (const Predicate& p : node.structure.form()) {
    if (p.name == kSequencePredicate && p.args.size() == 3 &&
        p.args[0].is_str()) {
      items.push_back({p.args[0].text(), p.args[1], p.args[2], index});
    }
    ++index;
  }
  if (items.empty()) return std::nullopt;

  // Overlapping ground spans signal inconsistent form constraints.
  std::vector<std::pair<int, int>> spans;
  for (const RenderItem& item : items) {
    if (item.left.is_integer() && item.right.is_integer()) {
      spans.emplace_back(static_cast<int>(item.left.value()),
                         static_cast<int>(item.right.value()));
    }
  }
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first < spans[i - 1].second) return std::nullopt;
  }

  std::map<std::string, std::size_t> by_left;
  std::set<std::string> right_keys;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto lk = boundary_key(items[i].left);
    if (lk.has_value()) {
      if (!by_left.emplace(*lk, i).second) return std::nullopt;
    }
    auto rk = boundary_key(items[i].right);
    if (rk.has_value() && !right_keys.insert(*rk).second) return std::nullopt;
  }

  struct Block {
    std::string text;
    std::optional<int> ground_start;
    std::size_t first_pred;
  };
  std::vector<Block> blocks;
  std::vector<bool> consumed(items.size(), false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto lk = boundary_key(items[i].left);
    if (lk.has_value() && right_keys.count(*lk) != 0) continue;  // not a head
    Block block;
    block.first_pred = items[i].pred_index;
    block.ground_start =
        items[i].left.is_integer()
            ? std::optional<int>(static_cast<int>(items[i].left.value()))
            : std::nullopt;
    std::size_t current = i;
    while (true) {
      if (consumed[current]) return std::nullopt;
      consumed[current] = true;
      block.text += items[current].text;
      block.first_pred = std::min(block.first_pred, items[current].pred_index);
      auto rk = boundary_key(items[current].right);
      if (!rk.has_value()) break;
      auto it = by_left.find(*rk);
      if (it == by_left.end()) break;
      current = it->second;
    }
    blocks.push_back(std::move(block));
  }
  if (std::find(consumed.begin(), consumed.end(), false) != consumed.end()) {
    return std::nullopt;  // leftover items form a cycle
  }

  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) {
                     const bool ga = a.ground_start.has_value();
                     const bool gb = b.ground_start.has_value();
                     if (ga != gb) return ga;
                     if (ga && gb && *a.ground_start != *b.ground_start) {
                       return *a.ground_start < *b.ground_start;
                     }
                     return a.first_pred < b.first_pred;
                   });

  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += " ";
    out += blocks[i].text;
  }
  return out;
}

SearchOutcome Engine::search(const TransientStructure& initial,
                             const Grammar& grammar, Direction dir) {
  for (TraceObserver* obs : observers_) obs->on_search_start(dir, initial);

  std::vector<const Construction*> ordered;
  ordered.reserve(grammar.size());
  for (const Construction& c : grammar.cxns()) ordered.push_back(&c);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Construction* a, const Construction* b) {
                     if (a->get_score() != b->get_score()) {
                       return a->get_score() > b->get_score();
                     }
                     return a->name() < b->name();
                   });

  const GrammarConfig& config = grammar.config();
  std::vector<Solution> solutions;
  std::size_t expanded = 0;

  auto make_solution = [&](const SearchNode& node) -> std::optional<Solution> {
    Solution s;
    s.node = node;
    s.direction = dir;
    if (dir == Direction::comprehension) {
      s.network = PredicateNetwork(node.structure.meaning());
    } else {
      auto utterance = render(node);
      if (!utterance) return std::nullopt;
      s.utterance = *utterance;
    }
    double total = 0.0;
    for (const auto& [name, bindings] : node.applied) {
      total += grammar.cxn(name).get_score();
    }
    s.mean_score = node.applied.empty() ? 0.0 : total / node.applied.size();
    return s;
  };

  std::function<void(const SearchNode&)> visit = [&](const SearchNode& node) {
    if (solutions.size() >= static_cast<std::size_t>(config.max_solutions)) {
      return;
    }
    if (expanded >= static_cast<std::size_t>(config.max_nodes)) return;
    ++expanded;

    std::vector<SearchNode> children;
    if (node.depth < config.max_depth) {
      for (const Construction* cxn : ordered) {
        std::vector<SearchNode> kids = apply_cxn(*cxn, node, dir, grammar);
        children.insert(children.end(),
                        std::make_move_iterator(kids.begin()),
                        std::make_move_iterator(kids.end()));
      }
    } else {
      return;  // depth cap: dead end, not a terminal node
    }

    if (children.empty()) {
      const bool passed = goal_test(node, dir);
      for (TraceObserver* obs : observers_) obs->on_goal_test(node, passed);
      if (passed) {
        auto solution = make_solution(node);
        if (solution) {
          for (TraceObserver* obs : observers_) obs->on_solution(*solution);
          solutions.push_back(std::move(*solution));
        }
      }
      return;
    }
    for (const SearchNode& child : children) {
      visit(child);
      if (solutions.size() >=
              static_cast<std::size_t>(config.max_solutions) ||
          expanded >= static_cast<std::size_t>(config.max_nodes)) {
        break;
      }
    }
  };

  SearchNode root;
  root.structure = initial;
  visit(root);

  if (solutions.empty() &&
      expanded >= static_cast<std::size_t>(config.max_nodes)) {
    throw ResourceExhaustedError(
        "search explored " + std::to_string(expanded) +
        " nodes without finding a solution");
  }

  SearchOutcome outcome;
  outcome.expanded_nodes = expanded;
  if (!solutions.empty()) {
    std::stable_sort(solutions.begin(), solutions.end(), ranks_before);
    outcome.best = solutions.front();
    std::vector<std::string> best_multiset = outcome.best->applied_names();
    std::sort(best_multiset.begin(), best_multiset.end());
    std::set<std::vector<std::string>> seen{best_multiset};
    for (std::size_t i = 1; i < solutions.size(); ++i) {
      std::vector<std::string> multiset = solutions[i].applied_names();
      std::sort(multiset.begin(), multiset.end());
      if (seen.insert(multiset).second) {
        outcome.competitors.push_back(solutions[i]);
      }
    }
  }
  for (TraceObserver* obs : observers_) obs->on_search_end(outcome);
  return outcome;
}

std::pair<std::optional<PredicateNetwork>, std::vector<Solution>>
Engine::comprehend(const Grammar& grammar, const std::string& utterance) {
  SearchOutcome outcome =
      search(de_render(utterance), grammar, Direction::comprehension);
  if (!outcome.best) return {std::nullopt, std::move(outcome.competitors)};
  return {outcome.best->network, std::move(outcome.competitors)};
}

std::pair<std::optional<std::string>, std::vector<Solution>>
Engine::formulate(const Grammar& grammar, const PredicateNetwork& meaning) {
  TransientStructure initial = TransientStructure::empty();
  for (const Predicate& p : meaning.predicates()) initial.add_meaning(p);
  SearchOutcome outcome = search(initial, grammar, Direction::formulation);
  if (!outcome.best) return {std::nullopt, std::move(outcome.competitors)};
  return {outcome.best->utterance, std::move(outcome.competitors)};
}

}  // namespace cxg
