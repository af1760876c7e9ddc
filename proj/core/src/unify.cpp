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

#include "cxg/unify.hpp"

#include <algorithm>
#include <string>

namespace cxg {

namespace {

bool unify_into(const Term& a, const Term& b, Bindings& bindings,
                const CategorialNetwork* net) {
  const Term wa = bindings.walk(a);
  const Term wb = bindings.walk(b);

  if (wa.is_var() && wb.is_var()) {
    if (wa.name() == wb.name()) return true;
    return bindings.bind(wa.name(), wb);
  }
  if (wa.is_var()) return bindings.bind(wa.name(), wb);
  if (wb.is_var()) return bindings.bind(wb.name(), wa);

  if (wa.kind() != wb.kind()) return false;
  switch (wa.kind()) {
    case Term::Kind::atom:
      if (wa.symbol() == wb.symbol()) return true;
      return net != nullptr && net->linked(wa.symbol(), wb.symbol());
    case Term::Kind::str:
      return wa.text() == wb.text();
    case Term::Kind::integer:
      return wa.value() == wb.value();
    case Term::Kind::compound: {
      if (wa.elements().size() != wb.elements().size()) return false;
      for (std::size_t i = 0; i < wa.elements().size(); ++i) {
        if (!unify_into(wa.elements()[i], wb.elements()[i], bindings, net)) {
          return false;
        }
      }
      return true;
    }
    case Term::Kind::var:
      break;  // unreachable, handled above
  }
  return false;
}

}  // namespace

std::optional<Bindings> unify_terms(const Term& a, const Term& b,
                                    const Bindings& bindings,
                                    const CategorialNetwork* net) {
  Bindings result = bindings;
  if (!unify_into(a, b, result, net)) return std::nullopt;
  return result;
}

std::optional<Bindings> unify_predicates(const Predicate& pattern,
                                         const Predicate& target,
                                         const Bindings& bindings) {
  if (pattern.name != target.name) return std::nullopt;
  if (pattern.args.size() != target.args.size()) return std::nullopt;
  Bindings result = bindings;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!unify_into(pattern.args[i], target.args[i], result, nullptr)) {
      return std::nullopt;
    }
  }
  return result;
}

Term substitute(const Bindings& bindings, const Term& term) {
  const Term walked = bindings.walk(term);
  if (walked.is_compound()) {
    std::vector<Term> elements;
    elements.reserve(walked.elements().size());
    for (const Term& e : walked.elements()) {
      elements.push_back(substitute(bindings, e));
    }
    return Term::compound(std::move(elements));
  }
  return walked;
}

Predicate substitute(const Bindings& bindings, const Predicate& predicate) {
  Predicate result;
  result.name = predicate.name;
  result.args.reserve(predicate.args.size());
  for (const Term& a : predicate.args) {
    result.args.push_back(substitute(bindings, a));
  }
  return result;
}

FeatureValue substitute(const Bindings& bindings, const FeatureValue& value) {
  switch (value.kind()) {
    case FeatureValue::Kind::single:
      return FeatureValue::single(substitute(bindings, value.term()));
    case FeatureValue::Kind::pair:
      return FeatureValue::pair(substitute(bindings, value.as_pair().first),
                                substitute(bindings, value.as_pair().second));
    case FeatureValue::Kind::predicates: {
      std::vector<Predicate> preds;
      preds.reserve(value.preds().size());
      for (const Predicate& p : value.preds()) {
        preds.push_back(substitute(bindings, p));
      }
      return FeatureValue::predicates(std::move(preds));
    }
  }
  return value;
}

Unit substitute(const Bindings& bindings, const Unit& unit) {
  Unit result;
  result.name = substitute(bindings, unit.name);
  for (const auto& [name, value] : unit.features) {
    result.features.set(name, substitute(bindings, value));
  }
  return result;
}

namespace {

void match_set_rec(std::span<const Predicate> pattern,
                   std::span<const Predicate> target, std::size_t index,
                   const Bindings& bindings, std::vector<std::size_t>& used,
                   const std::vector<std::size_t>& excluded,
                   std::vector<PredicateSetMatch>& out) {
  if (index == pattern.size()) {
    out.push_back({bindings, used});
    return;
  }
  for (std::size_t ti = 0; ti < target.size(); ++ti) {
    if (std::find(used.begin(), used.end(), ti) != used.end()) continue;
    if (std::find(excluded.begin(), excluded.end(), ti) != excluded.end()) {
      continue;
    }
    auto extended = unify_predicates(pattern[index], target[ti], bindings);
    if (!extended) continue;
    used.push_back(ti);
    match_set_rec(pattern, target, index + 1, *extended, used, excluded, out);
    used.pop_back();
  }
}

}  // namespace

std::vector<PredicateSetMatch> match_predicate_set(
    std::span<const Predicate> pattern, std::span<const Predicate> target,
    const Bindings& bindings, const std::vector<std::size_t>& excluded) {
  std::vector<PredicateSetMatch> results;
  std::vector<std::size_t> used;
  match_set_rec(pattern, target, 0, bindings, used, excluded, results);
  return results;
}

std::vector<SequenceMatch> match_sequence(const Predicate& pattern,
                                          std::span<const Predicate> inventory,
                                          const Bindings& bindings,
                                          const ClaimedSpans* claimed) {
  std::vector<SequenceMatch> results;
  if (pattern.name != kSequencePredicate || pattern.args.size() != 3) {
    return results;
  }
  const Term needle_term = bindings.walk(pattern.args[0]);
  if (!needle_term.is_str()) return results;
  const std::string& needle = needle_term.text();
  if (needle.empty()) return results;

  for (std::size_t ii = 0; ii < inventory.size(); ++ii) {
    const Predicate& inv = inventory[ii];
    if (inv.name != kSequencePredicate || inv.args.size() != 3) continue;
    if (!inv.args[0].is_str() || !inv.args[1].is_integer() ||
        !inv.args[2].is_integer()) {
      continue;
    }
    const std::string& haystack = inv.args[0].text();
    const int base = static_cast<int>(inv.args[1].value());

    for (std::size_t pos = 0;
         (pos = haystack.find(needle, pos)) != std::string::npos; ++pos) {
      const int start = base + static_cast<int>(pos);
      const int end = start + static_cast<int>(needle.size());
      if (claimed != nullptr) {
        auto it = claimed->find(ii);
        if (it != claimed->end()) {
          bool overlaps = false;
          for (const auto& [cs, ce] : it->second) {
            if (start < ce && cs < end) {
              overlaps = true;
              break;
            }
          }
          if (overlaps) continue;
        }
      }
      Bindings b = bindings;
      if (!unify_into(pattern.args[1], Term::integer(start), b, nullptr)) {
        continue;
      }
      if (!unify_into(pattern.args[2], Term::integer(end), b, nullptr)) {
        continue;
      }
      results.push_back({std::move(b), ii, start, end});
    }
  }
  return results;
}

std::optional<MergeResult> merge_unit(const Unit& contribution,
                                      const Unit& target,
                                      const Bindings& bindings,
                                      const CategorialNetwork* net) {
  auto b = unify_terms(contribution.name, target.name, bindings);
  if (!b) return std::nullopt;

  Unit merged = target;
  for (const auto& [name, value] : contribution.features) {
    const CategorialNetwork* feature_net =
        (name == "category") ? net : nullptr;
    FeatureValue* existing = merged.features.find(name);
    if (existing == nullptr) {
      merged.features.set(name, value);
      continue;
    }
    if (existing->kind() != value.kind()) return std::nullopt;
    switch (value.kind()) {
      case FeatureValue::Kind::single: {
        auto b2 = unify_terms(value.term(), existing->term(), *b, feature_net);
        if (!b2) return std::nullopt;
        *b = std::move(*b2);
        break;
      }
      case FeatureValue::Kind::pair: {
        auto b2 = unify_terms(value.as_pair().first,
                              existing->as_pair().first, *b, nullptr);
        if (!b2) return std::nullopt;
        auto b3 = unify_terms(value.as_pair().second,
                              existing->as_pair().second, *b2, nullptr);
        if (!b3) return std::nullopt;
        *b = std::move(*b3);
        break;
      }
      case FeatureValue::Kind::predicates: {
        std::vector<Predicate> merged_preds = existing->preds();
        for (const Predicate& p : value.preds()) {
          const Predicate sp = substitute(*b, p);
          if (std::find(merged_preds.begin(), merged_preds.end(), sp) ==
              merged_preds.end()) {
            merged_preds.push_back(sp);
          }
        }
        *existing = FeatureValue::predicates(std::move(merged_preds));
        break;
      }
    }
  }
  return MergeResult{substitute(*b, merged), std::move(*b)};
}

}  // namespace cxg
