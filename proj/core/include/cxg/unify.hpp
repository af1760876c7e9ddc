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

#ifndef CXG_UNIFY_HPP_
#define CXG_UNIFY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cxg/categorial_network.hpp"
#include "cxg/term.hpp"

namespace cxg {

// Symmetric term unification. Atom-versus-atom succeeds on equality or,
// when a categorial network is supplied, on a direct link between the two
// atoms. No occurs check is performed; poles are authored or induced and
// assumed non-pathological.
std::optional<Bindings> unify_terms(const Term& a, const Term& b,
                                    const Bindings& bindings,
                                    const CategorialNetwork* net = nullptr);

// Name, arity, and argument-wise unification. The categorial network is
// never consulted for predicate arguments.
std::optional<Bindings> unify_predicates(const Predicate& pattern,
                                         const Predicate& target,
                                         const Bindings& bindings);

// Full substitution: every bound variable is replaced by its walked value,
// unbound variables stay. Idempotent.
Term substitute(const Bindings& bindings, const Term& term);
Predicate substitute(const Bindings& bindings, const Predicate& predicate);
FeatureValue substitute(const Bindings& bindings, const FeatureValue& value);
Unit substitute(const Bindings& bindings, const Unit& unit);

struct PredicateSetMatch {
  Bindings bindings;
  std::vector<std::size_t> matched;  // indices into the target span
};

// All maximal consistent injective assignments of pattern predicates onto
// distinct target predicates, in lexicographic order of matched target
// positions. Indices listed in `excluded` are unavailable (claimed).
std::vector<PredicateSetMatch> match_predicate_set(
    std::span<const Predicate> pattern, std::span<const Predicate> target,
    const Bindings& bindings, const std::vector<std::size_t>& excluded = {});

// Character spans claimed per inventory-predicate index; start inclusive,
// end exclusive, in utterance coordinates.
using ClaimedSpans = std::map<std::size_t, std::vector<std::pair<int, int>>>;

struct SequenceMatch {
  Bindings bindings;
  std::size_t inventory_index;
  int start;
  int end;
};

// Matches a (sequence Str ?l ?r) pattern against the (sequence Str Int Int)
// predicates of the utterance inventory. One result per substring
// occurrence, overlapping occurrences included, in (inventory order, start
// offset) order. Occurrences overlapping a claimed span are excluded.
std::vector<SequenceMatch> match_sequence(const Predicate& pattern,
                                          std::span<const Predicate> inventory,
                                          const Bindings& bindings,
                                          const ClaimedSpans* claimed = nullptr);

struct MergeResult {
  Unit unit;
  Bindings bindings;
};

// Merges a contributing-pole unit into a target unit: disjoint features are
// inserted, shared features must unify (Single by unify_terms, Pair
// pointwise, PredicateSet by union). The categorial network applies only to
// the feature named "category"; on a linked-but-unequal pair the target's
// atom is kept. Returns nothing when a shared feature fails to unify.
std::optional<MergeResult> merge_unit(const Unit& contribution,
                                      const Unit& target,
                                      const Bindings& bindings,
                                      const CategorialNetwork* net = nullptr);

}  // namespace cxg

#endif  // CXG_UNIFY_HPP_
