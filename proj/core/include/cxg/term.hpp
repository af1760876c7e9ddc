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

#ifndef CXG_TERM_HPP_
#define CXG_TERM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cxg {

/// The term language of the unification substrate: atoms (case-insensitive
/// symbols), exact string literals, integers, variables (names start with
/// "?") and ordered compounds.
class Term {
 public:
  enum class Kind { atom, str, integer, var, compound };

  Term() : kind_(Kind::atom), symbol_("nil") {}

  static Term atom(std::string_view symbol);
  static Term str(std::string text);
  static Term integer(std::int64_t value);
  static Term var(std::string_view name);
  static Term compound(std::vector<Term> elements);

  // "?x" becomes a variable, anything else an atom.
  static Term from_symbol(std::string_view s);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::atom; }
  bool is_str() const { return kind_ == Kind::str; }
  bool is_integer() const { return kind_ == Kind::integer; }
  bool is_var() const { return kind_ == Kind::var; }
  bool is_compound() const { return kind_ == Kind::compound; }

  const std::string& symbol() const { return symbol_; }    // atom
  const std::string& text() const { return symbol_; }      // str
  std::int64_t value() const { return value_; }            // integer
  const std::string& name() const { return symbol_; }      // var
  const std::vector<Term>& elements() const { return elements_; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const;

 private:
  Kind kind_;
  std::string symbol_;  // atom symbol (lowercased), str text, or var name
  std::int64_t value_ = 0;
  std::vector<Term> elements_;
};

std::string to_string(const Term& term);

/// A named relation over terms, e.g. (sequence "dog" ?left ?right) or
/// (dog ?d). The name is a non-variable symbol.
struct Predicate {
  std::string name;  // lowercased
  std::vector<Term> args;

  Predicate() = default;
  Predicate(std::string_view name, std::vector<Term> args);

  bool operator==(const Predicate& other) const {
    return name == other.name && args == other.args;
  }
  bool operator!=(const Predicate& other) const { return !(*this == other); }
  bool operator<(const Predicate& other) const;
};

std::string to_string(const Predicate& predicate);

/// Value of one unit feature: a single term, a pair (e.g. boundaries), or a
/// set of predicates (the hash features and the root inventories).
class FeatureValue {
 public:
  enum class Kind { single, pair, predicates };

  FeatureValue() : kind_(Kind::single), single_(Term::atom("nil")) {}

  static FeatureValue single(Term term);
  static FeatureValue pair(Term left, Term right);
  static FeatureValue predicates(std::vector<Predicate> predicates);

  Kind kind() const { return kind_; }
  const Term& term() const { return single_; }
  const std::pair<Term, Term>& as_pair() const { return pair_; }
  const std::vector<Predicate>& preds() const { return predicates_; }
  std::vector<Predicate>& preds() { return predicates_; }

  bool operator==(const FeatureValue& other) const;
  bool operator!=(const FeatureValue& other) const { return !(*this == other); }

 private:
  Kind kind_;
  Term single_;
  std::pair<Term, Term> pair_;
  std::vector<Predicate> predicates_;  // insertion order, no literal dupes
};

std::string to_string(const FeatureValue& value);

/// Feature map preserving insertion order; names are unique and lowercased.
class FeatureMap {
 public:
  using Entry = std::pair<std::string, FeatureValue>;

  bool contains(std::string_view name) const;
  const FeatureValue* find(std::string_view name) const;
  FeatureValue* find(std::string_view name);
  // Inserting an existing name replaces its value in place.
  void set(std::string_view name, FeatureValue value);
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<Entry>::const_iterator begin() const { return entries_.begin(); }
  std::vector<Entry>::const_iterator end() const { return entries_.end(); }

  bool operator==(const FeatureMap& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

/// One unit of a transient structure or a contributing pole.
struct Unit {
  Term name;  // Var in poles, ground Atom in transient structures
  FeatureMap features;

  bool operator==(const Unit& other) const {
    return name == other.name && features == other.features;
  }
};

std::string to_string(const Unit& unit);

/// A substitution from variable names to terms. Extension never overwrites
/// an existing binding with a conflicting value.
class Bindings {
 public:
  bool contains(const std::string& var) const;
  std::optional<Term> lookup(const std::string& var) const;

  // Resolves variable chains until a non-variable or unbound variable is
  // reached. Does not descend into compounds.
  Term walk(const Term& term) const;

  // Returns false when var is already bound to a different value; binding
  // to an equal value is a no-op.
  bool bind(const std::string& var, Term value);

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  const std::map<std::string, Term>& entries() const { return map_; }

  bool operator==(const Bindings& other) const { return map_ == other.map_; }

 private:
  std::map<std::string, Term> map_;
};

std::string to_string(const Bindings& bindings);

// Hash feature names are pole-only; the root inventories use the plain
// names "form" and "meaning".
inline bool is_hash_feature(std::string_view name) {
  return !name.empty() && name.front() == '#';
}

constexpr const char* kFormFeature = "form";
constexpr const char* kMeaningFeature = "meaning";
constexpr const char* kHashForm = "#form";
constexpr const char* kHashMeaning = "#meaning";
constexpr const char* kSequencePredicate = "sequence";

}  // namespace cxg

#endif  // CXG_TERM_HPP_
