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

#include "cxg/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cxg/error.hpp"

namespace cxg {

namespace {

std::string lowercased(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

Term Term::atom(std::string_view symbol) {
  if (!symbol.empty() && symbol.front() == '?') {
    throw Error(ErrorCategory::logic,
                "atom symbol may not start with '?': " + std::string(symbol));
  }
  Term t;
  t.kind_ = Kind::atom;
  t.symbol_ = lowercased(symbol);
  return t;
}

Term Term::str(std::string text) {
  Term t;
  t.kind_ = Kind::str;
  t.symbol_ = std::move(text);
  return t;
}

Term Term::integer(std::int64_t value) {
  Term t;
  t.kind_ = Kind::integer;
  t.symbol_.clear();
  t.value_ = value;
  return t;
}

Term Term::var(std::string_view name) {
  if (name.empty() || name.front() != '?') {
    throw Error(ErrorCategory::logic,
                "variable name must start with '?': " + std::string(name));
  }
  Term t;
  t.kind_ = Kind::var;
  t.symbol_ = lowercased(name);
  return t;
}

Term Term::compound(std::vector<Term> elements) {
  Term t;
  t.kind_ = Kind::compound;
  t.symbol_.clear();
  t.elements_ = std::move(elements);
  return t;
}

Term Term::from_symbol(std::string_view s) {
  if (!s.empty() && s.front() == '?') return var(s);
  return atom(s);
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::atom:
    case Kind::str:
    case Kind::var:
      return symbol_ == other.symbol_;
    case Kind::integer:
      return value_ == other.value_;
    case Kind::compound:
      return elements_ == other.elements_;
  }
  return false;
}

bool Term::operator<(const Term& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  switch (kind_) {
    case Kind::atom:
    case Kind::str:
    case Kind::var:
      return symbol_ < other.symbol_;
    case Kind::integer:
      return value_ < other.value_;
    case Kind::compound:
      return elements_ < other.elements_;
  }
  return false;
}

std::string to_string(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::atom:
      return term.symbol();
    case Term::Kind::str:
      return "\"" + term.text() + "\"";
    case Term::Kind::integer:
      return std::to_string(term.value());
    case Term::Kind::var:
      return term.name();
    case Term::Kind::compound: {
      std::ostringstream out;
      out << "(";
      bool first = true;
      for (const Term& e : term.elements()) {
        if (!first) out << " ";
        out << to_string(e);
        first = false;
      }
      out << ")";
      return out.str();
    }
  }
  return "";
}

Predicate::Predicate(std::string_view name, std::vector<Term> args)
    : name(lowercased(name)), args(std::move(args)) {
  if (!this->name.empty() && this->name.front() == '?') {
    throw Error(ErrorCategory::logic,
                "predicate name may not be a variable: " + this->name);
  }
}

bool Predicate::operator<(const Predicate& other) const {
  if (name != other.name) return name < other.name;
  return args < other.args;
}

std::string to_string(const Predicate& predicate) {
  std::ostringstream out;
  out << "(" << predicate.name;
  for (const Term& a : predicate.args) out << " " << to_string(a);
  out << ")";
  return out.str();
}

FeatureValue FeatureValue::single(Term term) {
  FeatureValue v;
  v.kind_ = Kind::single;
  v.single_ = std::move(term);
  return v;
}

FeatureValue FeatureValue::pair(Term left, Term right) {
  FeatureValue v;
  v.kind_ = Kind::pair;
  v.pair_ = {std::move(left), std::move(right)};
  return v;
}

FeatureValue FeatureValue::predicates(std::vector<Predicate> predicates) {
  FeatureValue v;
  v.kind_ = Kind::predicates;
  // Literal duplicates are dropped, keeping first occurrence.
  for (Predicate& p : predicates) {
    if (std::find(v.predicates_.begin(), v.predicates_.end(), p) ==
        v.predicates_.end()) {
      v.predicates_.push_back(std::move(p));
    }
  }
  return v;
}

bool FeatureValue::operator==(const FeatureValue& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::single:
      return single_ == other.single_;
    case Kind::pair:
      return pair_ == other.pair_;
    case Kind::predicates:
      return predicates_ == other.predicates_;
  }
  return false;
}

std::string to_string(const FeatureValue& value) {
  switch (value.kind()) {
    case FeatureValue::Kind::single:
      return to_string(value.term());
    case FeatureValue::Kind::pair:
      return "(" + to_string(value.as_pair().first) + " " +
             to_string(value.as_pair().second) + ")";
    case FeatureValue::Kind::predicates: {
      std::ostringstream out;
      out << "{";
      bool first = true;
      for (const Predicate& p : value.preds()) {
        if (!first) out << ", ";
        out << to_string(p);
        first = false;
      }
      out << "}";
      return out.str();
    }
  }
  return "";
}

bool FeatureMap::contains(std::string_view name) const {
  return find(name) != nullptr;
}

const FeatureValue* FeatureMap::find(std::string_view name) const {
  const std::string key = lowercased(name);
  for (const Entry& e : entries_) {
    if (e.first == key) return &e.second;
  }
  return nullptr;
}

FeatureValue* FeatureMap::find(std::string_view name) {
  const std::string key = lowercased(name);
  for (Entry& e : entries_) {
    if (e.first == key) return &e.second;
  }
  return nullptr;
}

void FeatureMap::set(std::string_view name, FeatureValue value) {
  const std::string key = lowercased(name);
  for (Entry& e : entries_) {
    if (e.first == key) {
      e.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

std::string to_string(const Unit& unit) {
  std::ostringstream out;
  out << to_string(unit.name) << " {";
  bool first = true;
  for (const auto& [name, value] : unit.features) {
    if (!first) out << ", ";
    out << name << ": " << to_string(value);
    first = false;
  }
  out << "}";
  return out.str();
}

bool Bindings::contains(const std::string& var) const {
  return map_.count(var) != 0;
}

std::optional<Term> Bindings::lookup(const std::string& var) const {
  auto it = map_.find(var);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Term Bindings::walk(const Term& term) const {
  Term current = term;
  while (current.is_var()) {
    auto it = map_.find(current.name());
    if (it == map_.end()) return current;
    current = it->second;
  }
  return current;
}

bool Bindings::bind(const std::string& var, Term value) {
  if (value.is_var() && value.name() == var) return true;  // keep acyclic
  auto it = map_.find(var);
  if (it != map_.end()) return it->second == value;
  map_.emplace(var, std::move(value));
  return true;
}

std::string to_string(const Bindings& bindings) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [var, value] : bindings.entries()) {
    if (!first) out << ", ";
    out << var << " -> " << to_string(value);
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace cxg
