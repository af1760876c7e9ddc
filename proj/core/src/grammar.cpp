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

#include "cxg/grammar.hpp"

#include <algorithm>

#include "cxg/error.hpp"

namespace cxg {

namespace {

double clamped(double score) { return std::clamp(score, 0.0, 1.0); }

}  // namespace

Construction::Construction(std::string_view name,
                           std::vector<Unit> contributing_pole,
                           std::vector<ConditionalUnit> conditional_pole,
                           double score)
    : name_(name),
      contributing_pole_(std::move(contributing_pole)),
      conditional_pole_(std::move(conditional_pole)),
      score_(clamped(score)) {
  if (conditional_pole_.empty()) {
    throw Error(ErrorCategory::logic,
                "construction " + name_ + " needs at least one conditional "
                "unit");
  }
  for (const ConditionalUnit& cu : conditional_pole_) {
    if (cu.formulation_lock.contains(kHashForm)) {
      throw Error(ErrorCategory::logic,
                  "construction " + name_ +
                      ": #form belongs in the comprehension lock");
    }
    if (cu.comprehension_lock.contains(kHashMeaning)) {
      throw Error(ErrorCategory::logic,
                  "construction " + name_ +
                      ": #meaning belongs in the formulation lock");
    }
  }
}

void Construction::set_score(double score) { score_ = clamped(score); }

void Construction::increase_score(double delta) {
  score_ = clamped(score_ + delta);
}

void Construction::decrease_score(double delta) {
  score_ = clamped(score_ - delta);
}

void Construction::set_attribute(std::string_view key, Term value) {
  attributes_[std::string(key)] = std::move(value);
}

const Term* Construction::attribute(std::string_view key) const {
  auto it = attributes_.find(std::string(key));
  if (it == attributes_.end()) return nullptr;
  return &it->second;
}

bool Construction::operator==(const Construction& other) const {
  return name_ == other.name_ &&
         contributing_pole_ == other.contributing_pole_ &&
         conditional_pole_ == other.conditional_pole_ &&
         score_ == other.score_ && attributes_ == other.attributes_;
}

void Grammar::add_cxn(Construction cxn, bool replace) {
  for (Construction& existing : cxns_) {
    if (existing.name() == cxn.name()) {
      if (!replace) throw DuplicateNameError(cxn.name());
      existing = std::move(cxn);
      return;
    }
  }
  cxns_.push_back(std::move(cxn));
}

void Grammar::delete_cxn(std::string_view name) {
  auto it = std::find_if(cxns_.begin(), cxns_.end(), [&](const Construction& c) {
    return c.name() == name;
  });
  if (it == cxns_.end()) throw UnknownNameError(std::string(name));
  cxns_.erase(it);
}

bool Grammar::has_cxn(std::string_view name) const {
  return std::any_of(cxns_.begin(), cxns_.end(), [&](const Construction& c) {
    return c.name() == name;
  });
}

const Construction& Grammar::cxn(std::string_view name) const {
  for (const Construction& c : cxns_) {
    if (c.name() == name) return c;
  }
  throw UnknownNameError(std::string(name));
}

Construction& Grammar::cxn(std::string_view name) {
  for (Construction& c : cxns_) {
    if (c.name() == name) return c;
  }
  throw UnknownNameError(std::string(name));
}

std::vector<std::string> Grammar::cxn_names() const {
  std::vector<std::string> names;
  names.reserve(cxns_.size());
  for (const Construction& c : cxns_) names.push_back(c.name());
  return names;
}

}  // namespace cxg
