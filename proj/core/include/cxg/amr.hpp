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

#ifndef CXG_AMR_HPP_
#define CXG_AMR_HPP_

#include <string>
#include <vector>

#include "cxg/error.hpp"
#include "cxg/term.hpp"

namespace cxg {

/// AMR-style meaning: unary concept predicates (concept instance) and
/// binary role predicates (role source target). Insertion-ordered, literal
/// duplicates dropped.
class PredicateNetwork {
 public:
  PredicateNetwork() = default;
  explicit PredicateNetwork(std::vector<Predicate> predicates);

  void add(Predicate predicate);

  const std::vector<Predicate>& predicates() const { return predicates_; }
  std::size_t size() const { return predicates_.size(); }
  bool empty() const { return predicates_.empty(); }

  std::vector<Predicate> unaries() const;
  std::vector<Predicate> binaries() const;

  bool operator==(const PredicateNetwork& other) const {
    return predicates_ == other.predicates_;
  }

 private:
  std::vector<Predicate> predicates_;
};

class MultipleRootsError : public Error {
 public:
  explicit MultipleRootsError(const std::string& message)
      : Error(ErrorCategory::malformed, message) {}
};

class CycleError : public Error {
 public:
  explicit CycleError(const std::string& message)
      : Error(ErrorCategory::malformed, message) {}
};

class DisconnectedNetworkError : public Error {
 public:
  explicit DisconnectedNetworkError(const std::string& message)
      : Error(ErrorCategory::malformed, message) {}
};

class UndeclaredVariableError : public Error {
 public:
  explicit UndeclaredVariableError(const std::string& variable)
      : Error(ErrorCategory::malformed,
              "undeclared variable: " + variable) {}
};

// Parses Penman notation, whitespace-insensitive. Every node contributes a
// unary predicate, every role edge a binary one; variables are preserved as
// instance terms. Re-entrant references to declared variables are allowed.
PredicateNetwork penman_to_predicate_network(const std::string& penman);

// Serializes a network whose unique root is the instance without incoming
// edges. Children of a node are ordered non-inverted roles first, then
// "-of" roles, each by ascending arg index. Variable names are the first
// character of the concept plus a counter from 2 on collisions. The
// canonical form is a single line with single spaces; pretty mode breaks
// before each role and indents six spaces per depth.
std::string predicate_network_to_penman(const PredicateNetwork& network,
                                        bool pretty = false);

}  // namespace cxg

#endif  // CXG_AMR_HPP_
