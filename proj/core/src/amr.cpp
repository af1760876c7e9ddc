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

#include "cxg/amr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cxg {

PredicateNetwork::PredicateNetwork(std::vector<Predicate> predicates) {
  for (Predicate& p : predicates) add(std::move(p));
}

void PredicateNetwork::add(Predicate predicate) {
  if (std::find(predicates_.begin(), predicates_.end(), predicate) ==
      predicates_.end()) {
    predicates_.push_back(std::move(predicate));
  }
}

std::vector<Predicate> PredicateNetwork::unaries() const {
  std::vector<Predicate> out;
  for (const Predicate& p : predicates_) {
    if (p.args.size() == 1) out.push_back(p);
  }
  return out;
}

std::vector<Predicate> PredicateNetwork::binaries() const {
  std::vector<Predicate> out;
  for (const Predicate& p : predicates_) {
    if (p.args.size() == 2) out.push_back(p);
  }
  return out;
}

namespace {

struct PenmanParser {
  const std::string& input;
  std::size_t pos = 0;
  PredicateNetwork network;
  std::set<std::string> declared;
  std::vector<std::pair<std::string, std::size_t>> references;

  explicit PenmanParser(const std::string& in) : input(in) {}

  void skip_ws() {
    while (pos < input.size() &&
           (input[pos] == ' ' || input[pos] == '\t' || input[pos] == '\n' ||
            input[pos] == '\r')) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError("penman: " + message, pos);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= input.size() || input[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < input.size() && input[pos] == c;
  }

  std::string symbol() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < input.size()) {
      const char c = input[pos];
      if (c == '(' || c == ')' || c == '/' || c == ':' || c == ' ' ||
          c == '\t' || c == '\n' || c == '\r') {
        break;
      }
      ++pos;
    }
    if (pos == start) fail("expected a symbol");
    return input.substr(start, pos - start);
  }

  Term instance_term(const std::string& name) {
    if (!name.empty() && name.front() == '?') return Term::var(name);
    return Term::atom(name);
  }

  // node := '(' var '/' concept (':' role (node | var))* ')'
  std::string parse_node() {
    expect('(');
    const std::string var = symbol();
    declared.insert(var);
    expect('/');
    const std::string concept_name = symbol();
    network.add(Predicate(concept_name, {instance_term(var)}));
    while (true) {
      skip_ws();
      if (pos >= input.size()) fail("unbalanced parentheses");
      if (input[pos] == ')') {
        ++pos;
        return var;
      }
      if (input[pos] != ':') fail("expected a role or ')'");
      ++pos;
      const std::string role = symbol();
      std::string child;
      if (peek('(')) {
        child = parse_node();
      } else {
        child = symbol();
        references.emplace_back(child, pos);
      }
      network.add(
          Predicate(role, {instance_term(var), instance_term(child)}));
    }
  }

  PredicateNetwork parse() {
    const std::string root = parse_node();
    (void)root;
    skip_ws();
    if (pos != input.size()) fail("trailing input after the root node");
    for (const auto& [name, at] : references) {
      if (declared.count(name) == 0) throw UndeclaredVariableError(name);
    }
    return network;
  }
};

bool is_inverted_role(const std::string& role) {
  return role.size() > 3 && role.compare(role.size() - 3, 3, "-of") == 0;
}

// arg index of "arg<k>" or "arg<k>-of"; absent for general role names.
int role_arg_index(const std::string& role) {
  std::string base = role;
  if (is_inverted_role(base)) base = base.substr(0, base.size() - 3);
  if (base.size() < 4 || base.compare(0, 3, "arg") != 0) return 1 << 20;
  int index = 0;
  for (std::size_t i = 3; i < base.size(); ++i) {
    if (base[i] < '0' || base[i] > '9') return 1 << 20;
    index = index * 10 + (base[i] - '0');
  }
  return index;
}

struct Edge {
  std::string role;
  Term target;
  std::size_t order;  // insertion position, final tiebreak
};

struct PenmanWriter {
  std::map<Term, std::string> concepts;
  std::map<Term, std::vector<Edge>> edges;
  std::map<Term, std::string> names;
  std::set<std::string> used_names;
  std::set<Term> emitted;
  std::set<Term> stack;
  bool pretty = false;

  std::string assign_name(const Term& instance) {
    const std::string& concept_name = concepts.at(instance);
    std::string base = concept_name.empty() ? "x" : concept_name.substr(0, 1);
    std::string candidate = base;
    for (int counter = 2; used_names.count(candidate) != 0; ++counter) {
      candidate = base + std::to_string(counter);
    }
    used_names.insert(candidate);
    names[instance] = candidate;
    return candidate;
  }

  void write_node(const Term& instance, int depth, std::ostringstream& out) {
    if (stack.count(instance) != 0) {
      throw CycleError("penman: cycle through concept " +
                       concepts.at(instance));
    }
    if (emitted.count(instance) != 0) {
      out << names.at(instance);  // re-entrant mention
      return;
    }
    stack.insert(instance);
    emitted.insert(instance);
    const std::string name = assign_name(instance);
    out << "(" << name << " / " << concepts.at(instance);
    auto it = edges.find(instance);
    if (it != edges.end()) {
      std::vector<Edge> ordered = it->second;
      std::stable_sort(ordered.begin(), ordered.end(),
                       [](const Edge& a, const Edge& b) {
                         const bool ia = is_inverted_role(a.role);
                         const bool ib = is_inverted_role(b.role);
                         if (ia != ib) return ib;
                         const int xa = role_arg_index(a.role);
                         const int xb = role_arg_index(b.role);
                         if (xa != xb) return xa < xb;
                         if (a.role != b.role) return a.role < b.role;
                         return a.order < b.order;
                       });
      for (const Edge& edge : ordered) {
        if (pretty) {
          out << "\n" << std::string(6 * (depth + 1), ' ');
        } else {
          out << " ";
        }
        out << ":" << edge.role << " ";
        write_node(edge.target, depth + 1, out);
      }
    }
    out << ")";
    stack.erase(instance);
  }
};

}  // namespace

PredicateNetwork penman_to_predicate_network(const std::string& penman) {
  PenmanParser parser(penman);
  parser.skip_ws();
  if (parser.pos >= penman.size()) {
    throw ParseError("penman: empty input", 0);
  }
  return parser.parse();
}

std::string predicate_network_to_penman(const PredicateNetwork& network,
                                        bool pretty) {
  PenmanWriter writer;
  writer.pretty = pretty;

  std::size_t order = 0;
  for (const Predicate& p : network.predicates()) {
    if (p.args.size() == 1) {
      auto [it, inserted] = writer.concepts.emplace(p.args[0], p.name);
      if (!inserted) {
        throw Error(ErrorCategory::malformed,
                    "penman: instance " + to_string(p.args[0]) +
                        " has more than one concept");
      }
    } else if (p.args.size() == 2) {
      writer.edges[p.args[0]].push_back({p.name, p.args[1], order});
    } else {
      throw Error(ErrorCategory::malformed,
                  "penman: predicate " + to_string(p) +
                      " is neither unary nor binary");
    }
    ++order;
  }
  if (writer.concepts.empty()) {
    throw Error(ErrorCategory::malformed, "penman: empty network");
  }

  std::set<Term> has_incoming;
  for (const auto& [source, edge_list] : writer.edges) {
    if (writer.concepts.count(source) == 0) {
      throw Error(ErrorCategory::malformed,
                  "penman: role source " + to_string(source) +
                      " has no concept");
    }
    for (const Edge& e : edge_list) {
      if (writer.concepts.count(e.target) == 0) {
        throw Error(ErrorCategory::malformed,
                    "penman: role target " + to_string(e.target) +
                        " has no concept");
      }
      has_incoming.insert(e.target);
    }
  }

  std::vector<Term> roots;
  for (const auto& [instance, concept_name] : writer.concepts) {
    if (has_incoming.count(instance) == 0) roots.push_back(instance);
  }
  if (roots.empty()) {
    throw CycleError("penman: every instance has an incoming edge");
  }
  if (roots.size() > 1) {
    std::ostringstream msg;
    msg << "penman: " << roots.size() << " roots:";
    for (const Term& r : roots) msg << " " << writer.concepts.at(r);
    throw MultipleRootsError(msg.str());
  }

  // Undirected reachability from the root.
  std::set<Term> reachable{roots[0]};
  std::vector<Term> frontier{roots[0]};
  while (!frontier.empty()) {
    const Term current = frontier.back();
    frontier.pop_back();
    for (const auto& [source, edge_list] : writer.edges) {
      for (const Edge& e : edge_list) {
        if (source == current && reachable.insert(e.target).second) {
          frontier.push_back(e.target);
        }
        if (e.target == current && reachable.insert(source).second) {
          frontier.push_back(source);
        }
      }
    }
  }
  if (reachable.size() != writer.concepts.size()) {
    throw DisconnectedNetworkError(
        "penman: network has unreachable instances");
  }

  std::ostringstream out;
  writer.write_node(roots[0], 0, out);
  return out.str();
}

}  // namespace cxg
