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

#include "cxg/categorial_network.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

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

std::pair<std::string, std::string> ordered_pair(std::string a,
                                                 std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

void CategorialNetwork::add_category(std::string_view category) {
  categories_.insert(lowercased(category));
}

bool CategorialNetwork::has_category(std::string_view category) const {
  return categories_.count(lowercased(category)) != 0;
}

void CategorialNetwork::add_link(std::string_view a, std::string_view b) {
  const std::string la = lowercased(a);
  const std::string lb = lowercased(b);
  if (categories_.count(la) == 0) throw UnknownNameError(la);
  if (categories_.count(lb) == 0) throw UnknownNameError(lb);
  links_.insert(ordered_pair(la, lb));
}

bool CategorialNetwork::linked(std::string_view a, std::string_view b) const {
  const std::string la = lowercased(a);
  const std::string lb = lowercased(b);
  if (la == lb) return true;
  return links_.count(ordered_pair(la, lb)) != 0;
}

bool CategorialNetwork::connected(std::string_view a,
                                  std::string_view b) const {
  const std::string start = lowercased(a);
  const std::string goal = lowercased(b);
  if (start == goal) return true;
  std::set<std::string> seen{start};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    const std::string current = queue.front();
    queue.pop_front();
    for (const auto& [x, y] : links_) {
      std::string next;
      if (x == current) {
        next = y;
      } else if (y == current) {
        next = x;
      } else {
        continue;
      }
      if (next == goal) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

std::vector<std::string> CategorialNetwork::categories() const {
  return {categories_.begin(), categories_.end()};
}

std::vector<std::pair<std::string, std::string>> CategorialNetwork::links()
    const {
  return {links_.begin(), links_.end()};
}

}  // namespace cxg
