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

#ifndef CXG_CATEGORIAL_NETWORK_HPP_
#define CXG_CATEGORIAL_NETWORK_HPP_

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cxg {

/// Categories and the undirected links that license unification of
/// otherwise distinct category atoms (a lexical class filling a phrasal
/// slot). Matching uses direct links only; connected() answers path
/// queries but takes no part in unification.
class CategorialNetwork {
 public:
  void add_category(std::string_view category);
  bool has_category(std::string_view category) const;

  // Both endpoints must already be categories.
  void add_link(std::string_view a, std::string_view b);

  // Symmetric; linked(a, a) is true by convention.
  bool linked(std::string_view a, std::string_view b) const;

  // Path connectivity over links. Not used by the matcher.
  bool connected(std::string_view a, std::string_view b) const;

  std::size_t category_count() const { return categories_.size(); }
  std::size_t link_count() const { return links_.size(); }

  // Sorted views for serialization.
  std::vector<std::string> categories() const;
  std::vector<std::pair<std::string, std::string>> links() const;

  bool operator==(const CategorialNetwork& other) const {
    return categories_ == other.categories_ && links_ == other.links_;
  }

 private:
  std::set<std::string> categories_;
  std::set<std::pair<std::string, std::string>> links_;  // stored min,max
};

}  // namespace cxg

#endif  // CXG_CATEGORIAL_NETWORK_HPP_
