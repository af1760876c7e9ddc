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

#ifndef CXG_TOOLS_HTML_REPORT_HPP_
#define CXG_TOOLS_HTML_REPORT_HPP_

#include <sstream>
#include <string>

#include "cxg/engine.hpp"

namespace cxg::tools {

/// Collects the trace events of one processing episode and renders them as
/// a single self-contained HTML file (inline styles, no external
/// resources). Emitted even when the search finds no solution.
class TraceReport : public TraceObserver {
 public:
  explicit TraceReport(std::string input_label);

  void on_search_start(Direction dir,
                       const TransientStructure& initial) override;
  void on_application(const SearchNode& parent, const std::string& cxn_name,
                      const Bindings& bindings,
                      const SearchNode& child) override;
  void on_goal_test(const SearchNode& node, bool passed) override;
  void on_solution(const Solution& solution) override;
  void on_search_end(const SearchOutcome& outcome) override;

  void set_final_output(const std::string& output) { final_output_ = output; }

  std::string to_html() const;
  void write(const std::string& path) const;

 private:
  std::string input_label_;
  std::string direction_;
  std::ostringstream sections_;
  std::string summary_;
  std::string final_output_;
  int application_count_ = 0;
  int solution_count_ = 0;
};

}  // namespace cxg::tools

#endif  // CXG_TOOLS_HTML_REPORT_HPP_
