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

#include "html_report.hpp"

#include <fstream>

#include "cxg/error.hpp"

namespace cxg::tools {

namespace {

std::string escaped(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string structure_block(const TransientStructure& structure) {
  std::ostringstream out;
  out << "<pre>" << escaped(to_string(structure)) << "</pre>";
  return out.str();
}

}  // namespace

TraceReport::TraceReport(std::string input_label)
    : input_label_(std::move(input_label)) {}

void TraceReport::on_search_start(Direction dir,
                                  const TransientStructure& initial) {
  direction_ = to_string(dir);
  sections_ << "<h2>Initial transient structure</h2>\n"
            << structure_block(initial) << "\n";
}

void TraceReport::on_application(const SearchNode& parent,
                                 const std::string& cxn_name,
                                 const Bindings& bindings,
                                 const SearchNode& child) {
  ++application_count_;
  sections_ << "<h2>Application " << application_count_ << ": <code>"
            << escaped(cxn_name) << "</code> (depth " << parent.depth
            << " &rarr; " << child.depth << ")</h2>\n";
  sections_ << "<table><tr><th>variable</th><th>value</th></tr>\n";
  for (const auto& [var, value] : bindings.entries()) {
    sections_ << "<tr><td><code>" << escaped(var) << "</code></td><td><code>"
              << escaped(to_string(value)) << "</code></td></tr>\n";
  }
  sections_ << "</table>\n<h3>Resulting structure</h3>\n"
            << structure_block(child.structure) << "\n";
}

void TraceReport::on_goal_test(const SearchNode& node, bool passed) {
  sections_ << "<p class=\"" << (passed ? "pass" : "fail")
            << "\">goal test at depth " << node.depth << ": "
            << (passed ? "passed" : "failed") << "</p>\n";
}

void TraceReport::on_solution(const Solution& solution) {
  ++solution_count_;
  sections_ << "<h2>Solution " << solution_count_ << "</h2>\n<p>applied:";
  for (const std::string& name : solution.applied_names()) {
    sections_ << " <code>" << escaped(name) << "</code>";
  }
  sections_ << "<br>mean score " << solution.mean_score << ", depth "
            << solution.node.depth << "</p>\n";
}

void TraceReport::on_search_end(const SearchOutcome& outcome) {
  std::ostringstream out;
  out << "expanded " << outcome.expanded_nodes << " nodes, "
      << (outcome.best ? "found a best solution" : "found no solution")
      << ", " << outcome.competitors.size() << " competitor(s)";
  summary_ = out.str();
}

std::string TraceReport::to_html() const {
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>cxg trace</title>\n<style>\n"
      << "body { font-family: sans-serif; margin: 2em; color: #222; }\n"
      << "pre, code { background: #f4f4f4; }\n"
      << "pre { padding: 0.6em; overflow-x: auto; }\n"
      << "table { border-collapse: collapse; }\n"
      << "td, th { border: 1px solid #bbb; padding: 0.2em 0.6em; }\n"
      << ".pass { color: #00691c; }\n.fail { color: #8a0000; }\n"
      << "</style>\n</head>\n<body>\n";
  out << "<h1>" << escaped(direction_.empty() ? "trace" : direction_)
      << " trace</h1>\n";
  out << "<p>input: <code>" << escaped(input_label_) << "</code></p>\n";
  out << sections_.str();
  out << "<h2>Search summary</h2>\n<p>" << escaped(summary_) << "</p>\n";
  if (!final_output_.empty()) {
    out << "<h2>Final output</h2>\n<pre>" << escaped(final_output_)
        << "</pre>\n";
  }
  out << "</body>\n</html>\n";
  return out.str();
}

void TraceReport::write(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << to_html();
  if (!out) throw IoError("failed to write " + path);
}

}  // namespace cxg::tools
