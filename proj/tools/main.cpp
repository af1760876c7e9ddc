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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cxg/agent.hpp"
#include "cxg/amr.hpp"
#include "cxg/engine.hpp"
#include "cxg/error.hpp"
#include "cxg/naming_game.hpp"
#include "cxg/ofef.hpp"
#include "cxg/propbank.hpp"
#include "html_report.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

// Exit codes: 1 malformed input, 2 i/o, 3 no solution, 4 resource budget.
constexpr int kExitMalformed = 1;
constexpr int kExitIo = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitResource = 4;

int exit_code_for(const cxg::Error& error) {
  switch (error.category()) {
    case cxg::ErrorCategory::io:
      return kExitIo;
    case cxg::ErrorCategory::resource:
      return kExitResource;
    case cxg::ErrorCategory::malformed:
    case cxg::ErrorCategory::logic:
      return kExitMalformed;
  }
  return kExitMalformed;
}

// Accepts both OFEF JSON files and OFGI binary images, by magic.
cxg::Grammar load_any_grammar(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw cxg::FileNotFoundError(path);
  char magic[4] = {0, 0, 0, 0};
  probe.read(magic, 4);
  probe.close();
  if (magic[0] == 'O' && magic[1] == 'F' && magic[2] == 'G' &&
      magic[3] == 'I') {
    return cxg::load_grammar_image(path);
  }
  return cxg::load_grammar_from_file(path);
}

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

cxg::Term term_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
      return cxg::Term::str(s.substr(1, s.size() - 2));
    }
    return cxg::Term::from_symbol(s);
  }
  if (j.is_number_integer()) return cxg::Term::integer(j.get<std::int64_t>());
  throw cxg::Error(cxg::ErrorCategory::malformed,
                   "expected a term (string or integer)");
}

json term_to_json(const cxg::Term& t) {
  switch (t.kind()) {
    case cxg::Term::Kind::atom:
      return t.symbol();
    case cxg::Term::Kind::var:
      return t.name();
    case cxg::Term::Kind::str:
      return "\"" + t.text() + "\"";
    case cxg::Term::Kind::integer:
      return t.value();
    case cxg::Term::Kind::compound:
      break;
  }
  throw cxg::Error(cxg::ErrorCategory::malformed,
                   "compound terms have no network JSON form");
}

int run_comprehend(const std::string& grammar_path,
                   const std::string& utterance, const std::string& trace_path,
                   bool pretty) {
  cxg::Grammar grammar = load_any_grammar(grammar_path);
  cxg::Engine engine;
  cxg::tools::TraceReport report(utterance);
  if (!trace_path.empty()) engine.add_observer(&report);

  std::optional<cxg::PredicateNetwork> network;
  try {
    auto [result, competitors] = engine.comprehend(grammar, utterance);
    network = result;
  } catch (...) {
    if (!trace_path.empty()) report.write(trace_path);
    throw;
  }
  if (network) {
    report.set_final_output(cxg::predicate_network_to_penman(*network, pretty));
  }
  if (!trace_path.empty()) report.write(trace_path);
  if (!network) {
    std::cerr << "no solution: the grammar cannot comprehend the utterance\n";
    return kExitNoSolution;
  }
  std::cout << cxg::predicate_network_to_penman(*network, pretty) << "\n";
  return 0;
}

int run_formulate(const std::string& grammar_path, std::string penman,
                  const std::string& trace_path) {
  if (penman == "-") penman = read_stream(std::cin);
  cxg::Grammar grammar = load_any_grammar(grammar_path);
  cxg::PredicateNetwork meaning = cxg::penman_to_predicate_network(penman);
  cxg::Engine engine;
  cxg::tools::TraceReport report(cxg::predicate_network_to_penman(meaning));
  if (!trace_path.empty()) engine.add_observer(&report);

  std::optional<std::string> utterance;
  try {
    auto [result, competitors] = engine.formulate(grammar, meaning);
    utterance = result;
  } catch (...) {
    if (!trace_path.empty()) report.write(trace_path);
    throw;
  }
  if (utterance) report.set_final_output(*utterance);
  if (!trace_path.empty()) report.write(trace_path);
  if (!utterance) {
    std::cerr << "no solution: the grammar cannot formulate the meaning\n";
    return kExitNoSolution;
  }
  std::cout << *utterance << "\n";
  return 0;
}

int run_naming_game(cxg::ng::ExperimentConfig config, int interactions,
                    const std::string& out_path) {
  cxg::ng::Experiment experiment(config);
  experiment.run_series(interactions);
  if (!out_path.empty()) {
    if (out_path.size() >= 5 &&
        out_path.compare(out_path.size() - 5, 5, ".json") == 0) {
      cxg::ng::export_metrics_json(experiment.monitors(), out_path);
    } else {
      cxg::ng::export_metrics_csv(experiment.monitors(), out_path);
    }
  }
  const double final_success = cxg::ng::windowed_success(
      experiment.monitors(), config.success_window);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", final_success);
  std::cout << "final windowed success: " << buffer << "\n";
  return 0;
}

int run_learn_propbank(const std::string& conll_path,
                       const std::string& image_path,
                       const std::string& ofef_path) {
  auto sentences = cxg::pb::parse_conll(conll_path);
  cxg::Grammar grammar = cxg::pb::induce_grammar(sentences);
  if (!image_path.empty()) cxg::save_grammar_image(grammar, image_path);
  if (!ofef_path.empty()) cxg::save_grammar_to_file(grammar, ofef_path);
  std::cout << "learnt " << grammar.size() << " constructions from "
            << sentences.size() << " sentences:\n";
  for (const std::string& name : grammar.cxn_names()) {
    std::cout << "  " << name << "\n";
  }
  return 0;
}

std::vector<cxg::pb::Token> tokens_from_json(const json& doc) {
  if (!doc.is_array()) {
    throw cxg::Error(cxg::ErrorCategory::malformed,
                     "tokens file must be a JSON array");
  }
  std::vector<cxg::pb::Token> tokens;
  for (const json& entry : doc) {
    if (!entry.is_object() || !entry.contains("surface") ||
        !entry.contains("pos")) {
      throw cxg::Error(cxg::ErrorCategory::malformed,
                       "each token needs \"surface\" and \"pos\"");
    }
    cxg::pb::Token token;
    token.surface = entry["surface"].get<std::string>();
    token.pos = entry["pos"].get<std::string>();
    token.lemma = entry.contains("lemma") ? entry["lemma"].get<std::string>()
                                          : token.surface;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

int run_extract_frames(const std::string& image_path,
                       const std::string& input_path) {
  cxg::Grammar grammar = load_any_grammar(image_path);
  std::ifstream in(input_path);
  if (!in) throw cxg::FileNotFoundError(input_path);
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    throw cxg::Error(cxg::ErrorCategory::malformed,
                     "tokens file is not valid JSON");
  }
  auto tokens = tokens_from_json(doc);
  auto frames = cxg::pb::extract_frames(grammar, tokens);
  json out = json::array();
  for (const cxg::pb::Frame& frame : frames) {
    json record = json::object();
    record["roleset"] = frame.roleset;
    json roles = json::array();
    for (const auto& [role, text] : frame.roles) {
      roles.push_back(json::array({role, text}));
    }
    record["roles"] = std::move(roles);
    out.push_back(std::move(record));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_penman_filter(bool to_network, bool pretty) {
  const std::string input = read_stream(std::cin);
  if (to_network) {
    cxg::PredicateNetwork network = cxg::penman_to_predicate_network(input);
    json out = json::array();
    for (const cxg::Predicate& p : network.predicates()) {
      json record = json::array();
      record.push_back(p.name);
      for (const cxg::Term& a : p.args) record.push_back(term_to_json(a));
      out.push_back(std::move(record));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  json doc = json::parse(input, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw cxg::Error(cxg::ErrorCategory::malformed,
                     "expected a JSON array of predicates on stdin");
  }
  cxg::PredicateNetwork network;
  for (const json& record : doc) {
    if (!record.is_array() || record.empty() || !record[0].is_string()) {
      throw cxg::Error(cxg::ErrorCategory::malformed,
                       "each predicate must be [name, args...]");
    }
    std::vector<cxg::Term> args;
    for (std::size_t i = 1; i < record.size(); ++i) {
      args.push_back(term_from_json(record[i]));
    }
    network.add(cxg::Predicate(record[0].get<std::string>(), std::move(args)));
  }
  std::cout << cxg::predicate_network_to_penman(network, pretty) << "\n";
  return 0;
}

int run_grammar_info(const std::string& path) {
  cxg::Grammar grammar = load_any_grammar(path);
  std::string name = path;
  const std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  std::cout << "grammar: " << name << "\n";
  std::cout << "size: " << grammar.size() << "\n";
  std::cout << "cxns:\n";
  for (const cxg::Construction& cxn : grammar.cxns()) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", cxn.get_score());
    std::cout << "  " << cxn.name() << " (score " << buffer << ")\n";
  }
  std::cout << "categories: " << grammar.categorial_network().category_count()
            << ", links: " << grammar.categorial_network().link_count()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cxg: a construction grammar processing engine"};
  app.require_subcommand(1);

  // comprehend
  std::string grammar_path, utterance, trace_path, penman_arg;
  bool pretty = false;
  CLI::App* comprehend =
      app.add_subcommand("comprehend", "Map an utterance to its meaning");
  comprehend->add_option("--grammar", grammar_path, "OFEF or OFGI grammar")
      ->required();
  comprehend->add_option("--utterance", utterance, "Input utterance")
      ->required();
  comprehend->add_option("--trace", trace_path, "Write an HTML trace report");
  comprehend->add_flag("--pretty", pretty, "Multi-line Penman output");

  // formulate
  CLI::App* formulate =
      app.add_subcommand("formulate", "Map a meaning to an utterance");
  formulate->add_option("--grammar", grammar_path, "OFEF or OFGI grammar")
      ->required();
  formulate
      ->add_option("--penman", penman_arg,
                   "Penman meaning (\"-\" reads stdin)")
      ->required();
  formulate->add_option("--trace", trace_path, "Write an HTML trace report");

  // naming-game
  cxg::ng::ExperimentConfig ng_config;
  int interactions = 1500;
  std::string metrics_path, config_path;
  CLI::App* naming_game = app.add_subcommand(
      "naming-game", "Run the canonical naming game experiment");
  naming_game->add_option("--agents", ng_config.nr_of_agents,
                          "Population size");
  naming_game->add_option("--objects", ng_config.nr_of_objects,
                          "World size");
  naming_game->add_option("--interactions", interactions,
                          "Number of interactions");
  naming_game->add_option("--seed", ng_config.seed, "Random seed");
  naming_game->add_option("--window", ng_config.success_window,
                          "Success window");
  naming_game->add_option("--out", metrics_path,
                          "Metrics file (.csv or .json)");
  naming_game->add_option("--config", config_path,
                          "Experiment config JSON file");

  // learn-propbank
  std::string conll_path, image_path, ofef_out_path;
  CLI::App* learn = app.add_subcommand(
      "learn-propbank", "Induce a grammar from annotated sentences");
  learn->add_option("--conll", conll_path, "Training file")->required();
  learn->add_option("--save-image", image_path, "Write an OFGI image");
  learn->add_option("--save-ofef", ofef_out_path, "Write an OFEF document");

  // extract-frames
  std::string tokens_path;
  CLI::App* extract = app.add_subcommand(
      "extract-frames", "Extract semantic frames from tagged tokens");
  extract->add_option("--image", image_path, "Grammar image or OFEF file")
      ->required();
  extract->add_option("--input", tokens_path, "Tokens JSON file")->required();

  // penman
  bool to_network = false, to_penman = false;
  CLI::App* penman = app.add_subcommand(
      "penman", "Convert between Penman text and predicate JSON");
  penman->add_flag("--to-network", to_network,
                   "Penman on stdin, predicate JSON on stdout");
  penman->add_flag("--to-penman", to_penman,
                   "Predicate JSON on stdin, Penman on stdout");
  penman->add_flag("--pretty", pretty, "Multi-line Penman output");

  // grammar info
  std::string info_path;
  CLI::App* grammar_cmd = app.add_subcommand("grammar", "Grammar utilities");
  CLI::App* info = grammar_cmd->add_subcommand(
      "info", "Show name, size and construction list");
  info->add_option("file", info_path, "OFEF or OFGI grammar")->required();
  grammar_cmd->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (comprehend->parsed()) {
      return run_comprehend(grammar_path, utterance, trace_path, pretty);
    }
    if (formulate->parsed()) {
      return run_formulate(grammar_path, penman_arg, trace_path);
    }
    if (naming_game->parsed()) {
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw cxg::FileNotFoundError(config_path);
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded()) {
          throw cxg::Error(cxg::ErrorCategory::malformed,
                           "config file is not valid JSON");
        }
        cxg::ng::ExperimentConfig from_file = ng_config;
        if (doc.contains("nr_of_agents")) {
          from_file.nr_of_agents = doc["nr_of_agents"].get<int>();
        }
        if (doc.contains("nr_of_objects")) {
          from_file.nr_of_objects = doc["nr_of_objects"].get<int>();
        }
        if (doc.contains("seed")) {
          from_file.seed = doc["seed"].get<std::uint64_t>();
        }
        if (doc.contains("initial_score")) {
          from_file.initial_score = doc["initial_score"].get<double>();
        }
        if (doc.contains("reward_delta")) {
          from_file.reward_delta = doc["reward_delta"].get<double>();
        }
        if (doc.contains("inhibit_delta")) {
          from_file.inhibit_delta = doc["inhibit_delta"].get<double>();
        }
        if (doc.contains("success_window")) {
          from_file.success_window = doc["success_window"].get<int>();
        }
        if (doc.contains("interactions")) {
          interactions = doc["interactions"].get<int>();
        }
        // explicit command-line options win over the config file
        if (naming_game->count("--agents") == 0) {
          ng_config.nr_of_agents = from_file.nr_of_agents;
        }
        if (naming_game->count("--objects") == 0) {
          ng_config.nr_of_objects = from_file.nr_of_objects;
        }
        if (naming_game->count("--seed") == 0) {
          ng_config.seed = from_file.seed;
        }
        if (naming_game->count("--window") == 0) {
          ng_config.success_window = from_file.success_window;
        }
        ng_config.initial_score = from_file.initial_score;
        ng_config.reward_delta = from_file.reward_delta;
        ng_config.inhibit_delta = from_file.inhibit_delta;
      }
      return run_naming_game(ng_config, interactions, metrics_path);
    }
    if (learn->parsed()) {
      return run_learn_propbank(conll_path, image_path, ofef_out_path);
    }
    if (extract->parsed()) {
      return run_extract_frames(image_path, tokens_path);
    }
    if (penman->parsed()) {
      if (to_network == to_penman) {
        std::cerr << "penman needs exactly one of --to-network/--to-penman\n";
        return kExitMalformed;
      }
      return run_penman_filter(to_network, pretty);
    }
    if (grammar_cmd->parsed()) {
      return run_grammar_info(info_path);
    }
  } catch (const cxg::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitMalformed;
  }
  return 0;
}
