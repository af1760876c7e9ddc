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

#include "cxg/propbank.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "cxg/error.hpp"

namespace cxg::pb {

const char* to_string(ChunkLabel label) {
  switch (label) {
    case ChunkLabel::np:
      return "np";
    case ChunkLabel::pp:
      return "pp";
    case ChunkLabel::v:
      return "v";
  }
  return "?";
}

namespace {

const std::vector<std::string> kTagset = {"det",  "adj", "noun", "propn",
                                          "verb", "aux", "prep", "punct"};

bool valid_tag(const std::string& pos) {
  return std::find(kTagset.begin(), kTagset.end(), pos) != kTagset.end();
}

std::vector<std::string> split_columns(const std::string& line) {
  std::vector<std::string> columns;
  std::istringstream in(line);
  std::string column;
  while (in >> column) columns.push_back(column);
  return columns;
}

struct OpenSpan {
  std::string role;
  int start = 0;
};

void close_span(std::optional<OpenSpan>& open, int end,
                FrameAnnotation& frame) {
  if (!open) return;
  frame.spans.push_back({open->role, open->start, end});
  open.reset();
}

AnnotatedSentence finish_sentence(
    std::vector<Token> tokens,
    std::vector<FrameAnnotation> frames,
    std::vector<std::optional<OpenSpan>>& open_spans, std::size_t line_no) {
  for (std::size_t f = 0; f < frames.size(); ++f) {
    close_span(open_spans[f], static_cast<int>(tokens.size()), frames[f]);
    int v_count = 0;
    for (const RoleSpan& span : frames[f].spans) {
      if (span.role == "v") ++v_count;
    }
    if (v_count != 1 || frames[f].roleset.empty()) {
      throw ParseError("conll: frame needs exactly one B-v|<roleset> span",
                       line_no);
    }
  }
  AnnotatedSentence sentence;
  sentence.tokens = std::move(tokens);
  sentence.frames = std::move(frames);
  return sentence;
}

}  // namespace

std::vector<AnnotatedSentence> parse_conll_text(const std::string& text) {
  std::vector<AnnotatedSentence> sentences;
  std::vector<Token> tokens;
  std::vector<FrameAnnotation> frames;
  std::vector<std::optional<OpenSpan>> open_spans;
  bool in_sentence = false;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) {
      if (in_sentence) {
        sentences.push_back(finish_sentence(std::move(tokens),
                                            std::move(frames), open_spans,
                                            line_no));
        tokens.clear();
        frames.clear();
        open_spans.clear();
        in_sentence = false;
      }
      continue;
    }
    std::vector<std::string> columns = split_columns(line);
    if (columns.size() < 3) {
      throw ParseError("conll: expected at least surface, lemma, pos columns",
                       line_no);
    }
    if (!in_sentence) {
      in_sentence = true;
      frames.resize(columns.size() - 3);
      open_spans.assign(frames.size(), std::nullopt);
    } else if (columns.size() - 3 != frames.size()) {
      throw ParseError("conll: inconsistent column count within sentence",
                       line_no);
    }
    const int index = static_cast<int>(tokens.size());
    tokens.push_back({columns[0], columns[1], columns[2]});
    for (std::size_t f = 0; f < frames.size(); ++f) {
      const std::string& cell = columns[3 + f];
      if (cell == "O") {
        close_span(open_spans[f], index, frames[f]);
      } else if (cell.rfind("B-", 0) == 0) {
        close_span(open_spans[f], index, frames[f]);
        std::string role = cell.substr(2);
        const std::size_t bar = role.find('|');
        if (bar != std::string::npos) {
          const std::string roleset = role.substr(bar + 1);
          role = role.substr(0, bar);
          if (role != "v" || roleset.empty()) {
            throw ParseError("conll: roleset belongs on the B-v cell",
                             line_no);
          }
          frames[f].roleset = roleset;
        }
        open_spans[f] = OpenSpan{role, index};
      } else if (cell.rfind("I-", 0) == 0) {
        const std::string role = cell.substr(2);
        if (!open_spans[f] || open_spans[f]->role != role) {
          throw ParseError("conll: I-" + role + " without a matching B-" +
                               role,
                           line_no);
        }
      } else {
        throw ParseError("conll: bad frame cell \"" + cell + "\"", line_no);
      }
    }
  }
  if (in_sentence) {
    sentences.push_back(finish_sentence(std::move(tokens), std::move(frames),
                                        open_spans, line_no));
  }
  return sentences;
}

std::vector<AnnotatedSentence> parse_conll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_conll_text(buffer.str());
}

namespace {

// det? adj* (noun|propn)+ starting at i; nothing when there is no head.
std::optional<int> match_core_np(std::span<const Token> tokens, int i) {
  const int n = static_cast<int>(tokens.size());
  int j = i;
  if (j < n && tokens[j].pos == "det") ++j;
  while (j < n && tokens[j].pos == "adj") ++j;
  int k = j;
  while (k < n && (tokens[k].pos == "noun" || tokens[k].pos == "propn")) ++k;
  if (k == j) return std::nullopt;
  return k;
}

std::optional<int> match_np(std::span<const Token> tokens, int i) {
  auto core = match_core_np(tokens, i);
  if (!core) return std::nullopt;
  int end = *core;
  const int n = static_cast<int>(tokens.size());
  if (end < n && tokens[end].pos == "prep") {
    std::string lowered = tokens[end].surface;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lowered == "of") {
      auto inner = match_core_np(tokens, end + 1);
      if (inner) end = *inner;  // absorb one of-PP
    }
  }
  return end;
}

}  // namespace

std::vector<PhraseChunk> chunk(std::span<const Token> tokens) {
  for (const Token& t : tokens) {
    if (!valid_tag(t.pos)) throw UntaggedTokenError(t.surface, t.pos);
  }
  std::vector<PhraseChunk> chunks;
  const int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n) {
    const std::string& pos = tokens[i].pos;
    if (pos == "det" || pos == "adj" || pos == "noun" || pos == "propn") {
      auto end = match_np(tokens, i);
      if (end) {
        chunks.push_back({ChunkLabel::np, i, *end});
        i = *end;
        continue;
      }
      ++i;
      continue;
    }
    if (pos == "prep") {
      auto end = match_np(tokens, i + 1);
      if (end) {
        chunks.push_back({ChunkLabel::pp, i, *end});
        i = *end;
        continue;
      }
      ++i;
      continue;
    }
    if (pos == "aux" || pos == "verb") {
      int j = i;
      while (j < n && tokens[j].pos == "aux") ++j;
      if (j < n && tokens[j].pos == "verb") {
        chunks.push_back({ChunkLabel::v, i, j + 1});
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }
    ++i;  // punct and anything else stays unchunked
  }
  return chunks;
}

namespace {

std::string join_surfaces(std::span<const Token> tokens, int start, int end) {
  std::string out;
  for (int i = start; i < end; ++i) {
    if (i > start) out += " ";
    out += tokens[i].surface;
  }
  return out;
}

std::string span_label(const std::vector<PhraseChunk>& chunks,
                       std::span<const Token> tokens, const RoleSpan& span) {
  if (span.role == "v") return "v";
  for (const PhraseChunk& c : chunks) {
    if (c.start == span.start && c.end == span.end) return to_string(c.label);
  }
  return tokens[span.start].pos == "prep" ? "pp" : "np";
}

int arg_index(const std::string& role) {
  if (role.size() < 4 || role.compare(0, 3, "arg") != 0) return 1 << 20;
  int index = 0;
  for (std::size_t i = 3; i < role.size(); ++i) {
    if (role[i] < '0' || role[i] > '9') return 1 << 20;
    index = index * 10 + (role[i] - '0');
  }
  return index;
}

struct PatternElement {
  std::string role;
  std::string label;
};

std::string pattern_name(const std::vector<PatternElement>& elements) {
  std::string name;
  for (const PatternElement& e : elements) {
    if (!name.empty()) name += "+";
    name += e.role + "(" + e.label + ")";
  }
  return name + "-cxn";
}

Construction make_lexical_cxn(const std::string& lemma,
                              const std::vector<std::string>& forms,
                              double score) {
  Unit contributing;
  contributing.name = Term::var("?verb-unit");
  contributing.features.set("lemma", FeatureValue::single(Term::atom(lemma)));
  contributing.features.set("category", FeatureValue::single(Term::atom("v")));
  contributing.features.set("referent",
                            FeatureValue::single(Term::var("?ev")));
  contributing.features.set(
      "boundaries",
      FeatureValue::pair(Term::var("?left"), Term::var("?right")));

  ConditionalUnit conditional;
  conditional.name = Term::var("?verb-unit");
  conditional.formulation_lock.set(
      kHashMeaning,
      FeatureValue::predicates({Predicate(lemma, {Term::var("?ev")})}));
  conditional.comprehension_lock.set(
      kHashForm, FeatureValue::predicates({Predicate(
                     kSequencePredicate,
                     {Term::str(forms.front()), Term::var("?left"),
                      Term::var("?right")})}));

  Construction cxn(lemma + "(v)-cxn", {std::move(contributing)},
                   {std::move(conditional)}, score);
  cxn.set_attribute("kind", Term::atom("lexical"));
  cxn.set_attribute("lemma", Term::atom(lemma));
  std::vector<Term> form_terms;
  for (const std::string& f : forms) form_terms.push_back(Term::str(f));
  cxn.set_attribute("forms", Term::compound(std::move(form_terms)));
  return cxn;
}

Construction make_sense_cxn(const std::string& roleset,
                            const std::string& lemma, double score) {
  Unit contributing;
  contributing.name = Term::var("?verb-unit");
  contributing.features.set("roleset",
                            FeatureValue::single(Term::atom(roleset)));

  ConditionalUnit conditional;
  conditional.name = Term::var("?verb-unit");
  conditional.formulation_lock.set(
      kHashMeaning,
      FeatureValue::predicates({Predicate(roleset, {Term::var("?ev")})}));
  conditional.comprehension_lock.set(
      "lemma", FeatureValue::single(Term::atom(lemma)));

  Construction cxn(roleset + "-cxn", {std::move(contributing)},
                   {std::move(conditional)}, score);
  cxn.set_attribute("kind", Term::atom("sense"));
  cxn.set_attribute("lemma", Term::atom(lemma));
  cxn.set_attribute("roleset", Term::atom(roleset));
  return cxn;
}

Construction make_pattern_cxn(const std::vector<PatternElement>& elements,
                              double score) {
  std::vector<ConditionalUnit> conditional;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const PatternElement& e = elements[i];
    ConditionalUnit cu;
    cu.name = Term::var("?" + e.role + "-unit");
    const FeatureValue category = FeatureValue::single(Term::atom(e.label));
    const FeatureValue boundaries =
        FeatureValue::pair(Term::var("?b" + std::to_string(i)),
                           Term::var("?b" + std::to_string(i + 1)));
    cu.formulation_lock.set("category", category);
    cu.formulation_lock.set("boundaries", boundaries);
    cu.comprehension_lock.set("category", category);
    cu.comprehension_lock.set("boundaries", boundaries);
    conditional.push_back(std::move(cu));
  }
  Unit contributing;
  contributing.name = Term::var("?clause-unit");
  contributing.features.set("category",
                            FeatureValue::single(Term::atom("clause")));

  Construction cxn(pattern_name(elements), {std::move(contributing)},
                   std::move(conditional), score);
  cxn.set_attribute("kind", Term::atom("pattern"));
  std::vector<Term> element_terms;
  for (const PatternElement& e : elements) {
    element_terms.push_back(Term::compound(
        {Term::atom(e.role), Term::atom(e.label)}));
  }
  cxn.set_attribute("elements", Term::compound(std::move(element_terms)));
  return cxn;
}

}  // namespace

Grammar induce_grammar(std::span<const AnnotatedSentence> sentences) {
  if (sentences.empty()) {
    throw Error(ErrorCategory::logic,
                "cannot induce a grammar from zero sentences");
  }
  // First-occurrence ordering throughout.
  std::vector<std::pair<std::string, std::vector<std::string>>> lexical;
  std::vector<std::pair<std::string, std::string>> senses;  // roleset, lemma
  std::vector<std::vector<PatternElement>> patterns;

  for (const AnnotatedSentence& sentence : sentences) {
    const std::vector<PhraseChunk> chunks = chunk(sentence.tokens);
    for (const FrameAnnotation& frame : sentence.frames) {
      const RoleSpan* v_span = nullptr;
      for (const RoleSpan& span : frame.spans) {
        if (span.role == "v") v_span = &span;
      }
      const Token& verb = sentence.tokens[v_span->end - 1];

      auto lex = std::find_if(lexical.begin(), lexical.end(),
                              [&](const auto& e) {
                                return e.first == verb.lemma;
                              });
      if (lex == lexical.end()) {
        lexical.push_back({verb.lemma, {verb.surface}});
      } else if (std::find(lex->second.begin(), lex->second.end(),
                           verb.surface) == lex->second.end()) {
        lex->second.push_back(verb.surface);
      }

      if (std::find_if(senses.begin(), senses.end(), [&](const auto& e) {
            return e.first == frame.roleset;
          }) == senses.end()) {
        senses.push_back({frame.roleset, verb.lemma});
      }

      std::vector<RoleSpan> ordered = frame.spans;
      std::sort(ordered.begin(), ordered.end(),
                [](const RoleSpan& a, const RoleSpan& b) {
                  return a.start < b.start;
                });
      std::vector<PatternElement> elements;
      for (const RoleSpan& span : ordered) {
        elements.push_back(
            {span.role, span_label(chunks, sentence.tokens, span)});
      }
      if (std::find_if(patterns.begin(), patterns.end(),
                       [&](const std::vector<PatternElement>& p) {
                         return pattern_name(p) == pattern_name(elements);
                       }) == patterns.end()) {
        patterns.push_back(std::move(elements));
      }
    }
  }

  Grammar grammar;
  const double score = grammar.config().initial_score;
  for (const auto& [lemma, forms] : lexical) {
    grammar.add_cxn(make_lexical_cxn(lemma, forms, score));
  }
  for (const auto& [roleset, lemma] : senses) {
    grammar.add_cxn(make_sense_cxn(roleset, lemma, score));
  }
  for (const auto& elements : patterns) {
    grammar.add_cxn(make_pattern_cxn(elements, score));
  }
  return grammar;
}

namespace {

struct PatternView {
  std::vector<PatternElement> elements;
  std::size_t grammar_order = 0;
};

std::vector<PatternElement> elements_from_attribute(const Term& term) {
  std::vector<PatternElement> elements;
  if (!term.is_compound()) return elements;
  for (const Term& e : term.elements()) {
    if (!e.is_compound() || e.elements().size() != 2) return {};
    const Term& role = e.elements()[0];
    const Term& label = e.elements()[1];
    if (!role.is_atom() || !label.is_atom()) return {};
    elements.push_back({role.symbol(), label.symbol()});
  }
  return elements;
}

}  // namespace

std::vector<Frame> extract_frames(const Grammar& grammar,
                                  std::span<const Token> tokens) {
  const std::vector<PhraseChunk> chunks = chunk(tokens);

  std::map<std::string, std::string> surface_to_lemma;
  std::vector<std::pair<std::string, std::string>> lemma_senses;
  std::vector<PatternView> patterns;
  std::size_t order = 0;
  for (const Construction& cxn : grammar.cxns()) {
    const Term* kind = cxn.attribute("kind");
    if (kind == nullptr || !kind->is_atom()) {
      ++order;
      continue;
    }
    if (kind->symbol() == "lexical") {
      const Term* lemma = cxn.attribute("lemma");
      const Term* forms = cxn.attribute("forms");
      if (lemma != nullptr && lemma->is_atom() && forms != nullptr &&
          forms->is_compound()) {
        for (const Term& f : forms->elements()) {
          if (f.is_str()) surface_to_lemma.emplace(f.text(), lemma->symbol());
        }
      }
    } else if (kind->symbol() == "sense") {
      const Term* lemma = cxn.attribute("lemma");
      const Term* roleset = cxn.attribute("roleset");
      if (lemma != nullptr && lemma->is_atom() && roleset != nullptr &&
          roleset->is_atom()) {
        lemma_senses.emplace_back(lemma->symbol(), roleset->symbol());
      }
    } else if (kind->symbol() == "pattern") {
      const Term* elements = cxn.attribute("elements");
      if (elements != nullptr) {
        PatternView view;
        view.elements = elements_from_attribute(*elements);
        view.grammar_order = order;
        if (!view.elements.empty()) patterns.push_back(std::move(view));
      }
    }
    ++order;
  }

  std::vector<Frame> frames;
  for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
    if (chunks[ci].label != ChunkLabel::v) continue;
    const Token& verb = tokens[chunks[ci].end - 1];
    auto lemma_it = surface_to_lemma.find(verb.surface);
    if (lemma_it == surface_to_lemma.end()) continue;
    const std::string& lemma = lemma_it->second;

    // The longest matching pattern wins; grammar order breaks ties.
    const PatternView* best = nullptr;
    std::vector<std::pair<std::string, const PhraseChunk*>> best_roles;
    for (const PatternView& pattern : patterns) {
      std::size_t v_pos = pattern.elements.size();
      for (std::size_t i = 0; i < pattern.elements.size(); ++i) {
        if (pattern.elements[i].role == "v") v_pos = i;
      }
      if (v_pos == pattern.elements.size()) continue;
      if (v_pos > ci) continue;
      const std::size_t post = pattern.elements.size() - v_pos - 1;
      if (ci + post >= chunks.size()) continue;
      bool matches = pattern.elements[v_pos].label == "v";
      std::vector<std::pair<std::string, const PhraseChunk*>> roles;
      for (std::size_t i = 0; i < pattern.elements.size() && matches; ++i) {
        const std::size_t chunk_index = ci - v_pos + i;
        const PhraseChunk& candidate = chunks[chunk_index];
        if (to_string(candidate.label) != pattern.elements[i].label) {
          matches = false;
          break;
        }
        roles.emplace_back(pattern.elements[i].role, &candidate);
      }
      if (!matches) continue;
      if (best == nullptr ||
          pattern.elements.size() > best->elements.size() ||
          (pattern.elements.size() == best->elements.size() &&
           pattern.grammar_order < best->grammar_order)) {
        best = &pattern;
        best_roles = std::move(roles);
      }
    }
    if (best == nullptr) continue;

    for (const auto& [sense_lemma, roleset] : lemma_senses) {
      if (sense_lemma != lemma) continue;
      Frame frame;
      frame.roleset = roleset;
      frame.roles.emplace_back(
          "v", join_surfaces(tokens, chunks[ci].start, chunks[ci].end));
      std::vector<std::pair<std::string, const PhraseChunk*>> args;
      for (const auto& [role, chunk_ptr] : best_roles) {
        if (role != "v") args.emplace_back(role, chunk_ptr);
      }
      std::stable_sort(args.begin(), args.end(),
                       [](const auto& a, const auto& b) {
                         return arg_index(a.first) < arg_index(b.first);
                       });
      for (const auto& [role, chunk_ptr] : args) {
        frame.roles.emplace_back(
            role, join_surfaces(tokens, chunk_ptr->start, chunk_ptr->end));
      }
      frames.push_back(std::move(frame));
    }
  }
  return frames;
}

}  // namespace cxg::pb
