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

#ifndef CXG_PROPBANK_HPP_
#define CXG_PROPBANK_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cxg/grammar.hpp"

namespace cxg::pb {

// POS tagset: det, adj, noun, propn, verb, aux, prep, punct.

struct Token {
  std::string surface;
  std::string lemma;
  std::string pos;
};

struct RoleSpan {
  std::string role;  // v, arg0, arg1, ...
  int start = 0;     // token index, inclusive
  int end = 0;       // token index, exclusive
};

struct FrameAnnotation {
  std::string roleset;  // e.g. "send.01"
  std::vector<RoleSpan> spans;
};

struct AnnotatedSentence {
  std::vector<Token> tokens;
  std::vector<FrameAnnotation> frames;
};

struct Frame {
  std::string roleset;
  std::vector<std::pair<std::string, std::string>> roles;  // v first, argN asc

  bool operator==(const Frame& other) const = default;
};

enum class ChunkLabel { np, pp, v };

const char* to_string(ChunkLabel label);

struct PhraseChunk {
  ChunkLabel label;
  int start = 0;
  int end = 0;  // exclusive, end > start

  bool operator==(const PhraseChunk& other) const = default;
};

// The cxg CoNLL-like training format, version 1. Columns per token line:
// surface, lemma, pos, then one column per frame. Frame cells are O,
// B-<role>, I-<role>; the verb cell carries the roleset as B-v|<roleset>.
// Blank lines separate sentences, '#' lines are comments.
std::vector<AnnotatedSentence> parse_conll_text(const std::string& text);
std::vector<AnnotatedSentence> parse_conll(const std::string& path);

// Deterministic longest-match chunking, left to right:
//   NP = det? adj* (noun|propn)+, extended by at most one immediately
//        following "of"-PP absorbed into the NP;
//   PP = prep + NP;
//   V  = aux* verb.
// Tokens outside any chunk (e.g. punctuation) stay unchunked.
std::vector<PhraseChunk> chunk(std::span<const Token> tokens);

// One lexical construction per verb lemma ("<lemma>(v)-cxn"), one sense
// construction per roleset ("<roleset>-cxn"), and one argument-structure
// construction per distinct linearized role pattern
// ("arg0(np)+v(v)+arg1(np)+arg2(pp)-cxn"), grouped in that order with
// first-occurrence ordering and name deduplication.
Grammar induce_grammar(std::span<const AnnotatedSentence> sentences);

// Chunk the tokens, match lexical constructions on verb chunks, then sense
// and argument-structure constructions around each verb; one frame per
// matched sense, role texts taken from the matched chunk spans.
std::vector<Frame> extract_frames(const Grammar& grammar,
                                  std::span<const Token> tokens);

}  // namespace cxg::pb

#endif  // CXG_PROPBANK_HPP_
