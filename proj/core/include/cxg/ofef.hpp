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

#ifndef CXG_OFEF_HPP_
#define CXG_OFEF_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cxg/grammar.hpp"

namespace cxg {

// The OFEF-inspired JSON exchange format, version "ofef-inspired-v1".
// Construction records mirror the constructor argument shapes:
// contributing units as [name, feature-map], conditional units as
// [name, formulation-lock, comprehension-lock]. Terms are encoded as
// strings ("?x" variable, "dog" atom, "\"dog\"" string literal), integers
// as numbers, compounds as arrays. Saving is canonical: sorted keys,
// two-space indentation, shortest-roundtrip floats with at least one
// decimal.
inline constexpr const char* kOfefFormatVersion = "ofef-inspired-v1";

/// A loaded OFEF file. `raw` keeps the original document so unknown fields
/// survive a load-then-save; the grammar view is built from the known ones.
struct OfefDocument {
  Grammar grammar;
  std::string format_version;
  std::string raw;
};

std::string grammar_to_ofef_json(const Grammar& grammar);
Grammar grammar_from_ofef_json(const std::string& text);

OfefDocument load_ofef_document(const std::string& path);
// Re-emits the document canonically, preserving unknown fields.
void save_ofef_document(const OfefDocument& document, const std::string& path);

Grammar load_grammar_from_file(const std::string& path);
void save_grammar_to_file(const Grammar& grammar, const std::string& path);

// The OFGI binary grammar image: magic "OFGI", little-endian 16-bit
// version, then a length-prefixed canonical encoding of the grammar
// (UTF-8 strings, little-endian integers, IEEE-754 doubles). Byte-identical
// for a given grammar.
inline constexpr std::uint16_t kImageVersion = 1;

std::vector<std::uint8_t> grammar_to_image_bytes(const Grammar& grammar);
Grammar grammar_from_image_bytes(const std::vector<std::uint8_t>& bytes);

void save_grammar_image(const Grammar& grammar, const std::string& path);
Grammar load_grammar_image(const std::string& path);

}  // namespace cxg

#endif  // CXG_OFEF_HPP_
