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

#include "cxg/ofef.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include "cxg/error.hpp"
#include "json.hpp"

namespace cxg {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed to read " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("failed to write " + path);
}

// ---- JSON encoding -------------------------------------------------------

json term_to_json(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::atom:
      return term.symbol();
    case Term::Kind::var:
      return term.name();
    case Term::Kind::str:
      return "\"" + term.text() + "\"";
    case Term::Kind::integer:
      return term.value();
    case Term::Kind::compound: {
      json out = json::array();
      for (const Term& e : term.elements()) out.push_back(term_to_json(e));
      return out;
    }
  }
  return nullptr;
}

Term term_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
      return Term::str(s.substr(1, s.size() - 2));
    }
    if (!s.empty() && s.front() == '?') return Term::var(s);
    if (s.empty()) {
      throw MalformedDocumentError("empty symbol", path);
    }
    return Term::atom(s);
  }
  if (j.is_number_integer()) return Term::integer(j.get<std::int64_t>());
  if (j.is_array()) {
    std::vector<Term> elements;
    for (std::size_t i = 0; i < j.size(); ++i) {
      elements.push_back(
          term_from_json(j[i], path + "/" + std::to_string(i)));
    }
    return Term::compound(std::move(elements));
  }
  throw MalformedDocumentError("expected a term", path);
}

json predicate_to_json(const Predicate& p) {
  json out = json::array();
  out.push_back(p.name);
  for (const Term& a : p.args) out.push_back(term_to_json(a));
  return out;
}

Predicate predicate_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) {
    throw MalformedDocumentError("expected a predicate [name, args...]",
                                 path);
  }
  std::vector<Term> args;
  for (std::size_t i = 1; i < j.size(); ++i) {
    args.push_back(term_from_json(j[i], path + "/" + std::to_string(i)));
  }
  return Predicate(j[0].get<std::string>(), std::move(args));
}

json value_to_json(const FeatureValue& value) {
  switch (value.kind()) {
    case FeatureValue::Kind::single:
      return term_to_json(value.term());
    case FeatureValue::Kind::pair: {
      json out = json::array();
      out.push_back(term_to_json(value.as_pair().first));
      out.push_back(term_to_json(value.as_pair().second));
      return out;
    }
    case FeatureValue::Kind::predicates: {
      json out = json::array();
      for (const Predicate& p : value.preds()) {
        out.push_back(predicate_to_json(p));
      }
      return out;
    }
  }
  return nullptr;
}

// Arrays of arrays are predicate sets, two scalars are a pair; anything
// scalar is a single term.
FeatureValue value_from_json(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.empty()) return FeatureValue::predicates({});
    bool all_arrays = true;
    for (const json& e : j) {
      if (!e.is_array()) all_arrays = false;
    }
    if (all_arrays) {
      std::vector<Predicate> preds;
      for (std::size_t i = 0; i < j.size(); ++i) {
        preds.push_back(
            predicate_from_json(j[i], path + "/" + std::to_string(i)));
      }
      return FeatureValue::predicates(std::move(preds));
    }
    if (j.size() == 2 && !j[0].is_array() && !j[1].is_array()) {
      return FeatureValue::pair(term_from_json(j[0], path + "/0"),
                                term_from_json(j[1], path + "/1"));
    }
    throw MalformedDocumentError(
        "feature value must be a term, a pair, or a predicate set", path);
  }
  return FeatureValue::single(term_from_json(j, path));
}

json feature_map_to_json(const FeatureMap& features) {
  json out = json::object();
  for (const auto& [name, value] : features) {
    out[name] = value_to_json(value);
  }
  return out;
}

FeatureMap feature_map_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) {
    throw MalformedDocumentError("expected a feature map", path);
  }
  FeatureMap features;
  for (const auto& [name, value] : j.items()) {
    features.set(name, value_from_json(value, path + "/" + name));
  }
  return features;
}

json construction_to_json(const Construction& cxn) {
  json record = json::object();
  record["name"] = cxn.name();
  record["score"] = cxn.get_score();
  json contributing = json::array();
  for (const Unit& u : cxn.contributing_pole()) {
    json entry = json::array();
    entry.push_back(term_to_json(u.name));
    entry.push_back(feature_map_to_json(u.features));
    contributing.push_back(std::move(entry));
  }
  record["contributing_pole"] = std::move(contributing);
  json conditional = json::array();
  for (const ConditionalUnit& cu : cxn.conditional_pole()) {
    json entry = json::array();
    entry.push_back(term_to_json(cu.name));
    entry.push_back(feature_map_to_json(cu.formulation_lock));
    entry.push_back(feature_map_to_json(cu.comprehension_lock));
    conditional.push_back(std::move(entry));
  }
  record["conditional_pole"] = std::move(conditional);
  if (!cxn.attributes().empty()) {
    json attrs = json::object();
    for (const auto& [key, value] : cxn.attributes()) {
      attrs[key] = term_to_json(value);
    }
    record["attributes"] = std::move(attrs);
  }
  return record;
}

Construction construction_from_json(const json& record,
                                    const std::string& path) {
  if (!record.is_object() || !record.contains("name") ||
      !record["name"].is_string()) {
    throw MalformedDocumentError("construction record needs a name", path);
  }
  const std::string name = record["name"].get<std::string>();
  double score = 0.5;
  if (record.contains("score")) {
    if (!record["score"].is_number()) {
      throw MalformedDocumentError("score must be a number", path + "/score");
    }
    score = record["score"].get<double>();
  }
  std::vector<Unit> contributing;
  if (record.contains("contributing_pole")) {
    const json& pole = record["contributing_pole"];
    if (!pole.is_array()) {
      throw MalformedDocumentError("contributing_pole must be an array",
                                   path + "/contributing_pole");
    }
    for (std::size_t i = 0; i < pole.size(); ++i) {
      const std::string upath =
          path + "/contributing_pole/" + std::to_string(i);
      const json& entry = pole[i];
      if (!entry.is_array() || entry.size() != 2) {
        throw MalformedDocumentError("expected [name, feature-map]", upath);
      }
      Unit unit;
      unit.name = term_from_json(entry[0], upath + "/0");
      unit.features = feature_map_from_json(entry[1], upath + "/1");
      contributing.push_back(std::move(unit));
    }
  }
  std::vector<ConditionalUnit> conditional;
  if (!record.contains("conditional_pole") ||
      !record["conditional_pole"].is_array()) {
    throw MalformedDocumentError("construction record needs a conditional_pole",
                                 path);
  }
  const json& pole = record["conditional_pole"];
  for (std::size_t i = 0; i < pole.size(); ++i) {
    const std::string upath = path + "/conditional_pole/" + std::to_string(i);
    const json& entry = pole[i];
    if (!entry.is_array() || entry.size() != 3) {
      throw MalformedDocumentError(
          "expected [name, formulation-lock, comprehension-lock]", upath);
    }
    ConditionalUnit cu;
    cu.name = term_from_json(entry[0], upath + "/0");
    cu.formulation_lock = feature_map_from_json(entry[1], upath + "/1");
    cu.comprehension_lock = feature_map_from_json(entry[2], upath + "/2");
    conditional.push_back(std::move(cu));
  }
  try {
    Construction cxn(name, std::move(contributing), std::move(conditional),
                     score);
    if (record.contains("attributes")) {
      const json& attrs = record["attributes"];
      if (!attrs.is_object()) {
        throw MalformedDocumentError("attributes must be an object",
                                     path + "/attributes");
      }
      for (const auto& [key, value] : attrs.items()) {
        cxn.set_attribute(key,
                          term_from_json(value, path + "/attributes/" + key));
      }
    }
    return cxn;
  } catch (const MalformedDocumentError&) {
    throw;
  } catch (const Error& e) {
    throw MalformedDocumentError(e.what(), path);
  }
}

json config_to_json(const GrammarConfig& config) {
  json out = json::object();
  out["max_depth"] = config.max_depth;
  out["max_solutions"] = config.max_solutions;
  out["max_nodes"] = config.max_nodes;
  out["initial_score"] = config.initial_score;
  out["reward_delta"] = config.reward_delta;
  out["inhibit_delta"] = config.inhibit_delta;
  return out;
}

GrammarConfig config_from_json(const json& j, const std::string& path) {
  GrammarConfig config;
  if (j.is_null()) return config;
  if (!j.is_object()) {
    throw MalformedDocumentError("config must be an object", path);
  }
  auto get_int = [&](const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) {
      throw MalformedDocumentError("expected an integer",
                                   path + "/" + key);
    }
    return j[key].get<int>();
  };
  auto get_double = [&](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) {
      throw MalformedDocumentError("expected a number", path + "/" + key);
    }
    return j[key].get<double>();
  };
  config.max_depth = get_int("max_depth", config.max_depth);
  config.max_solutions = get_int("max_solutions", config.max_solutions);
  config.max_nodes = get_int("max_nodes", config.max_nodes);
  config.initial_score = get_double("initial_score", config.initial_score);
  config.reward_delta = get_double("reward_delta", config.reward_delta);
  config.inhibit_delta = get_double("inhibit_delta", config.inhibit_delta);
  if (config.max_depth < 1 || config.max_solutions < 1 ||
      config.max_nodes < 1) {
    throw MalformedDocumentError("search limits must be positive", path);
  }
  return config;
}

json grammar_to_json(const Grammar& grammar) {
  json doc = json::object();
  doc["format_version"] = kOfefFormatVersion;
  json constructions = json::array();
  for (const Construction& cxn : grammar.cxns()) {
    constructions.push_back(construction_to_json(cxn));
  }
  doc["constructions"] = std::move(constructions);
  doc["categories"] = grammar.categorial_network().categories();
  json links = json::array();
  for (const auto& [a, b] : grammar.categorial_network().links()) {
    links.push_back(json::array({a, b}));
  }
  doc["links"] = std::move(links);
  doc["config"] = config_to_json(grammar.config());
  return doc;
}

std::pair<Grammar, std::string> grammar_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw MalformedDocumentError("OFEF document must be a JSON object", "/");
  }
  if (!doc.contains("format_version") || !doc["format_version"].is_string()) {
    throw MalformedDocumentError("missing format_version",
                                 "/format_version");
  }
  const std::string version = doc["format_version"].get<std::string>();
  if (version != kOfefFormatVersion) {
    throw VersionUnsupportedError("unsupported OFEF format version: " +
                                  version);
  }
  Grammar grammar;
  if (doc.contains("config")) {
    grammar.config() = config_from_json(doc["config"], "/config");
  }
  if (doc.contains("categories")) {
    const json& cats = doc["categories"];
    if (!cats.is_array()) {
      throw MalformedDocumentError("categories must be an array",
                                   "/categories");
    }
    for (std::size_t i = 0; i < cats.size(); ++i) {
      if (!cats[i].is_string()) {
        throw MalformedDocumentError("category must be a string",
                                     "/categories/" + std::to_string(i));
      }
      grammar.categorial_network().add_category(cats[i].get<std::string>());
    }
  }
  if (doc.contains("links")) {
    const json& links = doc["links"];
    if (!links.is_array()) {
      throw MalformedDocumentError("links must be an array", "/links");
    }
    for (std::size_t i = 0; i < links.size(); ++i) {
      const json& link = links[i];
      const std::string path = "/links/" + std::to_string(i);
      if (!link.is_array() || link.size() != 2 || !link[0].is_string() ||
          !link[1].is_string()) {
        throw MalformedDocumentError("link must be a pair of categories",
                                     path);
      }
      try {
        grammar.categorial_network().add_link(link[0].get<std::string>(),
                                              link[1].get<std::string>());
      } catch (const Error& e) {
        throw MalformedDocumentError(e.what(), path);
      }
    }
  }
  if (doc.contains("constructions")) {
    const json& cxns = doc["constructions"];
    if (!cxns.is_array()) {
      throw MalformedDocumentError("constructions must be an array",
                                   "/constructions");
    }
    for (std::size_t i = 0; i < cxns.size(); ++i) {
      const std::string path = "/constructions/" + std::to_string(i);
      Construction cxn = construction_from_json(cxns[i], path);
      try {
        grammar.add_cxn(std::move(cxn));
      } catch (const Error& e) {
        throw MalformedDocumentError(e.what(), path);
      }
    }
  }
  return {std::move(grammar), version};
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw MalformedDocumentError("invalid JSON", "/");
  }
  return doc;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

// ---- binary image --------------------------------------------------------

constexpr char kImageMagic[4] = {'O', 'F', 'G', 'I'};

class ImageWriter {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u16(std::uint16_t v) {
    u8(static_cast<std::uint8_t>(v & 0xff));
    u8(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      u8(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
    }
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      u8(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
    }
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    u64(bits);
  }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes_.insert(bytes_.end(), s.begin(), s.end());
  }
  void term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::atom:
        u8(0);
        str(t.symbol());
        break;
      case Term::Kind::str:
        u8(1);
        str(t.text());
        break;
      case Term::Kind::integer:
        u8(2);
        i64(t.value());
        break;
      case Term::Kind::var:
        u8(3);
        str(t.name());
        break;
      case Term::Kind::compound:
        u8(4);
        u32(static_cast<std::uint32_t>(t.elements().size()));
        for (const Term& e : t.elements()) term(e);
        break;
    }
  }
  void predicate(const Predicate& p) {
    str(p.name);
    u32(static_cast<std::uint32_t>(p.args.size()));
    for (const Term& a : p.args) term(a);
  }
  void value(const FeatureValue& v) {
    switch (v.kind()) {
      case FeatureValue::Kind::single:
        u8(0);
        term(v.term());
        break;
      case FeatureValue::Kind::pair:
        u8(1);
        term(v.as_pair().first);
        term(v.as_pair().second);
        break;
      case FeatureValue::Kind::predicates:
        u8(2);
        u32(static_cast<std::uint32_t>(v.preds().size()));
        for (const Predicate& p : v.preds()) predicate(p);
        break;
    }
  }
  void feature_map(const FeatureMap& features) {
    u32(static_cast<std::uint32_t>(features.size()));
    for (const auto& [name, v] : features) {
      str(name);
      value(v);
    }
  }

  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ImageReader {
 public:
  explicit ImageReader(const std::vector<std::uint8_t>& bytes)
      : bytes_(bytes) {}

  std::uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint16_t u16() {
    std::uint16_t v = u8();
    v |= static_cast<std::uint16_t>(u8()) << 8;
    return v;
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  double f64() {
    const std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
  }
  std::string str() {
    const std::uint32_t n = u32();
    need(n);
    std::string s(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return s;
  }
  Term term() {
    switch (u8()) {
      case 0:
        return Term::atom(str());
      case 1:
        return Term::str(str());
      case 2:
        return Term::integer(i64());
      case 3:
        return Term::var(str());
      case 4: {
        const std::uint32_t n = u32();
        std::vector<Term> elements;
        elements.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) elements.push_back(term());
        return Term::compound(std::move(elements));
      }
      default:
        throw MalformedDocumentError("unknown term tag", "<image>");
    }
  }
  Predicate predicate() {
    const std::string name = str();
    const std::uint32_t n = u32();
    std::vector<Term> args;
    args.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) args.push_back(term());
    return Predicate(name, std::move(args));
  }
  FeatureValue value() {
    switch (u8()) {
      case 0:
        return FeatureValue::single(term());
      case 1: {
        Term left = term();
        Term right = term();
        return FeatureValue::pair(std::move(left), std::move(right));
      }
      case 2: {
        const std::uint32_t n = u32();
        std::vector<Predicate> preds;
        preds.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) preds.push_back(predicate());
        return FeatureValue::predicates(std::move(preds));
      }
      default:
        throw MalformedDocumentError("unknown feature-value tag", "<image>");
    }
  }
  FeatureMap feature_map() {
    const std::uint32_t n = u32();
    FeatureMap features;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::string name = str();
      features.set(name, value());
    }
    return features;
  }
  bool at_end() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) {
    if (pos_ + n > bytes_.size()) {
      throw MalformedDocumentError("image truncated", "<image>");
    }
  }
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string grammar_to_ofef_json(const Grammar& grammar) {
  return canonical_dump(grammar_to_json(grammar));
}

Grammar grammar_from_ofef_json(const std::string& text) {
  return grammar_from_json(parse_json(text)).first;
}

OfefDocument load_ofef_document(const std::string& path) {
  const std::string text = read_file(path);
  json doc = parse_json(text);
  auto [grammar, version] = grammar_from_json(doc);
  OfefDocument result;
  result.grammar = std::move(grammar);
  result.format_version = version;
  result.raw = canonical_dump(doc);
  return result;
}

void save_ofef_document(const OfefDocument& document,
                        const std::string& path) {
  write_file(path, document.raw);
}

Grammar load_grammar_from_file(const std::string& path) {
  return grammar_from_ofef_json(read_file(path));
}

void save_grammar_to_file(const Grammar& grammar, const std::string& path) {
  write_file(path, grammar_to_ofef_json(grammar));
}

std::vector<std::uint8_t> grammar_to_image_bytes(const Grammar& grammar) {
  ImageWriter w;
  for (char c : kImageMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u16(kImageVersion);
  w.str(kOfefFormatVersion);

  w.u32(static_cast<std::uint32_t>(grammar.config().max_depth));
  w.u32(static_cast<std::uint32_t>(grammar.config().max_solutions));
  w.u32(static_cast<std::uint32_t>(grammar.config().max_nodes));
  w.f64(grammar.config().initial_score);
  w.f64(grammar.config().reward_delta);
  w.f64(grammar.config().inhibit_delta);

  w.u32(static_cast<std::uint32_t>(grammar.size()));
  for (const Construction& cxn : grammar.cxns()) {
    w.str(cxn.name());
    w.f64(cxn.get_score());
    w.u32(static_cast<std::uint32_t>(cxn.attributes().size()));
    for (const auto& [key, value] : cxn.attributes()) {
      w.str(key);
      w.term(value);
    }
    w.u32(static_cast<std::uint32_t>(cxn.contributing_pole().size()));
    for (const Unit& u : cxn.contributing_pole()) {
      w.term(u.name);
      w.feature_map(u.features);
    }
    w.u32(static_cast<std::uint32_t>(cxn.conditional_pole().size()));
    for (const ConditionalUnit& cu : cxn.conditional_pole()) {
      w.term(cu.name);
      w.feature_map(cu.formulation_lock);
      w.feature_map(cu.comprehension_lock);
    }
  }

  const auto categories = grammar.categorial_network().categories();
  w.u32(static_cast<std::uint32_t>(categories.size()));
  for (const std::string& c : categories) w.str(c);
  const auto links = grammar.categorial_network().links();
  w.u32(static_cast<std::uint32_t>(links.size()));
  for (const auto& [a, b] : links) {
    w.str(a);
    w.str(b);
  }
  return w.take();
}

Grammar grammar_from_image_bytes(const std::vector<std::uint8_t>& bytes) {
  ImageReader r(bytes);
  char magic[4];
  for (char& c : magic) c = static_cast<char>(r.u8());
  if (std::memcmp(magic, kImageMagic, 4) != 0) {
    throw BadMagicError("not an OFGI grammar image");
  }
  const std::uint16_t version = r.u16();
  if (version != kImageVersion) {
    throw VersionUnsupportedError("unsupported OFGI image version: " +
                                  std::to_string(version));
  }
  const std::string format_version = r.str();
  if (format_version != kOfefFormatVersion) {
    throw VersionUnsupportedError("unsupported grammar format version: " +
                                  format_version);
  }

  Grammar grammar;
  grammar.config().max_depth = static_cast<int>(r.u32());
  grammar.config().max_solutions = static_cast<int>(r.u32());
  grammar.config().max_nodes = static_cast<int>(r.u32());
  grammar.config().initial_score = r.f64();
  grammar.config().reward_delta = r.f64();
  grammar.config().inhibit_delta = r.f64();

  const std::uint32_t cxn_count = r.u32();
  for (std::uint32_t i = 0; i < cxn_count; ++i) {
    const std::string name = r.str();
    const double score = r.f64();
    const std::uint32_t attr_count = r.u32();
    std::vector<std::pair<std::string, Term>> attributes;
    for (std::uint32_t a = 0; a < attr_count; ++a) {
      std::string key = r.str();
      attributes.emplace_back(std::move(key), r.term());
    }
    const std::uint32_t contributing_count = r.u32();
    std::vector<Unit> contributing;
    for (std::uint32_t u = 0; u < contributing_count; ++u) {
      Unit unit;
      unit.name = r.term();
      unit.features = r.feature_map();
      contributing.push_back(std::move(unit));
    }
    const std::uint32_t conditional_count = r.u32();
    std::vector<ConditionalUnit> conditional;
    for (std::uint32_t u = 0; u < conditional_count; ++u) {
      ConditionalUnit cu;
      cu.name = r.term();
      cu.formulation_lock = r.feature_map();
      cu.comprehension_lock = r.feature_map();
      conditional.push_back(std::move(cu));
    }
    Construction cxn(name, std::move(contributing), std::move(conditional),
                     score);
    for (auto& [key, value] : attributes) {
      cxn.set_attribute(key, std::move(value));
    }
    grammar.add_cxn(std::move(cxn));
  }

  const std::uint32_t category_count = r.u32();
  for (std::uint32_t i = 0; i < category_count; ++i) {
    grammar.categorial_network().add_category(r.str());
  }
  const std::uint32_t link_count = r.u32();
  for (std::uint32_t i = 0; i < link_count; ++i) {
    const std::string a = r.str();
    const std::string b = r.str();
    grammar.categorial_network().add_link(a, b);
  }
  if (!r.at_end()) {
    throw MalformedDocumentError("trailing bytes after grammar image",
                                 "<image>");
  }
  return grammar;
}

void save_grammar_image(const Grammar& grammar, const std::string& path) {
  const std::vector<std::uint8_t> bytes = grammar_to_image_bytes(grammar);
  write_file(path, std::string(bytes.begin(), bytes.end()));
}

Grammar load_grammar_image(const std::string& path) {
  const std::string data = read_file(path);
  return grammar_from_image_bytes(
      std::vector<std::uint8_t>(data.begin(), data.end()));
}

}  // namespace cxg
