// Copyright 2026 The PII Forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "piiforge/records.h"

#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "piiforge/error.h"

namespace piiforge {
namespace {

using nlohmann::json;

json parse_object(std::string_view line, std::size_t line_number) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw FormatError(line_number, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError(line_number, "record is not an object");
  return j;
}

const json& field(const json& j, const char* name, std::size_t line_number) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw FormatError(line_number, std::string("missing field \"") + name + "\"");
  }
  return *it;
}

std::string string_field(const json& j, const char* name,
                         std::size_t line_number) {
  const json& v = field(j, name, line_number);
  if (!v.is_string()) {
    throw FormatError(line_number, std::string("field \"") + name +
                                       "\" must be a string");
  }
  return v.get<std::string>();
}

std::uint64_t offset_field(const json& j, const char* name,
                           std::size_t line_number) {
  const json& v = field(j, name, line_number);
  if (!v.is_number_unsigned()) {
    throw FormatError(line_number, std::string("field \"") + name +
                                       "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open " + path.string());
  return in;
}

json rate_or_null(const std::optional<double>& rate) {
  return rate ? json(*rate) : json(nullptr);
}

}  // namespace

bool JsonlReader::next(std::string& line) {
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

MarkupRecord parse_markup_record(std::string_view line, std::size_t line_number) {
  const json j = parse_object(line, line_number);
  return {string_field(j, "id", line_number), string_field(j, "text", line_number)};
}

std::string markup_record_to_json(const MarkupRecord& record) {
  return json{{"id", record.id}, {"text", record.text}}.dump();
}

SurrogateTranscript parse_surrogate_record(std::string_view line,
                                           std::size_t line_number) {
  const json j = parse_object(line, line_number);
  SurrogateTranscript out;
  out.id = string_field(j, "id", line_number);
  out.text = string_field(j, "text", line_number);
  auto it = j.find("entities");
  if (it == j.end()) return out;
  if (!it->is_array()) throw FormatError(line_number, "\"entities\" must be an array");
  std::size_t previous_end = 0;
  for (const json& e : *it) {
    if (!e.is_object()) throw FormatError(line_number, "entity is not an object");
    const std::string type_name = string_field(e, "type", line_number);
    auto type = RedactionTagType::from_name(type_name);
    if (!type) throw FormatError(line_number, "invalid entity type '" + type_name + "'");
    const std::uint64_t start = offset_field(e, "start", line_number);
    const std::uint64_t end = offset_field(e, "end", line_number);
    if (start >= end || end > out.text.size()) {
      throw FormatError(line_number, "entity span out of bounds");
    }
    if (start < previous_end) {
      throw FormatError(line_number, "entity spans overlap or are unordered");
    }
    previous_end = end;
    out.entities.push_back(
        {*type, start, end, out.text.substr(start, end - start)});
  }
  return out;
}

std::string surrogate_to_json(const SurrogateTranscript& t) {
  json entities = json::array();
  for (const Entity& e : t.entities) {
    entities.push_back(
        {{"type", std::string(e.type.name())}, {"start", e.start}, {"end", e.end}});
  }
  return json{{"id", t.id}, {"text", t.text}, {"entities", std::move(entities)}}
      .dump();
}

std::vector<SurrogateTranscript> read_surrogate_corpus(std::istream& in) {
  std::vector<SurrogateTranscript> out;
  JsonlReader reader(in);
  std::string line;
  while (reader.next(line)) {
    out.push_back(parse_surrogate_record(line, reader.line_number()));
  }
  return out;
}

std::vector<SurrogateTranscript> read_surrogate_corpus(
    const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_surrogate_corpus(in);
}

HypothesisMap read_hypotheses(std::istream& in) {
  HypothesisMap out;
  JsonlReader reader(in);
  std::string line;
  while (reader.next(line)) {
    const json j = parse_object(line, reader.line_number());
    std::string id = string_field(j, "id", reader.line_number());
    std::string hyp = string_field(j, "hyp", reader.line_number());
    if (out.contains(id)) throw DuplicateHypothesisId(id);
    out.emplace(std::move(id), std::move(hyp));
  }
  return out;
}

HypothesisMap read_hypotheses(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_hypotheses(in);
}

std::string hypothesis_to_json(std::string_view id, std::string_view hyp) {
  return json{{"id", id}, {"hyp", hyp}}.dump();
}

std::string sequence_to_json(const IdentifierSequence& seq,
                             VerbalizationStyle style) {
  return json{{"id", seq.id},
              {"sequence", seq.chars},
              {"verbalized", verbalize(seq, style)},
              {"has_repeat", seq.has_injected_repeat}}
      .dump();
}

std::string manifest_to_json(const BatchManifest& batch) {
  return json{{"step", batch.step},
              {"stream", batch.stream},
              {"kind", stream_kind_name(batch.kind)},
              {"ids", batch.ids}}
      .dump();
}

std::vector<std::string> read_record_ids(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<std::string> ids;
  JsonlReader reader(in);
  std::string line;
  while (reader.next(line)) {
    const json j = parse_object(line, reader.line_number());
    ids.push_back(string_field(j, "id", reader.line_number()));
  }
  return ids;
}

std::string diagnostic_to_json(std::string_view id, std::size_t offset,
                               std::string_view message) {
  return json{{"id", id}, {"offset", offset}, {"message", message}}.dump();
}

std::string census_to_json(const TagCensus& census) {
  json counts = json::object();
  std::uint64_t total = 0;
  for (const auto& [type, n] : census) {
    counts[std::string(type.name())] = n;
    total += n;
  }
  return json{{"tags", std::move(counts)}, {"total", total}}.dump(2);
}

std::string report_to_json(const EvalReport& r) {
  json recall = json::object();
  for (const auto& [type, c] : r.entity_recall) {
    recall[std::string(type.name())] = {
        {"recalled", c.recalled}, {"total", c.total}, {"rate", c.rate()}};
  }
  json per = json::array();
  for (const UtteranceScore& u : r.per_utterance) {
    per.push_back({{"id", u.id},
                   {"word_errors", u.word_errors},
                   {"reference_words", u.reference_words},
                   {"char_errors", u.char_errors},
                   {"reference_chars", u.reference_chars},
                   {"sentence_correct", u.sentence_correct},
                   {"hypothesis_missing", u.hypothesis_missing},
                   {"entities", u.entities},
                   {"entities_recalled", u.entities_recalled}});
  }
  json doc = {
      {"wer", rate_or_null(r.wer)},
      {"cer", rate_or_null(r.cer)},
      {"sacc", r.sacc},
      {"word_errors", r.word_errors},
      {"reference_words", r.reference_words},
      {"char_errors", r.char_errors},
      {"reference_chars", r.reference_chars},
      {"utterances", r.utterances},
      {"entity_recall", std::move(recall)},
      {"warnings",
       {{"empty_word_references", r.empty_word_references},
        {"empty_char_references", r.empty_char_references},
        {"missing_hypotheses", r.missing_hypotheses},
        {"unmatched_hypotheses", r.unmatched_hypotheses}}},
      {"per_utterance", std::move(per)},
  };
  return doc.dump(2) + "\n";
}

std::string report_to_tsv(const EvalReport& r) {
  std::ostringstream out;
  out << "id\tword_errors\treference_words\tchar_errors\treference_chars\t"
         "sentence_correct\thypothesis_missing\tentities\tentities_recalled\n";
  for (const UtteranceScore& u : r.per_utterance) {
    out << u.id << '\t' << u.word_errors << '\t' << u.reference_words << '\t'
        << u.char_errors << '\t' << u.reference_chars << '\t'
        << (u.sentence_correct ? 1 : 0) << '\t' << (u.hypothesis_missing ? 1 : 0)
        << '\t' << u.entities << '\t' << u.entities_recalled << '\n';
  }
  return out.str();
}

}  // namespace piiforge
