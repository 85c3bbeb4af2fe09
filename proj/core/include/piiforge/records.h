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

// JSONL record formats shared by the command line tool and tests.
//
//   markup corpus     {"id", "text"}
//   surrogate corpus  {"id", "text", "entities": [{"type", "start", "end"}]}
//   hypotheses        {"id", "hyp"}
//   sequences         {"id", "sequence", "verbalized", "has_repeat"}
//   batch manifests   {"step", "stream", "kind", "ids": [...]}
//   diagnostics       {"id", "offset", "message"}
//
// Line numbers in FormatError are 1-based physical lines. Blank lines are
// skipped.

#ifndef PIIFORGE_RECORDS_H_
#define PIIFORGE_RECORDS_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "piiforge/markup.h"
#include "piiforge/metrics.h"
#include "piiforge/mixer.h"
#include "piiforge/sequence.h"
#include "piiforge/surrogate.h"

namespace piiforge {

class JsonlReader {
 public:
  explicit JsonlReader(std::istream& in) : in_(in) {}
  // Next non-blank line; false at end of input.
  bool next(std::string& line);
  std::size_t line_number() const { return line_number_; }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

struct MarkupRecord {
  std::string id;
  std::string text;
};

MarkupRecord parse_markup_record(std::string_view line, std::size_t line_number);
std::string markup_record_to_json(const MarkupRecord& record);

SurrogateTranscript parse_surrogate_record(std::string_view line,
                                           std::size_t line_number);
std::string surrogate_to_json(const SurrogateTranscript& transcript);

std::vector<SurrogateTranscript> read_surrogate_corpus(std::istream& in);
std::vector<SurrogateTranscript> read_surrogate_corpus(
    const std::filesystem::path& path);

// Throws DuplicateHypothesisId or FormatError.
HypothesisMap read_hypotheses(std::istream& in);
HypothesisMap read_hypotheses(const std::filesystem::path& path);
std::string hypothesis_to_json(std::string_view id, std::string_view hyp);

std::string sequence_to_json(const IdentifierSequence& seq,
                             VerbalizationStyle style);

std::string manifest_to_json(const BatchManifest& batch);

// The "id" field of every record in a JSONL corpus.
std::vector<std::string> read_record_ids(const std::filesystem::path& path);

std::string diagnostic_to_json(std::string_view id, std::size_t offset,
                               std::string_view message);

std::string census_to_json(const TagCensus& census);

// Indented JSON document with every EvalReport field.
std::string report_to_json(const EvalReport& report);
// One header line, then one tab-separated row per utterance.
std::string report_to_tsv(const EvalReport& report);

}  // namespace piiforge

#endif  // PIIFORGE_RECORDS_H_
