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

// Redaction markup: de-identified transcripts where removed PII is replaced by
// inline tags.
//
// Grammar of a raw transcript:
//
//   transcript := (text | escape | tag)*
//   escape     := '\<' | '\\'
//   tag        := '<' NAME (':' LENGTH)? '>'
//   NAME       := [A-Z][A-Z0-9_]*
//   LENGTH     := [1-9][0-9]*
//   text       := any byte other than '<' and '\'
//
// The grammar is unambiguous, so parse_tagged() and serialize() are exact
// inverses: serialize(parse_tagged(s)) == s for every string that parses.

#ifndef PIIFORGE_MARKUP_H_
#define PIIFORGE_MARKUP_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace piiforge {

class RedactionTagType {
 public:
  enum class Kind {
    kPatientName,
    kMedicalProfessionalName,
    kDate,
    kAge,
    kId,
    kOther,
  };

  RedactionTagType() = default;
  // For every kind except kOther.
  explicit RedactionTagType(Kind kind);
  // Any tag label not naming a built-in kind. Throws ConfigError when the
  // label does not match [A-Z][A-Z0-9_]*.
  static RedactionTagType other(std::string label);
  // Maps "PATIENT_NAME", "DATE", ... to their kinds and anything else that is
  // a well-formed label to kOther. Returns nullopt for malformed labels.
  static std::optional<RedactionTagType> from_name(std::string_view name);

  Kind kind() const { return kind_; }
  // Canonical tag label, e.g. "MEDICAL_PROFESSIONAL_NAME".
  std::string_view name() const;

  bool is_name() const {
    return kind_ == Kind::kPatientName ||
           kind_ == Kind::kMedicalProfessionalName;
  }
  bool is_substitutable() const { return kind_ != Kind::kOther; }

  friend bool operator==(const RedactionTagType&,
                         const RedactionTagType&) = default;
  friend std::strong_ordering operator<=>(const RedactionTagType& a,
                                          const RedactionTagType& b);

 private:
  Kind kind_ = Kind::kOther;
  std::string label_;  // only for kOther
};

bool is_valid_tag_label(std::string_view label);

struct Literal {
  std::string text;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Tag {
  RedactionTagType type;
  // Number of redacted characters, when the markup records it.
  std::optional<std::uint32_t> length_hint;
  friend bool operator==(const Tag&, const Tag&) = default;
};

using Segment = std::variant<Literal, Tag>;

// A transcript as alternating literal runs and tags. Literal runs are never
// empty and never adjacent: append_literal() merges into a trailing run.
class TaggedTranscript {
 public:
  TaggedTranscript() = default;
  explicit TaggedTranscript(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

  std::span<const Segment> segments() const { return segments_; }

  TaggedTranscript& append_literal(std::string_view text);
  // Throws ConfigError for a zero length hint.
  TaggedTranscript& append_tag(Tag tag);
  TaggedTranscript& append_tag(RedactionTagType type,
                               std::optional<std::uint32_t> length_hint = {}) {
    return append_tag(Tag{std::move(type), length_hint});
  }

  std::size_t tag_count() const;
  // Concatenation of all literal runs.
  std::string literal_text() const;

  friend bool operator==(const TaggedTranscript&,
                         const TaggedTranscript&) = default;

 private:
  std::string id_;
  std::vector<Segment> segments_;
};

// Throws MalformedTag for an unclosed '<', empty or lowercase tag name,
// non-numeric or zero length hint, or a dangling backslash.
TaggedTranscript parse_tagged(std::string_view raw, std::string id = {});

std::string serialize(const TaggedTranscript& transcript);
// "<DATE>", "<ID:6>".
std::string serialize_tag(const Tag& tag);

using TagCensus = std::map<RedactionTagType, std::uint64_t>;

void add_to_census(TagCensus& census, const TaggedTranscript& transcript);

template <typename Range>
TagCensus tag_census(const Range& corpus) {
  TagCensus census;
  for (const TaggedTranscript& t : corpus) add_to_census(census, t);
  return census;
}

}  // namespace piiforge

#endif  // PIIFORGE_MARKUP_H_
