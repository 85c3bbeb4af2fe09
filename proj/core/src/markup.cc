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

#include "piiforge/markup.h"

#include <array>
#include <limits>

#include "piiforge/error.h"

namespace piiforge {
namespace {

struct KindName {
  RedactionTagType::Kind kind;
  std::string_view name;
};

constexpr std::array<KindName, 5> kBuiltinKinds = {{
    {RedactionTagType::Kind::kPatientName, "PATIENT_NAME"},
    {RedactionTagType::Kind::kMedicalProfessionalName,
     "MEDICAL_PROFESSIONAL_NAME"},
    {RedactionTagType::Kind::kDate, "DATE"},
    {RedactionTagType::Kind::kAge, "AGE"},
    {RedactionTagType::Kind::kId, "ID"},
}};

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_valid_tag_label(std::string_view label) {
  if (label.empty() || !is_upper(label.front())) return false;
  for (char c : label) {
    if (!is_upper(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

RedactionTagType::RedactionTagType(Kind kind) : kind_(kind) {
  if (kind == Kind::kOther) {
    throw ConfigError("OTHER tag type requires a label");
  }
}

RedactionTagType RedactionTagType::other(std::string label) {
  if (!is_valid_tag_label(label)) {
    throw ConfigError("invalid tag label '" + label + "'");
  }
  for (const KindName& k : kBuiltinKinds) {
    if (label == k.name) return RedactionTagType(k.kind);
  }
  RedactionTagType t;
  t.kind_ = Kind::kOther;
  t.label_ = std::move(label);
  return t;
}

std::optional<RedactionTagType> RedactionTagType::from_name(
    std::string_view name) {
  if (!is_valid_tag_label(name)) return std::nullopt;
  return other(std::string(name));
}

std::string_view RedactionTagType::name() const {
  for (const KindName& k : kBuiltinKinds) {
    if (k.kind == kind_) return k.name;
  }
  return label_;
}

std::strong_ordering operator<=>(const RedactionTagType& a,
                                 const RedactionTagType& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  return a.label_.compare(b.label_) <=> 0;
}

TaggedTranscript& TaggedTranscript::append_literal(std::string_view text) {
  if (text.empty()) return *this;
  if (!segments_.empty()) {
    if (auto* last = std::get_if<Literal>(&segments_.back())) {
      last->text.append(text);
      return *this;
    }
  }
  segments_.emplace_back(Literal{std::string(text)});
  return *this;
}

TaggedTranscript& TaggedTranscript::append_tag(Tag tag) {
  if (tag.length_hint && *tag.length_hint == 0) {
    throw ConfigError("tag length hint must be at least 1");
  }
  segments_.emplace_back(std::move(tag));
  return *this;
}

std::size_t TaggedTranscript::tag_count() const {
  std::size_t n = 0;
  for (const Segment& s : segments_) n += std::holds_alternative<Tag>(s);
  return n;
}

std::string TaggedTranscript::literal_text() const {
  std::string out;
  for (const Segment& s : segments_) {
    if (const auto* lit = std::get_if<Literal>(&s)) out += lit->text;
  }
  return out;
}

TaggedTranscript parse_tagged(std::string_view raw, std::string id) {
  TaggedTranscript out(std::move(id));
  std::string pending;
  std::size_t i = 0;
  while (i < raw.size()) {
    const char c = raw[i];
    if (c == '\\') {
      if (i + 1 >= raw.size() || (raw[i + 1] != '<' && raw[i + 1] != '\\')) {
        throw MalformedTag(i, "backslash must escape '<' or '\\'");
      }
      pending.push_back(raw[i + 1]);
      i += 2;
      continue;
    }
    if (c != '<') {
      pending.push_back(c);
      ++i;
      continue;
    }

    const std::size_t open = i;
    const std::size_t close = raw.find('>', open + 1);
    if (close == std::string_view::npos) {
      throw MalformedTag(open, "unclosed '<'");
    }
    std::string_view body = raw.substr(open + 1, close - open - 1);
    std::string_view name = body;
    std::optional<std::uint32_t> hint;
    if (const std::size_t colon = body.find(':');
        colon != std::string_view::npos) {
      name = body.substr(0, colon);
      std::string_view digits = body.substr(colon + 1);
      const std::size_t digits_at = open + 1 + colon + 1;
      if (digits.empty()) {
        throw MalformedTag(digits_at, "empty length hint");
      }
      std::uint64_t value = 0;
      for (std::size_t k = 0; k < digits.size(); ++k) {
        if (!is_digit(digits[k])) {
          throw MalformedTag(digits_at + k, "non-numeric length hint");
        }
        value = value * 10 + static_cast<std::uint64_t>(digits[k] - '0');
        if (value > std::numeric_limits<std::uint32_t>::max()) {
          throw MalformedTag(digits_at, "length hint out of range");
        }
      }
      if (digits.front() == '0') {
        throw MalformedTag(digits_at,
                           "length hint must be positive without leading zeros");
      }
      hint = static_cast<std::uint32_t>(value);
    }
    if (name.empty()) {
      throw MalformedTag(open + 1, "empty tag name");
    }
    auto type = RedactionTagType::from_name(name);
    if (!type) {
      // Point at the first offending character of the name.
      std::size_t bad = 0;
      if (is_upper(name.front())) {
        while (bad < name.size() &&
               (is_upper(name[bad]) || is_digit(name[bad]) || name[bad] == '_')) {
          ++bad;
        }
      }
      throw MalformedTag(open + 1 + bad, "invalid tag name");
    }
    out.append_literal(pending);
    pending.clear();
    out.append_tag(Tag{std::move(*type), hint});
    i = close + 1;
  }
  out.append_literal(pending);
  return out;
}

std::string serialize_tag(const Tag& tag) {
  std::string out = "<";
  out.append(tag.type.name());
  if (tag.length_hint) {
    out.push_back(':');
    out += std::to_string(*tag.length_hint);
  }
  out.push_back('>');
  return out;
}

std::string serialize(const TaggedTranscript& transcript) {
  std::string out;
  for (const Segment& s : transcript.segments()) {
    if (const auto* lit = std::get_if<Literal>(&s)) {
      for (char c : lit->text) {
        if (c == '<' || c == '\\') out.push_back('\\');
        out.push_back(c);
      }
    } else {
      out += serialize_tag(std::get<Tag>(s));
    }
  }
  return out;
}

void add_to_census(TagCensus& census, const TaggedTranscript& transcript) {
  for (const Segment& s : transcript.segments()) {
    if (const auto* tag = std::get_if<Tag>(&s)) ++census[tag->type];
  }
}

}  // namespace piiforge
