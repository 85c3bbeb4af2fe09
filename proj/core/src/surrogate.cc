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

#include "piiforge/surrogate.h"

#include <cmath>

#include "piiforge/error.h"
#include "piiforge/hashing.h"
#include "piiforge/number_words.h"
#include "piiforge/text.h"

namespace piiforge {
namespace {

using std::chrono::sys_days;
using std::chrono::year_month_day;

struct AtomName {
  DatePattern::Atom atom;
  std::string_view name;
};

constexpr AtomName kAtoms[] = {
    {DatePattern::Atom::kMonthName, "MONTH_NAME"},
    {DatePattern::Atom::kDayOrdinalWords, "DAY_ORDINAL_WORDS"},
    {DatePattern::Atom::kDayCardinalWords, "DAY_CARDINAL_WORDS"},
    {DatePattern::Atom::kYearWords, "YEAR_WORDS"},
    {DatePattern::Atom::kYearDigitPairsWords, "YEAR_DIGIT_PAIRS_WORDS"},
};

// Sub-stream salts so that each tag kind draws from its own sequence.
constexpr std::uint64_t kNameSalt = 1;
constexpr std::uint64_t kDateSalt = 2;
constexpr std::uint64_t kAgeSalt = 3;
constexpr std::uint64_t kIdSalt = 4;

std::int64_t day_number(const year_month_day& d) {
  return sys_days(d).time_since_epoch().count();
}

}  // namespace

DatePattern DatePattern::parse(std::string_view pattern) {
  DatePattern out;
  out.source_ = std::string(pattern);
  std::string text;
  std::size_t i = 0;
  while (i < pattern.size()) {
    const char c = pattern[i];
    if (c == '}') {
      throw InvalidPattern("unbalanced '}' in date pattern '" +
                           out.source_ + "'");
    }
    if (c != '{') {
      text.push_back(c);
      ++i;
      continue;
    }
    const std::size_t close = pattern.find('}', i + 1);
    if (close == std::string_view::npos) {
      throw InvalidPattern("unclosed '{' in date pattern '" + out.source_ +
                           "'");
    }
    const std::string_view name = pattern.substr(i + 1, close - i - 1);
    const AtomName* found = nullptr;
    for (const AtomName& a : kAtoms) {
      if (a.name == name) found = &a;
    }
    if (found == nullptr) {
      throw InvalidPattern("unknown date atom '" + std::string(name) + "'");
    }
    if (!text.empty()) {
      out.pieces_.push_back({false, Atom::kMonthName, std::move(text)});
      text.clear();
    }
    out.pieces_.push_back({true, found->atom, {}});
    i = close + 1;
  }
  if (!text.empty()) out.pieces_.push_back({false, Atom::kMonthName, text});
  if (out.pieces_.empty()) {
    throw InvalidPattern("empty date pattern");
  }
  return out;
}

std::string DatePattern::render(const year_month_day& date) const {
  if (!date.ok()) throw InvalidPattern("invalid calendar date");
  const int year = static_cast<int>(date.year());
  const unsigned month = static_cast<unsigned>(date.month());
  const unsigned day = static_cast<unsigned>(date.day());
  std::string out;
  for (const Piece& p : pieces_) {
    if (!p.is_atom) {
      out += p.text;
      continue;
    }
    switch (p.atom) {
      case Atom::kMonthName:
        out += month_name(month);
        break;
      case Atom::kDayOrdinalWords:
        out += ordinal_words(day);
        break;
      case Atom::kDayCardinalWords:
        out += cardinal_words(day);
        break;
      case Atom::kYearWords:
        out += cardinal_words(static_cast<std::uint64_t>(year < 0 ? 0 : year));
        break;
      case Atom::kYearDigitPairsWords:
        out += year_digit_pair_words(year);
        break;
    }
  }
  return out;
}

std::string render_date(std::string_view pattern, const year_month_day& date) {
  return DatePattern::parse(pattern).render(date);
}

std::vector<std::string> default_date_formats() {
  return {
      "{MONTH_NAME} {DAY_ORDINAL_WORDS} {YEAR_DIGIT_PAIRS_WORDS}",
      "{MONTH_NAME} {DAY_ORDINAL_WORDS}",
      "the {DAY_ORDINAL_WORDS} of {MONTH_NAME} {YEAR_DIGIT_PAIRS_WORDS}",
      "{MONTH_NAME} {DAY_CARDINAL_WORDS} {YEAR_WORDS}",
  };
}

void SurrogatePolicy::validate() const {
  for (const WeightedName& n : name_lexicon) {
    if (n.name.empty()) throw ConfigError("empty name in lexicon");
    if (!std::isfinite(n.weight) || n.weight <= 0.0) {
      throw ConfigError("lexicon weight for '" + n.name +
                        "' must be finite and positive");
    }
  }
  for (const std::string& f : date_formats) {
    const DatePattern p = DatePattern::parse(f);
    if (p.render(date_range.first).empty()) {
      throw InvalidPattern("date pattern '" + f + "' renders empty");
    }
  }
  if (!date_range.first.ok() || !date_range.last.ok() ||
      sys_days(date_range.first) > sys_days(date_range.last)) {
    throw ConfigError("date range must be two valid dates, first <= last");
  }
  if (age_range.low < 0 || age_range.low > age_range.high) {
    throw ConfigError("age range must satisfy 0 <= low <= high");
  }
  for (const WeightedLength& l : id_length_fallback) {
    if (l.length == 0) throw ConfigError("fallback ID length must be >= 1");
    if (!std::isfinite(l.weight) || l.weight <= 0.0) {
      throw ConfigError("fallback ID length weights must be positive");
    }
  }
  if (!is_valid_utf8(digit_alphabet)) {
    throw ConfigError("digit alphabet is not valid UTF-8");
  }
}

Surrogator::Surrogator(SurrogatePolicy policy) : policy_(std::move(policy)) {
  policy_.validate();
  if (!policy_.name_lexicon.empty()) {
    std::vector<double> w;
    w.reserve(policy_.name_lexicon.size());
    for (const WeightedName& n : policy_.name_lexicon) w.push_back(n.weight);
    name_index_ = WeightedIndex(w);
  }
  if (!policy_.id_length_fallback.empty()) {
    std::vector<double> w;
    for (const WeightedLength& l : policy_.id_length_fallback) {
      w.push_back(l.weight);
    }
    length_index_ = WeightedIndex(w);
  }
  for (const std::string& f : policy_.date_formats) {
    patterns_.push_back(DatePattern::parse(f));
  }
  alphabet_ = split_code_points(policy_.digit_alphabet);
  first_day_ = day_number(policy_.date_range.first);
  day_span_ = day_number(policy_.date_range.last) - first_day_ + 1;
}

std::string Surrogator::sample_name(std::uint64_t seed) const {
  if (name_index_.empty()) {
    throw PolicyIncomplete("name tag found but the name lexicon is empty");
  }
  Rng rng(stable_hash(seed, kNameSalt));
  return policy_.name_lexicon[name_index_.sample(rng)].name;
}

std::string Surrogator::sample_date(std::uint64_t seed) const {
  if (patterns_.empty()) {
    throw PolicyIncomplete("DATE tag found but no date formats are configured");
  }
  Rng rng(stable_hash(seed, kDateSalt));
  const DatePattern& pattern = patterns_[rng.below(patterns_.size())];
  const auto offset =
      static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(day_span_)));
  const year_month_day date{sys_days{std::chrono::days{first_day_ + offset}}};
  return pattern.render(date);
}

std::string Surrogator::sample_age(std::uint64_t seed) const {
  Rng rng(stable_hash(seed, kAgeSalt));
  const auto span =
      static_cast<std::uint64_t>(policy_.age_range.high - policy_.age_range.low) + 1;
  const auto age = static_cast<std::uint64_t>(policy_.age_range.low) + rng.below(span);
  return cardinal_words(age);
}

std::string Surrogator::sample_id(
    std::uint64_t seed, std::optional<std::uint32_t> length_hint) const {
  if (alphabet_.empty()) {
    throw PolicyIncomplete("ID tag found but the digit alphabet is empty");
  }
  Rng rng(stable_hash(seed, kIdSalt));
  std::uint32_t length;
  if (length_hint) {
    length = *length_hint;
  } else {
    if (length_index_.empty()) {
      throw PolicyIncomplete(
          "ID tag without length hint and no fallback length distribution");
    }
    length = policy_.id_length_fallback[length_index_.sample(rng)].length;
  }
  std::string out;
  out.reserve(length);
  for (std::uint32_t i = 0; i < length; ++i) {
    out += alphabet_[rng.below(alphabet_.size())];
  }
  return out;
}

std::string Surrogator::surrogate_for(const Tag& tag, std::uint64_t seed) const {
  switch (tag.type.kind()) {
    case RedactionTagType::Kind::kPatientName:
    case RedactionTagType::Kind::kMedicalProfessionalName:
      return sample_name(seed);
    case RedactionTagType::Kind::kDate:
      return sample_date(seed);
    case RedactionTagType::Kind::kAge:
      return sample_age(seed);
    case RedactionTagType::Kind::kId:
      return sample_id(seed, tag.length_hint);
    case RedactionTagType::Kind::kOther:
      break;
  }
  return serialize_tag(tag);
}

SurrogateTranscript Surrogator::substitute(
    const TaggedTranscript& transcript) const {
  SurrogateTranscript out;
  out.id = transcript.id();
  const auto segments = transcript.segments();
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (const auto* lit = std::get_if<Literal>(&segments[k])) {
      out.text += lit->text;
      continue;
    }
    const Tag& tag = std::get<Tag>(segments[k]);
    if (!tag.type.is_substitutable()) {
      out.text += serialize_tag(tag);
      continue;
    }
    const std::uint64_t seed =
        stable_hash(policy_.master_seed, transcript.id(), k);
    Entity e;
    e.type = tag.type;
    e.surface = surrogate_for(tag, seed);
    e.start = out.text.size();
    out.text += e.surface;
    e.end = out.text.size();
    out.entities.push_back(std::move(e));
  }
  return out;
}

SurrogateTranscript substitute(const TaggedTranscript& transcript,
                               const SurrogatePolicy& policy) {
  return Surrogator(policy).substitute(transcript);
}

std::string sample_name(const SurrogatePolicy& policy, std::uint64_t seed) {
  return Surrogator(policy).sample_name(seed);
}

std::string expansion_id(std::string_view template_id, std::uint64_t index) {
  std::string out(template_id);
  out.push_back('/');
  out += std::to_string(index);
  return out;
}

void expand_templates(std::span<const TaggedTranscript> templates,
                      const Surrogator& surrogator, std::uint64_t per_template,
                      const std::function<void(SurrogateTranscript&&)>& emit) {
  for (const TaggedTranscript& t : templates) {
    bool has_name = false;
    for (const Segment& s : t.segments()) {
      if (const auto* tag = std::get_if<Tag>(&s)) has_name |= tag->type.is_name();
    }
    if (!has_name) {
      throw ConfigError("template '" + t.id() + "' has no name placeholder");
    }
  }
  for (const TaggedTranscript& t : templates) {
    TaggedTranscript variant = t;
    for (std::uint64_t k = 0; k < per_template; ++k) {
      variant.set_id(expansion_id(t.id(), k));
      emit(surrogator.substitute(variant));
    }
  }
}

std::vector<SurrogateTranscript> expand_templates(
    std::span<const TaggedTranscript> templates, const SurrogatePolicy& policy,
    std::uint64_t per_template) {
  std::vector<SurrogateTranscript> out;
  out.reserve(templates.size() * per_template);
  expand_templates(templates, Surrogator(policy), per_template,
                   [&out](SurrogateTranscript&& s) { out.push_back(std::move(s)); });
  return out;
}

}  // namespace piiforge
