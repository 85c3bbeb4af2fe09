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

// Surrogate substitution: fills redaction tags with fake values.
//
// Every random choice for the tag at segment k of utterance u is drawn from a
// generator seeded with stable_hash(master_seed, u, k), so output does not
// depend on processing order or worker count.

#ifndef PIIFORGE_SURROGATE_H_
#define PIIFORGE_SURROGATE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piiforge/markup.h"
#include "piiforge/random.h"

namespace piiforge {

struct WeightedName {
  std::string name;
  double weight = 1.0;
};

struct WeightedLength {
  std::uint32_t length = 1;
  double weight = 1.0;
};

struct IntRange {
  int low = 0;
  int high = 0;
};

struct DateRange {
  std::chrono::year_month_day first{std::chrono::year{1950},
                                    std::chrono::January, std::chrono::day{1}};
  std::chrono::year_month_day last{std::chrono::year{2025},
                                   std::chrono::December, std::chrono::day{31}};
};

// A compiled spoken-date pattern. Atoms are written in braces, everything
// else is copied verbatim:
//
//   {MONTH_NAME}              January
//   {DAY_ORDINAL_WORDS}       fifth
//   {DAY_CARDINAL_WORDS}      five
//   {YEAR_WORDS}              two thousand twenty-one
//   {YEAR_DIGIT_PAIRS_WORDS}  twenty twenty-one
class DatePattern {
 public:
  enum class Atom {
    kMonthName,
    kDayOrdinalWords,
    kDayCardinalWords,
    kYearWords,
    kYearDigitPairsWords,
  };

  // Throws InvalidPattern.
  static DatePattern parse(std::string_view pattern);

  // Throws InvalidPattern for a date that is not a valid calendar date.
  std::string render(const std::chrono::year_month_day& date) const;

  const std::string& source() const { return source_; }

 private:
  struct Piece {
    bool is_atom = false;
    Atom atom = Atom::kMonthName;
    std::string text;
  };
  std::string source_;
  std::vector<Piece> pieces_;
};

std::string render_date(std::string_view pattern,
                        const std::chrono::year_month_day& date);

// The four patterns used when a policy does not list its own.
std::vector<std::string> default_date_formats();

struct SurrogatePolicy {
  std::vector<WeightedName> name_lexicon;
  std::vector<std::string> date_formats = default_date_formats();
  DateRange date_range;
  // One symbol per UTF-8 code point.
  std::string digit_alphabet = "0123456789";
  IntRange age_range{1, 99};
  // Length distribution for ID tags without a length hint; uniform 4..10.
  std::vector<WeightedLength> id_length_fallback = {
      {4, 1.0}, {5, 1.0}, {6, 1.0}, {7, 1.0}, {8, 1.0}, {9, 1.0}, {10, 1.0}};
  std::uint64_t master_seed = 0;

  // Throws ConfigError or InvalidPattern on invalid values. Empty sources are
  // allowed here; they only fail when a tag needs them.
  void validate() const;
};

struct Entity {
  RedactionTagType type;
  std::size_t start = 0;  // byte offsets into SurrogateTranscript::text
  std::size_t end = 0;
  std::string surface;
  friend bool operator==(const Entity&, const Entity&) = default;
};

struct SurrogateTranscript {
  std::string id;
  std::string text;
  std::vector<Entity> entities;
  friend bool operator==(const SurrogateTranscript&,
                         const SurrogateTranscript&) = default;
};

// Validated, precompiled form of a SurrogatePolicy. Immutable and safe to
// share across threads.
class Surrogator {
 public:
  explicit Surrogator(SurrogatePolicy policy);

  const SurrogatePolicy& policy() const { return policy_; }

  // Throws PolicyIncomplete if a tag needs a source the policy lacks.
  SurrogateTranscript substitute(const TaggedTranscript& transcript) const;

  std::string sample_name(std::uint64_t seed) const;
  std::string sample_date(std::uint64_t seed) const;
  std::string sample_age(std::uint64_t seed) const;
  std::string sample_id(std::uint64_t seed,
                        std::optional<std::uint32_t> length_hint) const;

  // Surface for one tag given its per-entity seed.
  std::string surrogate_for(const Tag& tag, std::uint64_t seed) const;

 private:
  SurrogatePolicy policy_;
  WeightedIndex name_index_;
  WeightedIndex length_index_;
  std::vector<DatePattern> patterns_;
  std::vector<std::string> alphabet_;
  std::int64_t first_day_ = 0;
  std::int64_t day_span_ = 0;
};

// Convenience forms that compile the policy on every call.
SurrogateTranscript substitute(const TaggedTranscript& transcript,
                               const SurrogatePolicy& policy);
std::string sample_name(const SurrogatePolicy& policy, std::uint64_t seed);

// Id given to variant `index` of template `template_id`.
std::string expansion_id(std::string_view template_id, std::uint64_t index);

// Emits per_template variants of each template, in template order. Every
// template must contain at least one name tag (ConfigError otherwise).
void expand_templates(
    std::span<const TaggedTranscript> templates, const Surrogator& surrogator,
    std::uint64_t per_template,
    const std::function<void(SurrogateTranscript&&)>& emit);

std::vector<SurrogateTranscript> expand_templates(
    std::span<const TaggedTranscript> templates, const SurrogatePolicy& policy,
    std::uint64_t per_template);

}  // namespace piiforge

#endif  // PIIFORGE_SURROGATE_H_
