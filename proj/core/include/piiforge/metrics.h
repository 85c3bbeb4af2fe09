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

// ASR scoring: WER, normalized CER, sentence accuracy and tagged-entity
// recall over unit-cost Levenshtein alignments.

#ifndef PIIFORGE_METRICS_H_
#define PIIFORGE_METRICS_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "piiforge/markup.h"
#include "piiforge/surrogate.h"

namespace piiforge {

struct NormalizationProfile {
  enum class Mode { kWordLevel, kCharLevel };

  Mode mode = Mode::kWordLevel;
  bool case_fold = true;  // ASCII letters only
  // Drops ASCII punctuation. Apostrophes and hyphens between two word
  // characters survive this flag; remove_hyphens drops the hyphens too.
  bool strip_punctuation = true;
  bool collapse_whitespace = true;
  bool remove_whitespace = false;  // char level only
  bool remove_hyphens = false;
  // Spell out ASCII digits ("5" -> "five"). Off by default.
  bool verbalize_digits = false;

  static NormalizationProfile word_level();
  static NormalizationProfile char_level();

  // Throws ConfigError when word_level sets remove_whitespace.
  void validate() const;
};

// A normalized word with the byte span of the source text it came from.
struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
};

std::vector<Token> tokenize(std::string_view text,
                            const NormalizationProfile& profile);
std::vector<std::string> normalize_words(std::string_view text,
                                         const NormalizationProfile& profile);
// UTF-8 result.
std::string normalize_chars(std::string_view text,
                            const NormalizationProfile& profile);

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;
  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct Alignment {
  std::vector<EditOp> ops;
  std::size_t cost = 0;
  friend bool operator==(const Alignment&, const Alignment&) = default;
};

// Unit-cost Levenshtein alignment. Traceback walks from the end and prefers
// Match, then Substitute, then Delete, then Insert among equal-cost moves.
template <typename T>
Alignment align(std::span<const T> ref, std::span<const T> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;
  std::vector<std::uint32_t> d((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return d[i * width + j];
  };
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const std::uint32_t del = at(i - 1, j) + 1;
      const std::uint32_t ins = at(i, j - 1) + 1;
      at(i, j) = std::min(diag, std::min(del, ins));
    }
  }

  Alignment out;
  out.cost = at(n, m);
  out.ops.reserve(n + m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::uint32_t here = at(i, j);
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && here == at(i - 1, j - 1)) {
      out.ops.push_back({EditKind::kMatch, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
      out.ops.push_back({EditKind::kSubstitute, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      out.ops.push_back({EditKind::kDelete, i - 1, std::nullopt});
      --i;
    } else {
      out.ops.push_back({EditKind::kInsert, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

template <typename T>
Alignment align(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return align(std::span<const T>(ref), std::span<const T>(hyp));
}

struct ErrorCount {
  std::uint64_t errors = 0;
  std::uint64_t reference_length = 0;
};

// Word errors against the word_level normalization of ref and hyp.
ErrorCount word_errors(std::string_view ref, std::string_view hyp,
                       const NormalizationProfile& profile);
// Code-point errors against the char_level normalization.
ErrorCount char_errors(std::string_view ref, std::string_view hyp,
                       const NormalizationProfile& profile);

// Throw EmptyReference when the normalized reference is empty.
double wer(std::string_view ref, std::string_view hyp,
           const NormalizationProfile& profile = NormalizationProfile::word_level());
double cer(std::string_view ref, std::string_view hyp,
           const NormalizationProfile& profile = NormalizationProfile::char_level());

// True when both sides normalize to the same form under `profile`.
bool sentence_correct(std::string_view ref, std::string_view hyp,
                      const NormalizationProfile& profile);

// Fraction of pairs whose normalized forms are equal. Throws EmptyCorpus.
double sacc(std::span<const std::pair<std::string, std::string>> pairs,
            const NormalizationProfile& profile = NormalizationProfile::char_level());

struct RecallCount {
  std::uint64_t recalled = 0;
  std::uint64_t total = 0;
  double rate() const {
    return total == 0 ? 0.0 : static_cast<double>(recalled) /
                                  static_cast<double>(total);
  }
  friend bool operator==(const RecallCount&, const RecallCount&) = default;
};

using RecallTable = std::map<RedactionTagType, RecallCount>;
// Empty filter means every type.
using TypeFilter = std::set<RedactionTagType>;
using HypothesisMap = std::unordered_map<std::string, std::string>;

// One flag per entity of `ref`: true when every word-level reference token
// overlapping the entity span is a Match in the alignment against `hyp`.
// An entity that normalizes to no tokens counts as recalled.
std::vector<bool> entity_hits(const SurrogateTranscript& ref,
                              std::string_view hyp,
                              const NormalizationProfile& profile);

struct RecallResult {
  RecallTable per_type;
  std::uint64_t missing_hypotheses = 0;
};

// A reference without a hypothesis is scored against the empty string.
RecallResult entity_recall(std::span<const SurrogateTranscript> refs,
                           const HypothesisMap& hyps, const TypeFilter& filter,
                           const NormalizationProfile& profile =
                               NormalizationProfile::word_level());

struct UtteranceScore {
  std::string id;
  std::uint64_t word_errors = 0;
  std::uint64_t reference_words = 0;
  std::uint64_t char_errors = 0;
  std::uint64_t reference_chars = 0;
  bool sentence_correct = false;
  bool hypothesis_missing = false;
  std::uint64_t entities = 0;
  std::uint64_t entities_recalled = 0;
};

struct EvalReport {
  // nullopt when no utterance has a non-empty normalized reference.
  std::optional<double> wer;
  std::optional<double> cer;
  double sacc = 0.0;
  std::uint64_t word_errors = 0;
  std::uint64_t reference_words = 0;
  std::uint64_t char_errors = 0;
  std::uint64_t reference_chars = 0;
  std::uint64_t utterances = 0;
  RecallTable entity_recall;
  std::vector<UtteranceScore> per_utterance;

  // Warnings. Utterances with an empty normalized reference are left out of
  // the matching WER/CER sums.
  std::uint64_t empty_word_references = 0;
  std::uint64_t empty_char_references = 0;
  std::uint64_t missing_hypotheses = 0;
  std::uint64_t unmatched_hypotheses = 0;

  std::uint64_t warning_count() const {
    return empty_word_references + empty_char_references + missing_hypotheses +
           unmatched_hypotheses;
  }
};

struct ScoringOptions {
  NormalizationProfile word_profile = NormalizationProfile::word_level();
  NormalizationProfile char_profile = NormalizationProfile::char_level();
  TypeFilter type_filter;
  unsigned workers = 1;
};

// Pooled corpus scoring: WER and CER divide summed errors by summed reference
// lengths. Throws EmptyCorpus for an empty reference list.
EvalReport score_corpus(std::span<const SurrogateTranscript> refs,
                        const HypothesisMap& hyps,
                        const ScoringOptions& options = {});

}  // namespace piiforge

#endif  // PIIFORGE_METRICS_H_
