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

#include "piiforge/metrics.h"

#include "piiforge/error.h"
#include "piiforge/number_words.h"
#include "piiforge/parallel.h"
#include "piiforge/text.h"

namespace piiforge {
namespace {

enum class CharClass { kSpace, kWord, kApostrophe, kHyphen, kPunct };

CharClass classify(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return CharClass::kWord;
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
      c == '\v') {
    return CharClass::kSpace;
  }
  if ((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
    return CharClass::kWord;
  }
  if (c == '\'') return CharClass::kApostrophe;
  if (c == '-') return CharClass::kHyphen;
  if (u < 0x20 || u == 0x7f) return CharClass::kSpace;
  return CharClass::kPunct;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

char fold(char c, bool case_fold) {
  if (case_fold && c >= 'A' && c <= 'Z') return static_cast<char>(c - 'A' + 'a');
  return c;
}

// What normalization does with one source byte.
enum class Action { kKeep, kBreak, kDrop, kDigitWord };

Action action_for(std::string_view text, std::size_t i,
                  const NormalizationProfile& p) {
  const CharClass cls = classify(text[i]);
  auto interior = [&] {
    return i > 0 && i + 1 < text.size() &&
           classify(text[i - 1]) == CharClass::kWord &&
           classify(text[i + 1]) == CharClass::kWord;
  };
  const Action removed =
      p.mode == NormalizationProfile::Mode::kWordLevel ? Action::kBreak
                                                       : Action::kDrop;
  switch (cls) {
    case CharClass::kSpace:
      return Action::kBreak;
    case CharClass::kWord:
      return p.verbalize_digits && is_digit(text[i]) ? Action::kDigitWord
                                                     : Action::kKeep;
    case CharClass::kApostrophe:
      return p.strip_punctuation && !interior() ? removed : Action::kKeep;
    case CharClass::kHyphen:
      if (p.remove_hyphens) return removed;
      return p.strip_punctuation && !interior() ? removed : Action::kKeep;
    case CharClass::kPunct:
      return p.strip_punctuation ? removed : Action::kKeep;
  }
  return Action::kKeep;
}

template <typename T>
std::size_t count_errors(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return align(ref, hyp).cost;
}

std::u32string char_units(std::string_view text, const NormalizationProfile& p) {
  return decode_utf8(normalize_chars(text, p));
}

NormalizationProfile as_mode(NormalizationProfile p,
                             NormalizationProfile::Mode mode) {
  p.mode = mode;
  if (mode == NormalizationProfile::Mode::kWordLevel) p.remove_whitespace = false;
  return p;
}

}  // namespace

NormalizationProfile NormalizationProfile::word_level() {
  return NormalizationProfile{};
}

NormalizationProfile NormalizationProfile::char_level() {
  NormalizationProfile p;
  p.mode = Mode::kCharLevel;
  p.remove_whitespace = true;
  p.remove_hyphens = true;
  return p;
}

void NormalizationProfile::validate() const {
  if (mode == Mode::kWordLevel && remove_whitespace) {
    throw ConfigError("word-level normalization cannot remove whitespace");
  }
}

std::vector<Token> tokenize(std::string_view text,
                            const NormalizationProfile& profile) {
  profile.validate();
  std::vector<Token> out;
  Token current;
  bool open = false;
  auto flush = [&] {
    if (open) out.push_back(std::move(current));
    current = Token{};
    open = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (action_for(text, i, profile)) {
      case Action::kKeep:
        if (!open) {
          current.start = i;
          open = true;
        }
        current.text.push_back(fold(text[i], profile.case_fold));
        current.end = i + 1;
        break;
      case Action::kDigitWord:
        flush();
        out.push_back({std::string(digit_word(text[i])), i, i + 1});
        break;
      case Action::kBreak:
      case Action::kDrop:
        flush();
        break;
    }
  }
  flush();
  return out;
}

std::vector<std::string> normalize_words(std::string_view text,
                                         const NormalizationProfile& profile) {
  std::vector<std::string> out;
  for (Token& t : tokenize(text, profile)) out.push_back(std::move(t.text));
  return out;
}

std::string normalize_chars(std::string_view text,
                            const NormalizationProfile& profile) {
  profile.validate();
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const Action a = action_for(text, i, profile);
    if (a == Action::kDrop) continue;
    if (a == Action::kBreak) {
      // Whitespace, or removed punctuation under a word-level profile.
      if (profile.remove_whitespace) continue;
      if (profile.collapse_whitespace) {
        pending_space = !out.empty();
      } else {
        out.push_back(text[i]);
      }
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (a == Action::kDigitWord) {
      out += digit_word(text[i]);
    } else {
      out.push_back(fold(text[i], profile.case_fold));
    }
  }
  return out;
}

ErrorCount word_errors(std::string_view ref, std::string_view hyp,
                       const NormalizationProfile& profile) {
  const auto p = as_mode(profile, NormalizationProfile::Mode::kWordLevel);
  const auto r = normalize_words(ref, p);
  const auto h = normalize_words(hyp, p);
  return {count_errors(r, h), r.size()};
}

ErrorCount char_errors(std::string_view ref, std::string_view hyp,
                       const NormalizationProfile& profile) {
  const auto p = as_mode(profile, NormalizationProfile::Mode::kCharLevel);
  const std::u32string r = char_units(ref, p);
  const std::u32string h = char_units(hyp, p);
  const auto cost = align(std::span<const char32_t>(r.data(), r.size()),
                          std::span<const char32_t>(h.data(), h.size()))
                        .cost;
  return {cost, r.size()};
}

double wer(std::string_view ref, std::string_view hyp,
           const NormalizationProfile& profile) {
  const ErrorCount c = word_errors(ref, hyp, profile);
  if (c.reference_length == 0) {
    throw EmptyReference("reference has no words after normalization");
  }
  return static_cast<double>(c.errors) / static_cast<double>(c.reference_length);
}

double cer(std::string_view ref, std::string_view hyp,
           const NormalizationProfile& profile) {
  const ErrorCount c = char_errors(ref, hyp, profile);
  if (c.reference_length == 0) {
    throw EmptyReference("reference has no characters after normalization");
  }
  return static_cast<double>(c.errors) / static_cast<double>(c.reference_length);
}

bool sentence_correct(std::string_view ref, std::string_view hyp,
                      const NormalizationProfile& profile) {
  if (profile.mode == NormalizationProfile::Mode::kWordLevel) {
    return normalize_words(ref, profile) == normalize_words(hyp, profile);
  }
  return normalize_chars(ref, profile) == normalize_chars(hyp, profile);
}

double sacc(std::span<const std::pair<std::string, std::string>> pairs,
            const NormalizationProfile& profile) {
  if (pairs.empty()) throw EmptyCorpus("sentence accuracy of an empty corpus");
  std::size_t correct = 0;
  for (const auto& [ref, hyp] : pairs) correct += sentence_correct(ref, hyp, profile);
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

std::vector<bool> entity_hits(const SurrogateTranscript& ref,
                              std::string_view hyp,
                              const NormalizationProfile& profile) {
  const auto p = as_mode(profile, NormalizationProfile::Mode::kWordLevel);
  const std::vector<Token> ref_tokens = tokenize(ref.text, p);
  const std::vector<std::string> hyp_words = normalize_words(hyp, p);
  std::vector<std::string> ref_words;
  ref_words.reserve(ref_tokens.size());
  for (const Token& t : ref_tokens) ref_words.push_back(t.text);

  std::vector<bool> matched(ref_words.size(), false);
  for (const EditOp& op : align(ref_words, hyp_words).ops) {
    if (op.kind == EditKind::kMatch) matched[*op.ref_index] = true;
  }

  std::vector<bool> hits;
  hits.reserve(ref.entities.size());
  for (const Entity& e : ref.entities) {
    bool all = true;
    for (std::size_t k = 0; k < ref_tokens.size(); ++k) {
      const Token& t = ref_tokens[k];
      if (t.start < e.end && e.start < t.end && !matched[k]) {
        all = false;
        break;
      }
    }
    hits.push_back(all);
  }
  return hits;
}

namespace {

bool passes(const TypeFilter& filter, const RedactionTagType& type) {
  return filter.empty() || filter.contains(type);
}

void tally(RecallTable& table, const SurrogateTranscript& ref,
           const std::vector<bool>& hits, const TypeFilter& filter,
           UtteranceScore* score) {
  for (std::size_t k = 0; k < ref.entities.size(); ++k) {
    const RedactionTagType& type = ref.entities[k].type;
    if (!passes(filter, type)) continue;
    RecallCount& c = table[type];
    ++c.total;
    c.recalled += hits[k];
    if (score != nullptr) {
      ++score->entities;
      score->entities_recalled += hits[k];
    }
  }
}

}  // namespace

RecallResult entity_recall(std::span<const SurrogateTranscript> refs,
                           const HypothesisMap& hyps, const TypeFilter& filter,
                           const NormalizationProfile& profile) {
  RecallResult out;
  for (const SurrogateTranscript& ref : refs) {
    auto it = hyps.find(ref.id);
    std::string_view hyp;
    if (it == hyps.end()) {
      ++out.missing_hypotheses;
    } else {
      hyp = it->second;
    }
    tally(out.per_type, ref, entity_hits(ref, hyp, profile), filter, nullptr);
  }
  return out;
}

EvalReport score_corpus(std::span<const SurrogateTranscript> refs,
                        const HypothesisMap& hyps,
                        const ScoringOptions& options) {
  if (refs.empty()) throw EmptyCorpus("no reference utterances");
  const auto word_profile =
      as_mode(options.word_profile, NormalizationProfile::Mode::kWordLevel);
  const auto char_profile =
      as_mode(options.char_profile, NormalizationProfile::Mode::kCharLevel);
  word_profile.validate();
  char_profile.validate();

  struct Scored {
    UtteranceScore score;
    std::vector<bool> hits;
  };
  std::vector<Scored> scored =
      parallel_map(refs, options.workers, [&](const SurrogateTranscript& ref) {
        Scored s;
        s.score.id = ref.id;
        auto it = hyps.find(ref.id);
        std::string_view hyp;
        if (it == hyps.end()) {
          s.score.hypothesis_missing = true;
        } else {
          hyp = it->second;
        }
        const ErrorCount w = word_errors(ref.text, hyp, word_profile);
        const ErrorCount c = char_errors(ref.text, hyp, char_profile);
        s.score.word_errors = w.errors;
        s.score.reference_words = w.reference_length;
        s.score.char_errors = c.errors;
        s.score.reference_chars = c.reference_length;
        s.score.sentence_correct = sentence_correct(ref.text, hyp, char_profile);
        s.hits = entity_hits(ref, hyp, word_profile);
        return s;
      });

  EvalReport report;
  report.utterances = refs.size();
  std::uint64_t correct = 0;
  std::set<std::string_view> ref_ids;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    UtteranceScore& u = scored[i].score;
    ref_ids.insert(refs[i].id);
    tally(report.entity_recall, refs[i], scored[i].hits, options.type_filter, &u);
    if (u.hypothesis_missing) ++report.missing_hypotheses;
    if (u.reference_words == 0) {
      ++report.empty_word_references;
    } else {
      report.word_errors += u.word_errors;
      report.reference_words += u.reference_words;
    }
    if (u.reference_chars == 0) {
      ++report.empty_char_references;
    } else {
      report.char_errors += u.char_errors;
      report.reference_chars += u.reference_chars;
    }
    correct += u.sentence_correct;
    report.per_utterance.push_back(std::move(u));
  }
  for (const auto& [id, hyp] : hyps) {
    if (!ref_ids.contains(id)) ++report.unmatched_hypotheses;
  }
  if (report.reference_words > 0) {
    report.wer = static_cast<double>(report.word_errors) /
                 static_cast<double>(report.reference_words);
  }
  if (report.reference_chars > 0) {
    report.cer = static_cast<double>(report.char_errors) /
                 static_cast<double>(report.reference_chars);
  }
  report.sacc = static_cast<double>(correct) / static_cast<double>(refs.size());
  return report;
}

}  // namespace piiforge
