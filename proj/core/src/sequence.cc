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

#include "piiforge/sequence.h"

#include <algorithm>
#include <cmath>

#include "piiforge/error.h"
#include "piiforge/hashing.h"

namespace piiforge {
namespace {

constexpr std::uint64_t kLengthSalt = 1;
constexpr std::uint64_t kCharSalt = 2;
constexpr std::uint64_t kBaseSalt = 10;
constexpr std::uint64_t kSelectSalt = 11;
constexpr std::uint64_t kInjectSalt = 12;

RepeatRun maximal_run_at(const std::string& s, std::size_t pos) {
  std::size_t lo = pos;
  std::size_t hi = pos + 1;
  while (lo > 0 && s[lo - 1] == s[pos]) --lo;
  while (hi < s.size() && s[hi] == s[pos]) ++hi;
  return {lo, hi - lo};
}

}  // namespace

void SequenceSpec::validate() const {
  if (alphabet.empty()) throw ConfigError("sequence alphabet is empty");
  for (char c : alphabet) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      throw ConfigError("sequence alphabet must be ASCII");
    }
  }
  if (!std::isfinite(length_location) || !std::isfinite(length_shape)) {
    throw ConfigError("length location and shape must be finite");
  }
  if (!std::isfinite(length_scale) || length_scale <= 0.0) {
    throw ConfigError("length scale must be positive");
  }
  if (!(repeat_fraction >= 0.0 && repeat_fraction <= 1.0)) {
    throw ConfigError("repeat fraction must lie in [0, 1]");
  }
  if (repeat_fraction > 0.0 && repeat_lengths.empty()) {
    throw ConfigError("repeat lengths are empty but repeat fraction is positive");
  }
  for (int k : repeat_lengths) {
    if (k < 2) throw ConfigError("repeat lengths must be >= 2");
  }
}

double draw_clipped_length(const SequenceSpec& spec, Rng& rng) {
  const double x = rng.skew_normal(spec.length_location, spec.length_scale,
                                   spec.length_shape);
  return x < 0.0 ? 0.0 : x;
}

std::uint32_t sample_length(const SequenceSpec& spec, std::uint64_t seed) {
  Rng rng(stable_hash(seed, kLengthSalt));
  // std::round rounds halfway cases away from zero.
  const double rounded = std::round(draw_clipped_length(spec, rng));
  const double total = rounded + static_cast<double>(spec.length_offset);
  return total < 1.0 ? 1u : static_cast<std::uint32_t>(total);
}

IdentifierSequence gen_sequence(const SequenceSpec& spec, std::uint64_t seed) {
  const std::uint32_t length = sample_length(spec, seed);
  Rng rng(stable_hash(seed, kCharSalt));
  IdentifierSequence out;
  out.chars.reserve(length + 4);
  for (std::uint32_t i = 0; i < length; ++i) {
    out.chars.push_back(spec.alphabet[rng.below(spec.alphabet.size())]);
  }
  return out;
}

IdentifierSequence inject_repeat_at(IdentifierSequence seq,
                                    std::size_t position,
                                    std::size_t run_length) {
  if (seq.chars.empty()) throw ConfigError("cannot inject into empty sequence");
  if (position >= seq.chars.size()) {
    throw ConfigError("repeat position out of range");
  }
  if (run_length < 2) throw ConfigError("repeat length must be >= 2");
  const std::size_t added = run_length - 1;
  seq.chars.insert(position + 1, added, seq.chars[position]);

  // Shift earlier records to the new coordinates, then re-derive each as a
  // maximal run. Duplicates appear when two records merge.
  std::vector<RepeatRun> runs;
  for (RepeatRun r : seq.repeat_runs) {
    if (r.position > position) r.position += added;
    runs.push_back(maximal_run_at(seq.chars, r.position));
  }
  runs.push_back(maximal_run_at(seq.chars, position));
  std::sort(runs.begin(), runs.end(), [](const RepeatRun& a, const RepeatRun& b) {
    return a.position < b.position;
  });
  runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
  seq.repeat_runs = std::move(runs);
  seq.has_injected_repeat = true;
  return seq;
}

IdentifierSequence inject_repeats(IdentifierSequence seq,
                                  const SequenceSpec& spec,
                                  std::uint64_t seed) {
  if (spec.repeat_lengths.empty()) {
    throw ConfigError("no repeat lengths configured");
  }
  Rng rng(seed);
  const std::size_t position = rng.below(seq.chars.size());
  const int k = spec.repeat_lengths[rng.below(spec.repeat_lengths.size())];
  return inject_repeat_at(std::move(seq), position,
                          static_cast<std::size_t>(k));
}

std::string sequence_id(std::uint64_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 9) digits.insert(0, 9 - digits.size(), '0');
  return "seq-" + digits;
}

IdentifierSequence corpus_item(const SequenceSpec& spec, std::uint64_t index) {
  const std::uint64_t item_seed = stable_hash(spec.master_seed, index);
  IdentifierSequence seq = gen_sequence(spec, stable_hash(item_seed, kBaseSalt));
  Rng select(stable_hash(item_seed, kSelectSalt));
  if (spec.repeat_fraction > 0.0 && select.bernoulli(spec.repeat_fraction)) {
    seq = inject_repeats(std::move(seq), spec,
                         stable_hash(item_seed, kInjectSalt));
  }
  seq.id = sequence_id(index);
  return seq;
}

void gen_corpus(const SequenceSpec& spec, std::uint64_t begin,
                std::uint64_t end,
                const std::function<void(IdentifierSequence&&)>& emit) {
  spec.validate();
  for (std::uint64_t i = begin; i < end; ++i) emit(corpus_item(spec, i));
}

void gen_corpus(const SequenceSpec& spec,
                const std::function<void(IdentifierSequence&&)>& emit) {
  gen_corpus(spec, 0, spec.count, emit);
}

std::string verbalize(const IdentifierSequence& seq, VerbalizationStyle style) {
  if (style == VerbalizationStyle::kCompact) return seq.chars;
  std::string out;
  out.reserve(seq.chars.size() * 2);
  for (char c : seq.chars) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(c);
  }
  return out;
}

}  // namespace piiforge
