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

// Synthetic identifier sequences (digit and alphanumeric strings) with a
// skew-normal length distribution and optional injected character repeats.

#ifndef PIIFORGE_SEQUENCE_H_
#define PIIFORGE_SEQUENCE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "piiforge/random.h"

namespace piiforge {

inline constexpr std::string_view kDigitAlphabet = "0123456789";
inline constexpr std::string_view kAlphanumericAlphabet =
    "0123456789abcdefghijklmnopqrstuvwxyz";

struct SequenceSpec {
  // ASCII symbols, one per byte.
  std::string alphabet{kDigitAlphabet};
  double length_location = 10.0;
  double length_scale = 5.0;
  double length_shape = 4.0;
  int length_offset = 3;
  double repeat_fraction = 0.10;
  std::vector<int> repeat_lengths = {2, 3, 4};
  std::uint64_t count = 0;
  std::uint64_t master_seed = 0;

  // Throws ConfigError.
  void validate() const;
};

struct RepeatRun {
  std::size_t position = 0;
  std::size_t length = 0;
  friend bool operator==(const RepeatRun&, const RepeatRun&) = default;
};

struct IdentifierSequence {
  std::string id;
  std::string chars;
  bool has_injected_repeat = false;
  std::vector<RepeatRun> repeat_runs;
  friend bool operator==(const IdentifierSequence&,
                         const IdentifierSequence&) = default;
};

// One skew-normal draw clipped at zero, before rounding and offset.
double draw_clipped_length(const SequenceSpec& spec, Rng& rng);

// round_half_away(max(0, X)) + offset, floored at 1.
std::uint32_t sample_length(const SequenceSpec& spec, std::uint64_t seed);

IdentifierSequence gen_sequence(const SequenceSpec& spec, std::uint64_t seed);

// Inserts run_length - 1 copies of chars[position] right after it. The
// recorded run is the maximal run that contains the position afterwards, so
// it can be longer than run_length when it touches an existing run.
IdentifierSequence inject_repeat_at(IdentifierSequence seq,
                                    std::size_t position,
                                    std::size_t run_length);

// Random position (uniform) and run length (uniform over spec.repeat_lengths).
IdentifierSequence inject_repeats(IdentifierSequence seq,
                                  const SequenceSpec& spec,
                                  std::uint64_t seed);

// "seq-000000042"
std::string sequence_id(std::uint64_t index);

// Item `index` of the corpus described by `spec`. A pure function of
// (spec, index), seeded from stable_hash(master_seed, index).
IdentifierSequence corpus_item(const SequenceSpec& spec, std::uint64_t index);

// Emits items [begin, end) in order.
void gen_corpus(const SequenceSpec& spec, std::uint64_t begin,
                std::uint64_t end,
                const std::function<void(IdentifierSequence&&)>& emit);

// Emits all spec.count items.
void gen_corpus(const SequenceSpec& spec,
                const std::function<void(IdentifierSequence&&)>& emit);

enum class VerbalizationStyle { kCharPerToken, kCompact };

// kCharPerToken: "a 1 b 2"; kCompact: "a1b2".
std::string verbalize(const IdentifierSequence& seq, VerbalizationStyle style);

}  // namespace piiforge

#endif  // PIIFORGE_SEQUENCE_H_
