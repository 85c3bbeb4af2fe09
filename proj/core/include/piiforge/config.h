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

// Config documents for surrogate policies, sequence specs and mix schedules.
// All three are YAML mappings; relative paths inside a document resolve
// against the directory that holds it. Unknown keys are rejected.
//
// Surrogate policy:
//
//   seed: 7
//   names:
//     lexicon: names.tsv          # name<TAB>weight per line, '#' comments
//     entries:                    # and/or inline
//       - {name: Oliver Barry Matthews, weight: 2.5}
//   dates:
//     patterns: ["{MONTH_NAME} {DAY_ORDINAL_WORDS}"]
//     first: 1950-01-01
//     last: 2025-12-31
//   ages: {low: 1, high: 99}
//   ids:
//     alphabet: "0123456789"
//     fallback_lengths: {low: 4, high: 10}   # or [{length: 6, weight: 1}, ...]
//
// Sequence spec:
//
//   seed: 7
//   alphabet: digits                # digits | alphanumeric | {chars: "..."}
//   count: 1000
//   length: {location: 10, scale: 5, shape: 4, offset: 3}
//   repeats: {fraction: 0.1, lengths: [2, 3, 4]}
//
// Mix schedule:
//
//   seed: 1
//   text_injection_start_step: 10000
//   text_only_weight_after_start: 0.25
//   batch_size: 8
//   streams:
//     - {name: captions, kind: speech_text, weight: 0.9, manifest: captions.jsonl}

#ifndef PIIFORGE_CONFIG_H_
#define PIIFORGE_CONFIG_H_

#include <filesystem>
#include <string_view>
#include <vector>

#include "piiforge/mixer.h"
#include "piiforge/sequence.h"
#include "piiforge/surrogate.h"

namespace piiforge {

// All loaders throw ConfigError; policy loaders also throw InvalidPattern for
// bad date patterns.
std::vector<WeightedName> load_lexicon(const std::filesystem::path& path);

SurrogatePolicy parse_policy(std::string_view document,
                             const std::filesystem::path& base_dir = ".");
SurrogatePolicy load_policy(const std::filesystem::path& path);

SequenceSpec parse_sequence_spec(std::string_view document);
SequenceSpec load_sequence_spec(const std::filesystem::path& path);

MixSchedule parse_schedule(std::string_view document,
                           const std::filesystem::path& base_dir = ".");
MixSchedule load_schedule(const std::filesystem::path& path);

// "digits" and "alphanumeric" map to the built-in alphabets; any other value
// is a ConfigError.
std::string named_alphabet(std::string_view name);

}  // namespace piiforge

#endif  // PIIFORGE_CONFIG_H_
