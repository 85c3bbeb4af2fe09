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

// Training-batch manifests for a curriculum that starts with speech-text
// batches only and adds text-only batches after a step threshold.

#ifndef PIIFORGE_MIXER_H_
#define PIIFORGE_MIXER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace piiforge {

enum class StreamKind { kSpeechText, kTextOnly };

std::string_view stream_kind_name(StreamKind kind);
// "speech_text" / "text_only"; nullopt otherwise.
std::optional<StreamKind> parse_stream_kind(std::string_view name);

struct DatasetStream {
  std::string name;
  StreamKind kind = StreamKind::kSpeechText;
  double weight = 1.0;
  std::string manifest_path;
};

// Selection weights. Before text_injection_start_step only speech-text
// streams are eligible, each with probability weight / (sum of speech-text
// weights). From that step on, the speech-text group as a whole has weight 1
// and the text-only group has weight text_only_weight_after_start, split
// among its streams in proportion to their own weights.
struct MixSchedule {
  std::vector<DatasetStream> streams;
  std::uint64_t text_injection_start_step = 10000;
  // Required when any text-only stream is present.
  std::optional<double> text_only_weight_after_start;
  std::uint64_t master_seed = 0;
  std::uint32_t batch_size = 8;

  // Throws ConfigError.
  void validate() const;
};

// Selection probability of every stream at `step`, in schedule order.
std::vector<double> selection_probabilities(const MixSchedule& schedule,
                                            std::uint64_t step);

// Index of the stream chosen for `step`. Pure: seeded with
// stable_hash(master_seed, step).
std::size_t select_stream(const MixSchedule& schedule, std::uint64_t step);

struct BatchManifest {
  std::uint64_t step = 0;
  std::string stream;
  StreamKind kind = StreamKind::kSpeechText;
  std::vector<std::string> ids;
  friend bool operator==(const BatchManifest&, const BatchManifest&) = default;
};

// Stateful batch composer. Each stream's items are served in passes; every
// pass is a fresh seeded permutation of the stream's ids, and a cursor per
// stream marks progress. Replaying steps 0, 1, 2, ... from a new Mixer
// reproduces the same manifests.
class Mixer {
 public:
  // stream_items[i] holds the ids of schedule.streams[i].
  Mixer(MixSchedule schedule, std::vector<std::vector<std::string>> stream_items);

  // Throws ExhaustedStream if the selected stream has no items.
  BatchManifest next_batch(std::uint64_t step);

  const MixSchedule& schedule() const { return schedule_; }
  std::uint64_t cursor(std::size_t stream) const { return cursors_[stream]; }

 private:
  const std::vector<std::string>& pass_order(std::size_t stream,
                                             std::uint64_t pass);

  MixSchedule schedule_;
  std::vector<std::vector<std::string>> items_;
  std::vector<std::uint64_t> cursors_;
  std::vector<std::uint64_t> cached_pass_;
  std::vector<std::vector<std::string>> cached_order_;
};

struct MixStats {
  std::vector<std::uint64_t> counts;  // per stream, schedule order
  std::optional<std::uint64_t> first_text_only_step;
  std::uint64_t text_only_batches = 0;
};

// Stream selection over steps [0, steps).
MixStats simulate(const MixSchedule& schedule, std::uint64_t steps);

}  // namespace piiforge

#endif  // PIIFORGE_MIXER_H_
