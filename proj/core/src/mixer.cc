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

#include "piiforge/mixer.h"

#include <cmath>
#include <set>

#include "piiforge/error.h"
#include "piiforge/hashing.h"
#include "piiforge/random.h"

namespace piiforge {
namespace {

constexpr std::string_view kShuffleSalt = "pass";

}  // namespace

std::string_view stream_kind_name(StreamKind kind) {
  return kind == StreamKind::kSpeechText ? "speech_text" : "text_only";
}

std::optional<StreamKind> parse_stream_kind(std::string_view name) {
  if (name == "speech_text") return StreamKind::kSpeechText;
  if (name == "text_only") return StreamKind::kTextOnly;
  return std::nullopt;
}

void MixSchedule::validate() const {
  bool has_speech = false;
  bool has_text = false;
  std::set<std::string_view> names;
  for (const DatasetStream& s : streams) {
    if (s.name.empty()) throw ConfigError("stream name is empty");
    if (!names.insert(s.name).second) {
      throw ConfigError("duplicate stream name '" + s.name + "'");
    }
    if (!std::isfinite(s.weight) || s.weight <= 0.0) {
      throw ConfigError("stream '" + s.name + "' needs a positive weight");
    }
    has_speech |= s.kind == StreamKind::kSpeechText;
    has_text |= s.kind == StreamKind::kTextOnly;
  }
  if (!has_speech) {
    throw ConfigError("schedule needs at least one speech_text stream");
  }
  if (has_text) {
    if (!text_only_weight_after_start) {
      throw ConfigError(
          "text_only_weight_after_start is required with text_only streams");
    }
    const double w = *text_only_weight_after_start;
    if (!std::isfinite(w) || w <= 0.0) {
      throw ConfigError("text_only_weight_after_start must be positive");
    }
  }
  if (batch_size == 0) throw ConfigError("batch size must be >= 1");
}

std::vector<double> selection_probabilities(const MixSchedule& schedule,
                                            std::uint64_t step) {
  const bool text_eligible = step >= schedule.text_injection_start_step;
  double speech_total = 0.0;
  double text_total = 0.0;
  for (const DatasetStream& s : schedule.streams) {
    (s.kind == StreamKind::kSpeechText ? speech_total : text_total) += s.weight;
  }
  const double text_group =
      text_eligible && text_total > 0.0
          ? schedule.text_only_weight_after_start.value_or(0.0)
          : 0.0;
  const double norm = 1.0 + text_group;
  std::vector<double> p;
  p.reserve(schedule.streams.size());
  for (const DatasetStream& s : schedule.streams) {
    if (s.kind == StreamKind::kSpeechText) {
      p.push_back(s.weight / speech_total / norm);
    } else {
      p.push_back(text_group == 0.0 ? 0.0 : text_group * s.weight / text_total / norm);
    }
  }
  return p;
}

std::size_t select_stream(const MixSchedule& schedule, std::uint64_t step) {
  const std::vector<double> p = selection_probabilities(schedule, step);
  Rng rng(stable_hash(schedule.master_seed, step));
  const double target = rng.uniform01();
  double running = 0.0;
  std::size_t last_eligible = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    running += p[i];
    last_eligible = i;
    if (target < running) return i;
  }
  // Rounding left target above the final cumulative sum.
  return last_eligible;
}

Mixer::Mixer(MixSchedule schedule,
             std::vector<std::vector<std::string>> stream_items)
    : schedule_(std::move(schedule)), items_(std::move(stream_items)) {
  schedule_.validate();
  if (items_.size() != schedule_.streams.size()) {
    throw ConfigError("one item list per stream is required");
  }
  cursors_.assign(items_.size(), 0);
  cached_pass_.assign(items_.size(), UINT64_MAX);
  cached_order_.resize(items_.size());
}

const std::vector<std::string>& Mixer::pass_order(std::size_t stream,
                                                  std::uint64_t pass) {
  if (cached_pass_[stream] != pass) {
    std::vector<std::string> order = items_[stream];
    Rng rng(stable_hash(schedule_.master_seed, kShuffleSalt,
                        schedule_.streams[stream].name, pass));
    rng.shuffle(std::span<std::string>(order));
    cached_order_[stream] = std::move(order);
    cached_pass_[stream] = pass;
  }
  return cached_order_[stream];
}

BatchManifest Mixer::next_batch(std::uint64_t step) {
  const std::size_t s = select_stream(schedule_, step);
  const DatasetStream& stream = schedule_.streams[s];
  const std::uint64_t n = items_[s].size();
  if (n == 0) {
    throw ExhaustedStream("stream '" + stream.name + "' has no items");
  }
  BatchManifest out;
  out.step = step;
  out.stream = stream.name;
  out.kind = stream.kind;
  out.ids.reserve(schedule_.batch_size);
  for (std::uint32_t k = 0; k < schedule_.batch_size; ++k) {
    const std::uint64_t at = cursors_[s]++;
    out.ids.push_back(pass_order(s, at / n)[at % n]);
  }
  return out;
}

MixStats simulate(const MixSchedule& schedule, std::uint64_t steps) {
  schedule.validate();
  MixStats stats;
  stats.counts.assign(schedule.streams.size(), 0);
  for (std::uint64_t step = 0; step < steps; ++step) {
    const std::size_t s = select_stream(schedule, step);
    ++stats.counts[s];
    if (schedule.streams[s].kind == StreamKind::kTextOnly) {
      ++stats.text_only_batches;
      if (!stats.first_text_only_step) stats.first_text_only_step = step;
    }
  }
  return stats;
}

}  // namespace piiforge
