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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "piiforge/metrics.h"

namespace {

std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t n) {
  static const char* vocab[] = {"the", "patient", "was", "admitted", "on", "may", "fifth"};
  std::vector<std::string> out(n);
  for (auto& w : out) w = vocab[rng() % 7];
  return out;
}

void BM_AlignWords(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ref = random_words(rng, n);
  const auto hyp = random_words(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(piiforge::align(ref, hyp));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AlignWords)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_CharErrors(benchmark::State& state) {
  const std::string ref = "Scarlett Kathleen Ibarra was admitted to the floors on May fifth";
  const std::string hyp = "Scarlet Caffeine Ebara was admitted to the floors on May fifth";
  const auto profile = piiforge::NormalizationProfile::char_level();
  for (auto _ : state) benchmark::DoNotOptimize(piiforge::char_errors(ref, hyp, profile));
}
BENCHMARK(BM_CharErrors);

}  // namespace
