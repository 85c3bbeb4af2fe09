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

#include <cstdint>

#include "piiforge/sequence.h"

namespace {

void BM_CorpusItem(benchmark::State& state) {
  piiforge::SequenceSpec spec;
  spec.alphabet = std::string(piiforge::kAlphanumericAlphabet);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(piiforge::corpus_item(spec, i++));
}
BENCHMARK(BM_CorpusItem);

void BM_SampleLength(benchmark::State& state) {
  const piiforge::SequenceSpec spec;
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(piiforge::sample_length(spec, i++));
}
BENCHMARK(BM_SampleLength);

}  // namespace
