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

#include "piiforge/markup.h"
#include "piiforge/surrogate.h"

namespace {

piiforge::SurrogatePolicy policy() {
  piiforge::SurrogatePolicy p;
  p.name_lexicon = {{"Scarlett Kathleen Ibarra", 1.0}, {"Oliver Barry Matthews", 2.0}};
  return p;
}

void BM_ParseTagged(benchmark::State& state) {
  const std::string raw =
      "patient <PATIENT_NAME> was admitted on <DATE> by <MEDICAL_PROFESSIONAL_NAME>, "
      "age <AGE>, record <ID:7>";
  for (auto _ : state) benchmark::DoNotOptimize(piiforge::parse_tagged(raw));
}
BENCHMARK(BM_ParseTagged);

void BM_Substitute(benchmark::State& state) {
  const piiforge::Surrogator s(policy());
  const auto t = piiforge::parse_tagged(
      "patient <PATIENT_NAME> was admitted on <DATE> by <MEDICAL_PROFESSIONAL_NAME>, "
      "age <AGE>, record <ID:7>",
      "u1");
  for (auto _ : state) benchmark::DoNotOptimize(s.substitute(t));
}
BENCHMARK(BM_Substitute);

}  // namespace
