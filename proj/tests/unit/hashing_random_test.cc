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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "piiforge/error.h"
#include "piiforge/hashing.h"
#include "piiforge/random.h"

using namespace piiforge;

TEST_CASE("fnv1a64 matches the published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("mix64 is the SplitMix64 output function") {
  // First SplitMix64 outputs for state 0.
  CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(mix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("stable_hash is order and boundary sensitive") {
  CHECK(stable_hash(1u, "a", 2u) == stable_hash(1u, "a", 2u));
  CHECK(stable_hash(1u, "a", 2u) != stable_hash(1u, "a", 3u));
  CHECK(stable_hash(1u, 2u) != stable_hash(2u, 1u));
  CHECK(stable_hash("ab", "c") != stable_hash("a", "bc"));
  CHECK(stable_hash(std::string("utt"), 0) == stable_hash("utt", 0u));
}

TEST_CASE("Rng draws are reproducible from the seed") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    (void)c;
  }
  Rng d(42), e(43);
  CHECK(d.next() != e.next());
}

TEST_CASE("below is uniform and in range") {
  Rng rng(1);
  std::array<int, 7> counts{};
  const int n = 700000;
  for (int i = 0; i < n; ++i) {
    const auto v = rng.below(7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  // Chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile.
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - n / 7.0) * (c - n / 7.0) / (n / 7.0);
  CHECK(chi2 < 22.46);
  CHECK(rng.below(1) == 0);
}

TEST_CASE("uniform01 stays in [0, 1)") {
  Rng rng(5);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("normal and skew-normal moments") {
  Rng rng(9);
  const int n = 400000;
  double s = 0, s2 = 0, k = 0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  CHECK(std::fabs(s / n) < 0.01);
  CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));

  // Skew-normal mean is loc + scale * delta * sqrt(2/pi).
  const double shape = 4.0;
  const double delta = shape / std::sqrt(1 + shape * shape);
  for (int i = 0; i < n; ++i) k += rng.skew_normal(10.0, 5.0, shape);
  CHECK(k / n == doctest::Approx(10.0 + 5.0 * delta * std::sqrt(2.0 / std::numbers::pi))
                     .epsilon(0.002));
}

TEST_CASE("WeightedIndex follows the weights") {
  const std::array<double, 3> w = {1.0, 2.0, 7.0};
  WeightedIndex index(w);
  Rng rng(3);
  std::array<int, 3> counts{};
  const int n = 200000;
  for (int i = 0; i < n; ++i) ++counts[index.sample(rng)];
  CHECK(counts[0] / double(n) == doctest::Approx(0.1).epsilon(0.03));
  CHECK(counts[1] / double(n) == doctest::Approx(0.2).epsilon(0.03));
  CHECK(counts[2] / double(n) == doctest::Approx(0.7).epsilon(0.01));

  const std::array<double, 2> bad = {1.0, 0.0};
  CHECK_THROWS_AS(WeightedIndex{bad}, ConfigError);
  const std::array<double, 1> inf = {INFINITY};
  CHECK_THROWS_AS(WeightedIndex{inf}, ConfigError);
}

TEST_CASE("shuffle yields a permutation") {
  std::array<int, 20> v{};
  for (int i = 0; i < 20; ++i) v[i] = i;
  Rng rng(11);
  rng.shuffle(std::span<int>(v));
  std::set<int> seen(v.begin(), v.end());
  CHECK(seen.size() == 20);
}
