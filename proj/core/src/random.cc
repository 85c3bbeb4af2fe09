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

#include "piiforge/random.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "piiforge/error.h"

namespace piiforge {

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t n) {
  // Reject the low part of the range so that r % n is exactly uniform.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

double Rng::normal() {
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::skew_normal(double location, double scale, double shape) {
  // Azzalini's construction: with delta = a / sqrt(1 + a^2) and independent
  // standard normals u0, v, the variable delta*|u0| + sqrt(1-delta^2)*v is
  // standard skew-normal with shape a.
  const double delta = shape / std::sqrt(1.0 + shape * shape);
  const double u0 = normal();
  const double v = normal();
  const double z = delta * std::fabs(u0) + std::sqrt(1.0 - delta * delta) * v;
  return location + scale * z;
}

WeightedIndex::WeightedIndex(std::span<const double> weights) {
  cumulative_.reserve(weights.size());
  double running = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w <= 0.0) {
      throw ConfigError("weights must be finite and positive");
    }
    running += w;
    cumulative_.push_back(running);
  }
}

std::size_t WeightedIndex::sample(Rng& rng) const {
  const double target = rng.uniform01() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) --it;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

}  // namespace piiforge
