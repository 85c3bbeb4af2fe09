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

#ifndef PIIFORGE_HASHING_H_
#define PIIFORGE_HASHING_H_

#include <concepts>
#include <cstdint>
#include <string_view>

namespace piiforge {

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t mix64(std::uint64_t x);

// Order-sensitive hash over a sequence of integers and strings. Strings are
// reduced with FNV-1a and their length, integers are absorbed verbatim, and
// every absorption goes through the SplitMix64 finalizer. The result depends
// only on the values absorbed, never on platform or build.
class StableHasher {
 public:
  StableHasher& absorb(std::uint64_t value);
  StableHasher& absorb(std::string_view bytes);
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0x6a09e667f3bcc908ULL;
};

namespace internal {
inline void absorb_part(StableHasher& h, std::string_view s) { h.absorb(s); }
inline void absorb_part(StableHasher& h, const char* s) {
  h.absorb(std::string_view(s));
}
template <std::integral T>
void absorb_part(StableHasher& h, T v) {
  h.absorb(static_cast<std::uint64_t>(v));
}
}  // namespace internal

// stable_hash(master_seed, utterance_id, segment_index) and friends.
template <typename... Parts>
std::uint64_t stable_hash(const Parts&... parts) {
  StableHasher h;
  (internal::absorb_part(h, parts), ...);
  return h.value();
}

}  // namespace piiforge

#endif  // PIIFORGE_HASHING_H_
