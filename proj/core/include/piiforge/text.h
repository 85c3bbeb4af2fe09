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

#ifndef PIIFORGE_TEXT_H_
#define PIIFORGE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace piiforge {

// True when `bytes` is well-formed UTF-8 (no overlongs, no surrogates).
bool is_valid_utf8(std::string_view bytes);

// Decodes UTF-8 into code points. Invalid bytes decode to U+FFFD one byte at
// a time, so the call never fails.
std::u32string decode_utf8(std::string_view bytes);

void append_utf8(std::u32string_view code_points, std::string& out);
std::string encode_utf8(std::u32string_view code_points);

// Splits into one string per code point.
std::vector<std::string> split_code_points(std::string_view bytes);

}  // namespace piiforge

#endif  // PIIFORGE_TEXT_H_
