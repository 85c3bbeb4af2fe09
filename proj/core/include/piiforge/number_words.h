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

#ifndef PIIFORGE_NUMBER_WORDS_H_
#define PIIFORGE_NUMBER_WORDS_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace piiforge {

// American English number words, no "and", hyphenated tens:
// 105 -> "one hundred five", 67 -> "sixty-seven".
std::string cardinal_words(std::uint64_t n);

// 1 -> "first", 5 -> "fifth", 21 -> "twenty-first", 100 -> "one hundredth".
std::string ordinal_words(std::uint64_t n);

// Year read as two digit pairs, the way dates are dictated:
// 2021 -> "twenty twenty-one", 1905 -> "nineteen oh five",
// 1900 -> "nineteen hundred", 2000 -> "two thousand",
// 2005 -> "two thousand five". Years outside 1000..9999 use cardinal words.
std::string year_digit_pair_words(int year);

// "January".."December"; month is 1-based.
std::string_view month_name(unsigned month);

// "zero".."nine" for an ASCII digit.
std::string_view digit_word(char digit);

}  // namespace piiforge

#endif  // PIIFORGE_NUMBER_WORDS_H_
