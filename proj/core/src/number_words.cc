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

#include "piiforge/number_words.h"

#include <array>

namespace piiforge {
namespace {

constexpr std::array<std::string_view, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<std::string_view, 10> kTens = {
    "",      "",      "twenty",  "thirty", "forty",
    "fifty", "sixty", "seventy", "eighty", "ninety"};

struct Scale {
  std::uint64_t value;
  std::string_view word;
};

constexpr std::array<Scale, 6> kScales = {{
    {1000000000000000000ULL, "quintillion"},
    {1000000000000000ULL, "quadrillion"},
    {1000000000000ULL, "trillion"},
    {1000000000ULL, "billion"},
    {1000000ULL, "million"},
    {1000ULL, "thousand"},
}};

void append_word(std::string& out, std::string_view word) {
  if (!out.empty()) out.push_back(' ');
  out.append(word);
}

// 0 < n < 1000.
void append_below_thousand(std::string& out, unsigned n) {
  if (n >= 100) {
    append_word(out, kOnes[n / 100]);
    append_word(out, "hundred");
    n %= 100;
  }
  if (n == 0) return;
  if (n < 20) {
    append_word(out, kOnes[n]);
    return;
  }
  std::string tens(kTens[n / 10]);
  if (n % 10 != 0) {
    tens.push_back('-');
    tens.append(kOnes[n % 10]);
  }
  append_word(out, tens);
}

// Converts the final word of a cardinal to its ordinal form.
std::string ordinal_of_word(std::string_view word) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 12>
      kIrregular = {{{"one", "first"},
                     {"two", "second"},
                     {"three", "third"},
                     {"five", "fifth"},
                     {"eight", "eighth"},
                     {"nine", "ninth"},
                     {"twelve", "twelfth"},
                     {"twenty", "twentieth"},
                     {"thirty", "thirtieth"},
                     {"forty", "fortieth"},
                     {"fifty", "fiftieth"},
                     {"sixty", "sixtieth"}}};
  for (const auto& [cardinal, ordinal] : kIrregular) {
    if (word == cardinal) return std::string(ordinal);
  }
  if (word == "seventy") return "seventieth";
  if (word == "eighty") return "eightieth";
  if (word == "ninety") return "ninetieth";
  return std::string(word) + "th";
}

}  // namespace

std::string cardinal_words(std::uint64_t n) {
  if (n == 0) return std::string(kOnes[0]);
  std::string out;
  for (const Scale& scale : kScales) {
    if (n >= scale.value) {
      append_below_thousand(out, static_cast<unsigned>(n / scale.value));
      append_word(out, scale.word);
      n %= scale.value;
    }
  }
  if (n > 0) append_below_thousand(out, static_cast<unsigned>(n));
  return out;
}

std::string ordinal_words(std::uint64_t n) {
  std::string words = cardinal_words(n);
  // The last unit is whatever follows the final space or hyphen.
  const std::size_t cut = words.find_last_of(" -");
  const std::size_t start = cut == std::string::npos ? 0 : cut + 1;
  return words.substr(0, start) + ordinal_of_word(words.substr(start));
}

std::string year_digit_pair_words(int year) {
  if (year < 1000 || year > 9999) {
    return cardinal_words(static_cast<std::uint64_t>(year < 0 ? 0 : year));
  }
  const int high = year / 100;
  const int low = year % 100;
  if (low == 0) {
    if (high % 10 == 0) return cardinal_words(static_cast<std::uint64_t>(year));
    return cardinal_words(static_cast<std::uint64_t>(high)) + " hundred";
  }
  if (high % 10 == 0 && low < 10) {
    // 2005 -> "two thousand five"
    return cardinal_words(static_cast<std::uint64_t>(year));
  }
  std::string out = cardinal_words(static_cast<std::uint64_t>(high));
  out += low < 10 ? " oh " : " ";
  out += cardinal_words(static_cast<std::uint64_t>(low));
  return out;
}

std::string_view month_name(unsigned month) {
  static constexpr std::array<std::string_view, 12> kMonths = {
      "January", "February", "March",     "April",   "May",      "June",
      "July",    "August",   "September", "October", "November", "December"};
  if (month < 1 || month > 12) return {};
  return kMonths[month - 1];
}

std::string_view digit_word(char digit) {
  if (digit < '0' || digit > '9') return {};
  return kOnes[static_cast<std::size_t>(digit - '0')];
}

}  // namespace piiforge
