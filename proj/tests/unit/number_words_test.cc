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

#include "oracles.h"
#include "piiforge/number_words.h"

using namespace piiforge;

TEST_CASE("cardinal words, hand-checked table") {
  const std::pair<unsigned, const char*> table[] = {
      {0, "zero"},
      {7, "seven"},
      {13, "thirteen"},
      {20, "twenty"},
      {21, "twenty-one"},
      {45, "forty-five"},
      {67, "sixty-seven"},
      {99, "ninety-nine"},
      {100, "one hundred"},
      {101, "one hundred one"},
      {110, "one hundred ten"},
      {999, "nine hundred ninety-nine"},
      {1000, "one thousand"},
      {1001, "one thousand one"},
      {2021, "two thousand twenty-one"},
      {9999, "nine thousand nine hundred ninety-nine"},
  };
  for (const auto& [n, w] : table) CHECK(cardinal_words(n) == w);
  CHECK(cardinal_words(1000000) == "one million");
  CHECK(cardinal_words(2000305) == "two million three hundred five");
}

TEST_CASE("cardinal words agree with the table-driven oracle on 0..9999") {
  for (unsigned n = 0; n <= 9999; ++n) {
    REQUIRE_MESSAGE(cardinal_words(n) == oracle::words(n), n);
  }
}

TEST_CASE("ordinal words") {
  const std::pair<unsigned, const char*> table[] = {
      {1, "first"},         {2, "second"},        {3, "third"},
      {4, "fourth"},        {5, "fifth"},         {8, "eighth"},
      {9, "ninth"},         {11, "eleventh"},     {12, "twelfth"},
      {20, "twentieth"},    {21, "twenty-first"}, {22, "twenty-second"},
      {23, "twenty-third"}, {30, "thirtieth"},    {31, "thirty-first"},
      {100, "one hundredth"}, {1000, "one thousandth"},
  };
  for (const auto& [n, w] : table) CHECK(ordinal_words(n) == w);
  for (unsigned n = 1; n <= 9999; ++n) {
    REQUIRE_MESSAGE(ordinal_words(n) == oracle::ordinal(n), n);
  }
}

TEST_CASE("years read as digit pairs") {
  CHECK(year_digit_pair_words(2021) == "twenty twenty-one");
  CHECK(year_digit_pair_words(1987) == "nineteen eighty-seven");
  CHECK(year_digit_pair_words(1905) == "nineteen oh five");
  CHECK(year_digit_pair_words(1900) == "nineteen hundred");
  CHECK(year_digit_pair_words(2000) == "two thousand");
  CHECK(year_digit_pair_words(2005) == "two thousand five");
  CHECK(year_digit_pair_words(2010) == "twenty ten");
  CHECK(year_digit_pair_words(987) == "nine hundred eighty-seven");
}

TEST_CASE("month names and digit words") {
  CHECK(month_name(1) == "January");
  CHECK(month_name(12) == "December");
  CHECK(month_name(0).empty());
  CHECK(digit_word('0') == "zero");
  CHECK(digit_word('9') == "nine");
  CHECK(digit_word('a').empty());
}
