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

#include <random>

#include "fixtures.h"
#include "piiforge/error.h"
#include "piiforge/markup.h"

using namespace piiforge;
using K = RedactionTagType::Kind;

namespace {

std::size_t offset_of_error(std::string_view raw) {
  try {
    parse_tagged(raw, "x");
  } catch (const MalformedTag& e) {
    return e.offset();
  }
  FAIL("expected MalformedTag for: " << raw);
  return 0;
}

}  // namespace

TEST_CASE("parse splits literals and tags") {
  const auto t = parse_tagged("seen by <MEDICAL_PROFESSIONAL_NAME> on <DATE>", "u1");
  CHECK(t.id() == "u1");
  REQUIRE(t.segments().size() == 4);
  CHECK(std::get<Literal>(t.segments()[0]).text == "seen by ");
  CHECK(std::get<Tag>(t.segments()[1]).type == RedactionTagType(K::kMedicalProfessionalName));
  CHECK(std::get<Literal>(t.segments()[2]).text == " on ");
  CHECK(std::get<Tag>(t.segments()[3]).type == RedactionTagType(K::kDate));
  CHECK_FALSE(std::get<Tag>(t.segments()[3]).length_hint.has_value());
}

TEST_CASE("parse without tags is one literal") {
  const auto t = parse_tagged("no tags here");
  REQUIRE(t.segments().size() == 1);
  CHECK(std::get<Literal>(t.segments()[0]).text == "no tags here");
  CHECK(parse_tagged("").segments().empty());
}

TEST_CASE("length hints") {
  const auto t = parse_tagged("id <ID:6> confirmed");
  REQUIRE(t.segments().size() == 3);
  const Tag& tag = std::get<Tag>(t.segments()[1]);
  CHECK(tag.type.kind() == K::kId);
  CHECK(tag.length_hint == 6u);
  CHECK(std::get<Literal>(t.segments()[2]).text == " confirmed");
}

TEST_CASE("unknown labels become OTHER") {
  const auto t = parse_tagged("<ADDRESS><PHONE_2>");
  REQUIRE(t.segments().size() == 2);
  const Tag& a = std::get<Tag>(t.segments()[0]);
  CHECK(a.type.kind() == K::kOther);
  CHECK(a.type.name() == "ADDRESS");
  CHECK_FALSE(a.type.is_substitutable());
  CHECK(std::get<Tag>(t.segments()[1]).type.name() == "PHONE_2");
}

TEST_CASE("escapes") {
  const auto t = parse_tagged(R"(a \< b \\ c)");
  REQUIRE(t.segments().size() == 1);
  CHECK(std::get<Literal>(t.segments()[0]).text == R"(a < b \ c)");
  CHECK(serialize(t) == R"(a \< b \\ c)");
  // '>' needs no escape.
  CHECK(parse_tagged("a > b").segments().size() == 1);
}

TEST_CASE("malformed markup reports an offset inside the token") {
  CHECK(offset_of_error("abc <DATE") == 4);
  CHECK(offset_of_error("x <> y") == 3);
  CHECK(offset_of_error("x <:3> y") == 3);
  CHECK(offset_of_error("x <ID:a> y") == 6);
  CHECK(offset_of_error("x <ID:3b> y") == 7);
  CHECK(offset_of_error("x <ID:> y") == 6);
  CHECK(offset_of_error("x <ID:0>") == 6);
  CHECK(offset_of_error("x <ID:07>") == 6);
  CHECK(offset_of_error("<date>") == 1);
  CHECK(offset_of_error("<DA-TE>") == 3);
  CHECK(offset_of_error("a < b") == 2);
  CHECK(offset_of_error("a < b > c") == 3);
  CHECK(offset_of_error("trailing \\") == 9);
  CHECK(offset_of_error("bad \\x escape") == 4);
  CHECK(offset_of_error("<ID:99999999999>") == 4);
}

TEST_CASE("MalformedTag carries the detail and offset") {
  try {
    parse_tagged("<ID:x>");
    FAIL("no throw");
  } catch (const MalformedTag& e) {
    CHECK(e.offset() == 4);
    CHECK(e.detail() == "non-numeric length hint");
  }
}

TEST_CASE("builder merges adjacent literals and rejects zero hints") {
  TaggedTranscript t("a");
  t.append_literal("x").append_literal("").append_literal("y");
  t.append_tag(RedactionTagType(K::kAge)).append_literal("z");
  REQUIRE(t.segments().size() == 3);
  CHECK(std::get<Literal>(t.segments()[0]).text == "xy");
  CHECK(t.tag_count() == 1);
  CHECK(t.literal_text() == "xyz");
  CHECK_THROWS_AS(t.append_tag(RedactionTagType(K::kId), 0u), ConfigError);
}

TEST_CASE("serialize examples") {
  TaggedTranscript t;
  t.append_literal("age ").append_tag(RedactionTagType(K::kAge));
  CHECK(serialize(t) == "age <AGE>");
  CHECK(serialize(parse_tagged("x")) == "x");
  TaggedTranscript hinted;
  hinted.append_tag(RedactionTagType(K::kId), 6u);
  CHECK(serialize(hinted) == "<ID:6>");
}

TEST_CASE("tag type labels") {
  CHECK(RedactionTagType::from_name("PATIENT_NAME")->kind() == K::kPatientName);
  CHECK(RedactionTagType::from_name("ID")->kind() == K::kId);
  CHECK_FALSE(RedactionTagType::from_name("lower").has_value());
  CHECK_FALSE(RedactionTagType::from_name("9LIVES").has_value());
  CHECK_FALSE(RedactionTagType::from_name("").has_value());
  CHECK_THROWS_AS(RedactionTagType::other("bad label"), ConfigError);
  CHECK_THROWS_AS(RedactionTagType(K::kOther), ConfigError);
  CHECK(RedactionTagType::other("DATE") == RedactionTagType(K::kDate));
  CHECK(RedactionTagType(K::kPatientName).is_name());
  CHECK_FALSE(RedactionTagType(K::kDate).is_name());
}

TEST_CASE("property: structure round-trips through serialization") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const TaggedTranscript t = fixtures::random_transcript(rng, "u" + std::to_string(i));
    const std::string raw = serialize(t);
    const TaggedTranscript back = parse_tagged(raw, t.id());
    REQUIRE(back == t);
    REQUIRE(serialize(back) == raw);
  }
}

TEST_CASE("property: literal text equals the input without tag tokens") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const TaggedTranscript t = fixtures::random_transcript(rng, "u");
    // Rebuild the expected literal from the raw string with an independent
    // scan: unescape, and drop <...> tokens.
    const std::string raw = serialize(t);
    std::string expected;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == '\\') {
        expected.push_back(raw[++k]);
      } else if (raw[k] == '<') {
        k = raw.find('>', k);
      } else {
        expected.push_back(raw[k]);
      }
    }
    REQUIRE(t.literal_text() == expected);
  }
}

TEST_CASE("tag census") {
  std::vector<TaggedTranscript> corpus = {parse_tagged("a <DATE>"),
                                          parse_tagged("<DATE> b")};
  const TagCensus c = tag_census(corpus);
  REQUIRE(c.size() == 1);
  CHECK(c.at(RedactionTagType(K::kDate)) == 2);
  CHECK(tag_census(std::vector<TaggedTranscript>{}).empty());
}

TEST_CASE("tag census totals match a brute-force recount") {
  std::mt19937_64 rng(99);
  std::vector<TaggedTranscript> corpus;
  std::map<std::string, std::uint64_t> recount;
  for (int i = 0; i < 10000; ++i) {
    corpus.push_back(fixtures::random_transcript(rng, std::to_string(i)));
    // Count tags by scanning the serialized text for unescaped '<'.
    const std::string raw = serialize(corpus.back());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == '\\') {
        ++k;
      } else if (raw[k] == '<') {
        const std::size_t close = raw.find('>', k);
        std::string label = raw.substr(k + 1, close - k - 1);
        label = label.substr(0, label.find(':'));
        ++recount[label];
        k = close;
      }
    }
  }
  const TagCensus census = tag_census(corpus);
  std::uint64_t total = 0;
  for (const auto& [type, n] : census) {
    CHECK(recount[std::string(type.name())] == n);
    total += n;
  }
  std::uint64_t expected_total = 0;
  for (const auto& [label, n] : recount) expected_total += n;
  CHECK(total == expected_total);
  CHECK(census.size() == recount.size());
}
