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

// Deterministic test corpora.

#ifndef PIIFORGE_TESTS_FIXTURES_H_
#define PIIFORGE_TESTS_FIXTURES_H_

#include <array>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "piiforge/markup.h"
#include "piiforge/surrogate.h"

namespace fixtures {

inline std::filesystem::path data_dir() { return PIIFORGE_DATA_DIR; }

inline const std::vector<piiforge::RedactionTagType>& all_tag_types() {
  using K = piiforge::RedactionTagType::Kind;
  static const std::vector<piiforge::RedactionTagType> types = {
      piiforge::RedactionTagType(K::kPatientName),
      piiforge::RedactionTagType(K::kMedicalProfessionalName),
      piiforge::RedactionTagType(K::kDate),
      piiforge::RedactionTagType(K::kAge),
      piiforge::RedactionTagType(K::kId),
      piiforge::RedactionTagType::other("ADDRESS"),
      piiforge::RedactionTagType::other("PHONE_NUMBER"),
      piiforge::RedactionTagType::other("HOSPITAL_2"),
  };
  return types;
}

// Literal fragments, including bytes that the markup grammar must escape
// and multi-byte UTF-8.
inline const std::vector<std::string>& literal_pieces() {
  static const std::vector<std::string> pieces = {
      "patient ", " was admitted ", " on ", ", seen by ", " age ",
      " record number ", "follow up in two weeks. ", " a < b ", "x\\y",
      " caf\xc3\xa9 ", " \xe2\x80\x94 ", "> ", " dose 5mg/kg ", "\t", "\n"};
  return pieces;
}

// Random tagged transcript. `substitutable_only` limits tags to the five
// built-in kinds.
inline piiforge::TaggedTranscript random_transcript(std::mt19937_64& rng,
                                                    std::string id,
                                                    bool substitutable_only = false) {
  piiforge::TaggedTranscript t(std::move(id));
  const auto& types = all_tag_types();
  const auto& pieces = literal_pieces();
  const int n = static_cast<int>(rng() % 8);
  for (int k = 0; k < n; ++k) {
    if (rng() % 2 == 0) {
      t.append_literal(pieces[rng() % pieces.size()]);
    } else {
      const std::size_t limit = substitutable_only ? 5 : types.size();
      piiforge::Tag tag{types[rng() % limit], std::nullopt};
      if (rng() % 3 == 0) tag.length_hint = 1 + static_cast<std::uint32_t>(rng() % 12);
      t.append_tag(tag);
    }
  }
  return t;
}

// 550 distinct clinical-style name templates: 25 openings x 22 endings.
inline std::vector<piiforge::TaggedTranscript> name_templates() {
  static const std::array<const char*, 25> openings = {
      "patient <PATIENT_NAME>", "<PATIENT_NAME>", "seen today was <PATIENT_NAME>",
      "Mr. <PATIENT_NAME>", "Ms. <PATIENT_NAME>", "referred by <MEDICAL_PROFESSIONAL_NAME>, <PATIENT_NAME>",
      "Dr. <MEDICAL_PROFESSIONAL_NAME> saw <PATIENT_NAME>", "our patient, <PATIENT_NAME>,",
      "<PATIENT_NAME>, accompanied by <PATIENT_NAME>,", "the patient <PATIENT_NAME>",
      "per <MEDICAL_PROFESSIONAL_NAME>, <PATIENT_NAME>", "I met with <PATIENT_NAME> and",
      "Mrs. <PATIENT_NAME>", "discussed with <MEDICAL_PROFESSIONAL_NAME>; <PATIENT_NAME>",
      "nurse <MEDICAL_PROFESSIONAL_NAME> reports <PATIENT_NAME>", "<PATIENT_NAME> (<AGE>)",
      "on <DATE> <PATIENT_NAME>", "attending <MEDICAL_PROFESSIONAL_NAME> notes <PATIENT_NAME>",
      "<PATIENT_NAME>'s daughter says <PATIENT_NAME>", "this is <MEDICAL_PROFESSIONAL_NAME> dictating, <PATIENT_NAME>",
      "consult for <PATIENT_NAME>,", "<MEDICAL_PROFESSIONAL_NAME> and <MEDICAL_PROFESSIONAL_NAME> agree <PATIENT_NAME>",
      "re: <PATIENT_NAME> -", "history of <PATIENT_NAME>:", "Miss <PATIENT_NAME>"};
  static const std::array<const char*, 22> endings = {
      " was admitted to the floors", " is adamant that the patient had no past surgeries",
      " denies chest pain", " will follow up in two weeks", " tolerated the procedure well",
      " reports improved sleep", " is allergic to penicillin", " was discharged home",
      " needs a repeat CBC", " has a history of hypertension", " declined the flu shot",
      " is scheduled for an MRI", " presented with shortness of breath", " is doing well",
      " was counseled on diet", " asked about physical therapy", " arrived by ambulance",
      " agreed with the plan", " was seen in clinic", " has no known drug allergies",
      " started metformin", " should return if symptoms worsen"};
  std::vector<piiforge::TaggedTranscript> out;
  out.reserve(openings.size() * endings.size());
  for (std::size_t i = 0; i < openings.size(); ++i) {
    for (std::size_t j = 0; j < endings.size(); ++j) {
      std::string id = "tpl-" + std::to_string(i * endings.size() + j);
      out.push_back(piiforge::parse_tagged(std::string(openings[i]) + endings[j], id));
    }
  }
  return out;
}

inline piiforge::SurrogatePolicy sample_policy(std::uint64_t seed = 7) {
  piiforge::SurrogatePolicy p;
  p.master_seed = seed;
  p.name_lexicon = {{"Scarlett Kathleen Ibarra", 1.0},
                    {"Oliver Barry Matthews", 1.0},
                    {"James Smith", 4.0},
                    {"Mary O'Neil", 2.0},
                    {"Anne-Marie Lopez", 1.5},
                    {"Robert Williams", 3.0}};
  return p;
}

}  // namespace fixtures

#endif  // PIIFORGE_TESTS_FIXTURES_H_
