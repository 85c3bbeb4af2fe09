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

#include "piiforge/config.h"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "piiforge/error.h"

namespace piiforge {
namespace {

namespace fs = std::filesystem;

YAML::Node parse_document(std::string_view document) {
  try {
    YAML::Node root = YAML::Load(std::string(document));
    if (root.IsNull()) return YAML::Node(YAML::NodeType::Map);
    if (!root.IsMap()) throw ConfigError("config document must be a mapping");
    return root;
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("cannot parse config: ") + e.what());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void expect_keys(const YAML::Node& node, std::string_view where,
                 std::initializer_list<std::string_view> allowed) {
  if (!node.IsMap()) {
    throw ConfigError(std::string(where) + " must be a mapping");
  }
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    bool ok = false;
    for (std::string_view a : allowed) ok |= key == a;
    if (!ok) {
      throw ConfigError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

template <typename T>
T scalar(const YAML::Node& node, std::string_view what) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError("bad value for " + std::string(what));
  }
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::chrono::year_month_day parse_date(const std::string& text,
                                       std::string_view what) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  char dash1 = 0;
  char dash2 = 0;
  std::istringstream in(text);
  in >> y >> dash1 >> m >> dash2 >> d;
  const std::chrono::year_month_day out{std::chrono::year{y},
                                        std::chrono::month{m},
                                        std::chrono::day{d}};
  if (in.fail() || dash1 != '-' || dash2 != '-' || !in.eof() || !out.ok()) {
    throw ConfigError("bad date '" + text + "' for " + std::string(what) +
                      " (want YYYY-MM-DD)");
  }
  return out;
}

}  // namespace

std::vector<WeightedName> load_lexicon(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open lexicon " + path.string());
  std::vector<WeightedName> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.rfind('\t');
    WeightedName n;
    if (tab == std::string::npos) {
      n.name = line;
    } else {
      n.name = line.substr(0, tab);
      const std::string w = line.substr(tab + 1);
      const auto res = std::from_chars(w.data(), w.data() + w.size(), n.weight);
      if (res.ec != std::errc() || res.ptr != w.data() + w.size()) {
        throw ConfigError(path.string() + ":" + std::to_string(line_number) +
                          ": bad weight '" + w + "'");
      }
    }
    out.push_back(std::move(n));
  }
  return out;
}

std::string named_alphabet(std::string_view name) {
  if (name == "digits") return std::string(kDigitAlphabet);
  if (name == "alphanumeric") return std::string(kAlphanumericAlphabet);
  throw ConfigError("unknown alphabet '" + std::string(name) +
                    "' (want digits or alphanumeric)");
}

SurrogatePolicy parse_policy(std::string_view document, const fs::path& base_dir) {
  const YAML::Node root = parse_document(document);
  expect_keys(root, "policy", {"seed", "names", "dates", "ages", "ids"});
  SurrogatePolicy p;
  if (root["seed"]) p.master_seed = scalar<std::uint64_t>(root["seed"], "seed");

  if (const YAML::Node names = root["names"]) {
    expect_keys(names, "names", {"lexicon", "entries"});
    if (names["lexicon"]) {
      auto lex = load_lexicon(
          resolve(base_dir, scalar<std::string>(names["lexicon"], "names.lexicon")));
      p.name_lexicon.insert(p.name_lexicon.end(), lex.begin(), lex.end());
    }
    if (const YAML::Node entries = names["entries"]) {
      for (const YAML::Node& e : entries) {
        expect_keys(e, "names.entries", {"name", "weight"});
        WeightedName n;
        n.name = scalar<std::string>(e["name"], "names.entries.name");
        if (e["weight"]) n.weight = scalar<double>(e["weight"], "names.entries.weight");
        p.name_lexicon.push_back(std::move(n));
      }
    }
  }

  if (const YAML::Node dates = root["dates"]) {
    expect_keys(dates, "dates", {"patterns", "first", "last"});
    if (dates["patterns"]) {
      p.date_formats =
          scalar<std::vector<std::string>>(dates["patterns"], "dates.patterns");
    }
    if (dates["first"]) {
      p.date_range.first =
          parse_date(scalar<std::string>(dates["first"], "dates.first"), "dates.first");
    }
    if (dates["last"]) {
      p.date_range.last =
          parse_date(scalar<std::string>(dates["last"], "dates.last"), "dates.last");
    }
  }

  if (const YAML::Node ages = root["ages"]) {
    expect_keys(ages, "ages", {"low", "high"});
    if (ages["low"]) p.age_range.low = scalar<int>(ages["low"], "ages.low");
    if (ages["high"]) p.age_range.high = scalar<int>(ages["high"], "ages.high");
  }

  if (const YAML::Node ids = root["ids"]) {
    expect_keys(ids, "ids", {"alphabet", "fallback_lengths"});
    if (ids["alphabet"]) {
      p.digit_alphabet = scalar<std::string>(ids["alphabet"], "ids.alphabet");
    }
    if (const YAML::Node fl = ids["fallback_lengths"]) {
      p.id_length_fallback.clear();
      if (fl.IsMap()) {
        expect_keys(fl, "ids.fallback_lengths", {"low", "high"});
        const int lo = scalar<int>(fl["low"], "ids.fallback_lengths.low");
        const int hi = scalar<int>(fl["high"], "ids.fallback_lengths.high");
        if (lo < 1 || lo > hi) {
          throw ConfigError("ids.fallback_lengths needs 1 <= low <= high");
        }
        for (int len = lo; len <= hi; ++len) {
          p.id_length_fallback.push_back({static_cast<std::uint32_t>(len), 1.0});
        }
      } else {
        for (const YAML::Node& e : fl) {
          expect_keys(e, "ids.fallback_lengths", {"length", "weight"});
          WeightedLength l;
          l.length = scalar<std::uint32_t>(e["length"], "fallback length");
          if (e["weight"]) l.weight = scalar<double>(e["weight"], "fallback weight");
          p.id_length_fallback.push_back(l);
        }
      }
    }
  }

  p.validate();
  return p;
}

SurrogatePolicy load_policy(const fs::path& path) {
  return parse_policy(read_file(path), path.parent_path());
}

SequenceSpec parse_sequence_spec(std::string_view document) {
  const YAML::Node root = parse_document(document);
  expect_keys(root, "sequence spec",
              {"seed", "alphabet", "count", "length", "repeats"});
  SequenceSpec s;
  if (root["seed"]) s.master_seed = scalar<std::uint64_t>(root["seed"], "seed");
  if (root["count"]) s.count = scalar<std::uint64_t>(root["count"], "count");
  if (const YAML::Node a = root["alphabet"]) {
    if (a.IsMap()) {
      expect_keys(a, "alphabet", {"chars"});
      s.alphabet = scalar<std::string>(a["chars"], "alphabet.chars");
    } else {
      s.alphabet = named_alphabet(scalar<std::string>(a, "alphabet"));
    }
  }
  if (const YAML::Node len = root["length"]) {
    expect_keys(len, "length", {"location", "scale", "shape", "offset"});
    if (len["location"]) s.length_location = scalar<double>(len["location"], "length.location");
    if (len["scale"]) s.length_scale = scalar<double>(len["scale"], "length.scale");
    if (len["shape"]) s.length_shape = scalar<double>(len["shape"], "length.shape");
    if (len["offset"]) s.length_offset = scalar<int>(len["offset"], "length.offset");
  }
  if (const YAML::Node rep = root["repeats"]) {
    expect_keys(rep, "repeats", {"fraction", "lengths"});
    if (rep["fraction"]) s.repeat_fraction = scalar<double>(rep["fraction"], "repeats.fraction");
    if (rep["lengths"]) s.repeat_lengths = scalar<std::vector<int>>(rep["lengths"], "repeats.lengths");
  }
  s.validate();
  return s;
}

SequenceSpec load_sequence_spec(const fs::path& path) {
  return parse_sequence_spec(read_file(path));
}

MixSchedule parse_schedule(std::string_view document, const fs::path& base_dir) {
  const YAML::Node root = parse_document(document);
  expect_keys(root, "schedule",
              {"seed", "text_injection_start_step", "text_only_weight_after_start",
               "batch_size", "streams"});
  MixSchedule m;
  if (root["seed"]) m.master_seed = scalar<std::uint64_t>(root["seed"], "seed");
  if (root["text_injection_start_step"]) {
    m.text_injection_start_step = scalar<std::uint64_t>(
        root["text_injection_start_step"], "text_injection_start_step");
  }
  if (root["text_only_weight_after_start"]) {
    m.text_only_weight_after_start = scalar<double>(
        root["text_only_weight_after_start"], "text_only_weight_after_start");
  }
  if (root["batch_size"]) {
    m.batch_size = scalar<std::uint32_t>(root["batch_size"], "batch_size");
  }
  if (const YAML::Node streams = root["streams"]) {
    for (const YAML::Node& s : streams) {
      expect_keys(s, "streams", {"name", "kind", "weight", "manifest"});
      DatasetStream d;
      d.name = scalar<std::string>(s["name"], "stream name");
      const std::string kind = scalar<std::string>(s["kind"], "stream kind");
      const auto k = parse_stream_kind(kind);
      if (!k) throw ConfigError("unknown stream kind '" + kind + "'");
      d.kind = *k;
      d.weight = scalar<double>(s["weight"], "stream weight");
      if (s["manifest"]) {
        d.manifest_path =
            resolve(base_dir, scalar<std::string>(s["manifest"], "stream manifest"))
                .string();
      }
      m.streams.push_back(std::move(d));
    }
  }
  m.validate();
  return m;
}

MixSchedule load_schedule(const fs::path& path) {
  return parse_schedule(read_file(path), path.parent_path());
}

}  // namespace piiforge
