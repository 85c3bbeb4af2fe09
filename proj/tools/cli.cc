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

#include "cli.h"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "piiforge/config.h"
#include "piiforge/error.h"
#include "piiforge/markup.h"
#include "piiforge/metrics.h"
#include "piiforge/mixer.h"
#include "piiforge/parallel.h"
#include "piiforge/records.h"
#include "piiforge/sequence.h"
#include "piiforge/surrogate.h"

namespace piiforge::cli {
namespace {

constexpr std::size_t kChunkLines = 4096;

std::shared_ptr<spdlog::logger> logger() {
  static std::shared_ptr<spdlog::logger> log = [] {
    auto l = spdlog::stderr_logger_mt("pii-forge");
    l->set_pattern("pii-forge: %l: %v");
    l->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("PII_FORGE_LOG")) {
      l->set_level(spdlog::level::from_str(env));
    }
    return l;
  }();
  return log;
}

// Destination for records: the --out file when given, else the caller's
// stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw FormatError(0, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }
  void line(std::string_view s) { stream_->write(s.data(), static_cast<std::streamsize>(s.size())).put('\n'); }
  void finish() {
    stream_->flush();
    if (!*stream_) throw FormatError(0, "write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open " + path);
  return in;
}

struct Line {
  std::string text;
  std::size_t number = 0;
};

// Reads JSONL in fixed-size chunks and hands each chunk to `fn`, so memory
// stays bounded regardless of corpus size.
template <typename Fn>
void for_each_chunk(std::istream& in, std::size_t chunk, Fn&& fn) {
  JsonlReader reader(in);
  std::vector<Line> lines;
  std::string text;
  while (reader.next(text)) {
    lines.push_back({std::move(text), reader.line_number()});
    if (lines.size() == chunk) {
      fn(lines);
      lines.clear();
    }
  }
  if (!lines.empty()) fn(lines);
}

// Either an output record or a diagnostic.
struct RecordResult {
  std::string record;
  std::string diagnostic;
};

RecordResult diagnose(const std::string& id, std::size_t offset,
                      const std::string& message) {
  return {{}, diagnostic_to_json(id, offset, message)};
}

struct CommonFlags {
  std::string in;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_in) {
  if (with_in) cmd->add_option("--in", f.in, "Input JSONL corpus")->required();
  cmd->add_option("--out", f.out, "Output path (default: stdout)");
  cmd->add_option("--seed", f.seed, "Master seed (64-bit); overrides config");
  cmd->add_option("--workers", f.workers, "Worker threads")
      ->check(CLI::Range(1u, 1024u));
}

CommandOutcome do_substitute(const CommonFlags& f, const std::string& policy_path,
                             std::ostream& out, std::ostream& err) {
  SurrogatePolicy policy = load_policy(policy_path);
  if (f.seed) policy.master_seed = *f.seed;
  const Surrogator surrogator(std::move(policy));

  std::ifstream in = open_in(f.in);
  Output sink(f.out, out);
  CommandOutcome outcome;
  std::uint64_t written = 0;
  std::uint64_t failed = 0;
  for_each_chunk(in, kChunkLines * f.workers, [&](const std::vector<Line>& lines) {
    auto results = parallel_map(std::span<const Line>(lines), f.workers,
                                [&](const Line& line) -> RecordResult {
      MarkupRecord rec;
      try {
        rec = parse_markup_record(line.text, line.number);
      } catch (const FormatError& e) {
        return diagnose("", 0, e.what());
      }
      try {
        return {surrogate_to_json(
                    surrogator.substitute(parse_tagged(rec.text, rec.id))),
                {}};
      } catch (const MalformedTag& e) {
        return diagnose(rec.id, e.offset(), e.detail());
      }
    });
    for (const RecordResult& r : results) {
      if (!r.diagnostic.empty()) {
        err << r.diagnostic << '\n';
        ++failed;
      } else {
        sink.line(r.record);
        ++written;
      }
    }
  });
  sink.finish();
  logger()->info("substituted {} records, {} failed", written, failed);
  if (failed > 0) outcome.exit_code = kExitInputError;
  return outcome;
}

CommandOutcome do_stats(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  std::ifstream in = open_in(f.in);
  TagCensus census;
  std::uint64_t failed = 0;
  for_each_chunk(in, kChunkLines, [&](const std::vector<Line>& lines) {
    for (const Line& line : lines) {
      try {
        const MarkupRecord rec = parse_markup_record(line.text, line.number);
        try {
          add_to_census(census, parse_tagged(rec.text, rec.id));
        } catch (const MalformedTag& e) {
          err << diagnostic_to_json(rec.id, e.offset(), e.detail()) << '\n';
          ++failed;
        }
      } catch (const FormatError& e) {
        err << diagnostic_to_json("", 0, e.what()) << '\n';
        ++failed;
      }
    }
  });
  Output sink(f.out, out);
  sink.line(census_to_json(census));
  sink.finish();
  CommandOutcome outcome;
  if (failed > 0) outcome.exit_code = kExitInputError;
  return outcome;
}

CommandOutcome do_expand(const CommonFlags& f, const std::string& policy_path,
                         std::uint64_t per_template, std::ostream& out,
                         std::ostream& err) {
  SurrogatePolicy policy = load_policy(policy_path);
  if (f.seed) policy.master_seed = *f.seed;
  const Surrogator surrogator(std::move(policy));

  std::vector<TaggedTranscript> templates;
  {
    std::ifstream in = open_in(f.in);
    JsonlReader reader(in);
    std::string line;
    bool failed = false;
    while (reader.next(line)) {
      const MarkupRecord rec = parse_markup_record(line, reader.line_number());
      try {
        templates.push_back(parse_tagged(rec.text, rec.id));
      } catch (const MalformedTag& e) {
        err << diagnostic_to_json(rec.id, e.offset(), e.detail()) << '\n';
        failed = true;
      }
    }
    if (failed) return {kExitInputError, 0, {}};
  }
  for (const TaggedTranscript& t : templates) {
    bool has_name = false;
    for (const Segment& s : t.segments()) {
      if (const auto* tag = std::get_if<Tag>(&s)) has_name |= tag->type.is_name();
    }
    if (!has_name) {
      err << diagnostic_to_json(t.id(), 0, "template has no name placeholder")
          << '\n';
      return {kExitInputError, 0, {}};
    }
  }

  Output sink(f.out, out);
  auto blocks = parallel_map(std::span<const TaggedTranscript>(templates), f.workers,
                             [&](const TaggedTranscript& t) {
    std::vector<std::string> lines;
    expand_templates(std::span<const TaggedTranscript>(&t, 1), surrogator,
                     per_template, [&](SurrogateTranscript&& s) {
                       lines.push_back(surrogate_to_json(s));
                     });
    return lines;
  });
  std::uint64_t written = 0;
  for (const auto& block : blocks) {
    for (const std::string& l : block) {
      sink.line(l);
      ++written;
    }
  }
  sink.finish();
  logger()->info("expanded {} templates into {} utterances", templates.size(),
                 written);
  return {};
}

struct SequenceFlags {
  std::string spec_path;
  std::string alphabet;
  std::optional<std::uint64_t> count;
  std::string style = "char_per_token";
};

CommandOutcome do_gen_sequences(const CommonFlags& f, const SequenceFlags& s,
                                std::ostream& out) {
  SequenceSpec spec;
  if (!s.spec_path.empty()) spec = load_sequence_spec(s.spec_path);
  if (!s.alphabet.empty()) spec.alphabet = named_alphabet(s.alphabet);
  if (s.count) spec.count = *s.count;
  if (f.seed) spec.master_seed = *f.seed;
  spec.validate();
  const VerbalizationStyle style = s.style == "compact"
                                       ? VerbalizationStyle::kCompact
                                       : VerbalizationStyle::kCharPerToken;

  Output sink(f.out, out);
  const std::uint64_t chunk = kChunkLines * f.workers;
  std::vector<std::uint64_t> indices;
  for (std::uint64_t begin = 0; begin < spec.count; begin += chunk) {
    const std::uint64_t end = std::min(spec.count, begin + chunk);
    indices.clear();
    for (std::uint64_t i = begin; i < end; ++i) indices.push_back(i);
    auto lines = parallel_map(std::span<const std::uint64_t>(indices), f.workers,
                              [&](std::uint64_t i) {
                                return sequence_to_json(corpus_item(spec, i), style);
                              });
    for (const std::string& l : lines) sink.line(l);
  }
  sink.finish();
  logger()->info("generated {} sequences", spec.count);
  return {};
}

std::string stats_to_json(const MixSchedule& schedule, const MixStats& stats,
                          std::uint64_t steps) {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t i = 0; i < stats.counts.size(); ++i) {
    counts[schedule.streams[i].name] = stats.counts[i];
  }
  nlohmann::json doc = {
      {"steps", steps},
      {"counts", counts},
      {"text_only_batches", stats.text_only_batches},
      {"first_text_only_step",
       stats.first_text_only_step ? nlohmann::json(*stats.first_text_only_step)
                                  : nlohmann::json(nullptr)}};
  return doc.dump(2);
}

CommandOutcome do_mix(const CommonFlags& f, const std::string& schedule_path,
                      std::uint64_t steps, bool simulate_only,
                      const std::string& report, std::ostream& out) {
  MixSchedule schedule = load_schedule(schedule_path);
  if (f.seed) schedule.master_seed = *f.seed;
  CommandOutcome outcome;
  if (simulate_only) {
    Output sink(f.out, out);
    sink.line(stats_to_json(schedule, simulate(schedule, steps), steps));
    sink.finish();
    return outcome;
  }
  std::vector<std::vector<std::string>> items;
  for (const DatasetStream& s : schedule.streams) {
    items.push_back(s.manifest_path.empty() ? std::vector<std::string>{}
                                            : read_record_ids(s.manifest_path));
  }
  Mixer mixer(schedule, std::move(items));
  Output sink(f.out, out);
  for (std::uint64_t step = 0; step < steps; ++step) {
    sink.line(manifest_to_json(mixer.next_batch(step)));
  }
  sink.finish();
  if (!report.empty()) {
    Output r(report, out);
    r.line(stats_to_json(schedule, simulate(schedule, steps), steps));
    r.finish();
    outcome.report_path = report;
  }
  return outcome;
}

ScoringOptions profile_options(const std::string& name) {
  ScoringOptions o;
  if (name == "default") return o;
  if (name == "verbalized") {
    o.word_profile.verbalize_digits = true;
    o.char_profile.verbalize_digits = true;
    return o;
  }
  if (name == "raw") {
    o.word_profile.case_fold = false;
    o.word_profile.strip_punctuation = false;
    o.char_profile.case_fold = false;
    o.char_profile.strip_punctuation = false;
    o.char_profile.remove_hyphens = false;
    o.char_profile.remove_whitespace = false;
    return o;
  }
  throw ConfigError("unknown profile '" + name +
                    "' (want default, verbalized or raw)");
}

struct ScoreFlags {
  std::string refs;
  std::string hyps;
  std::string report;
  std::string tsv;
  std::string profile = "default";
  std::vector<std::string> types;
};

CommandOutcome do_score(const CommonFlags& f, const ScoreFlags& s,
                        std::ostream& out) {
  ScoringOptions options = profile_options(s.profile);
  options.workers = f.workers;
  for (const std::string& t : s.types) {
    auto type = RedactionTagType::from_name(t);
    if (!type) throw ConfigError("invalid tag type '" + t + "'");
    options.type_filter.insert(*type);
  }
  const auto refs = read_surrogate_corpus(std::filesystem::path(s.refs));
  const auto hyps = read_hypotheses(std::filesystem::path(s.hyps));
  const EvalReport report = score_corpus(refs, hyps, options);

  CommandOutcome outcome;
  {
    Output sink(s.report, out);
    *sink << report_to_json(report);
    sink.finish();
  }
  if (!s.report.empty()) outcome.report_path = s.report;
  if (!s.tsv.empty()) {
    Output tsv(s.tsv, out);
    *tsv << report_to_tsv(report);
    tsv.finish();
  }
  outcome.warnings = report.warning_count();
  if (outcome.warnings > 0) {
    logger()->warn(
        "{} warnings: {} missing hypotheses, {} unmatched hypotheses, {} empty "
        "word references, {} empty char references",
        outcome.warnings, report.missing_hypotheses, report.unmatched_hypotheses,
        report.empty_word_references, report.empty_char_references);
  }
  return outcome;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"pii-forge: privacy-safe ASR text preparation and PII-aware scoring"};
  app.name(args.empty() ? "pii-forge" : args.front());
  app.require_subcommand(1);

  CommonFlags common;

  auto* substitute = app.add_subcommand(
      "substitute", "Replace redaction tags with surrogate values");
  std::string policy_path;
  add_common(substitute, common, true);
  substitute->add_option("--policy", policy_path, "Surrogate policy config")
      ->required();

  auto* gen = app.add_subcommand("gen-sequences",
                                 "Generate synthetic identifier sequences");
  SequenceFlags seq;
  add_common(gen, common, false);
  gen->add_option("--spec", seq.spec_path, "Sequence spec config");
  gen->add_option("--alphabet", seq.alphabet, "digits or alphanumeric")
      ->check(CLI::IsMember({"digits", "alphanumeric"}));
  gen->add_option("--count", seq.count, "Number of sequences");
  gen->add_option("--style", seq.style, "Verbalization: char_per_token or compact")
      ->check(CLI::IsMember({"char_per_token", "compact"}));

  auto* expand = app.add_subcommand(
      "expand-templates", "Expand name templates into tagged utterances");
  std::uint64_t per_template = 17;
  add_common(expand, common, true);
  expand->add_option("--policy", policy_path, "Surrogate policy config")->required();
  expand->add_option("--per-template", per_template, "Variants per template")
      ->check(CLI::PositiveNumber);

  auto* mix = app.add_subcommand("mix", "Compose curriculum batch manifests");
  std::string schedule_path;
  std::uint64_t steps = 0;
  bool simulate_only = false;
  std::string mix_report;
  add_common(mix, common, false);
  mix->add_option("--schedule", schedule_path, "Mix schedule config")->required();
  mix->add_option("--steps", steps, "Number of steps")->required()->check(
      CLI::PositiveNumber);
  mix->add_flag("--simulate", simulate_only,
                "Print per-stream selection statistics instead of manifests");
  mix->add_option("--report", mix_report, "Also write selection statistics here");

  auto* score = app.add_subcommand("score", "Score hypotheses against references");
  ScoreFlags sf;
  score->add_option("--refs", sf.refs, "Reference corpus JSONL")->required();
  score->add_option("--hyps", sf.hyps, "Hypotheses JSONL")->required();
  score->add_option("--report", sf.report, "Report JSON path (default: stdout)");
  score->add_option("--tsv", sf.tsv, "Per-utterance TSV path");
  score->add_option("--profile", sf.profile, "default, verbalized or raw");
  score->add_option("--types", sf.types, "Entity types to report")->delimiter(',');
  score->add_option("--workers", common.workers, "Worker threads")
      ->check(CLI::Range(1u, 1024u));

  auto* stats = app.add_subcommand("stats", "Count redaction tags in a corpus");
  add_common(stats, common, true);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("pii-forge");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    if (app.exit(e, out, err) == 0) return {};
    err << app.help();
    return {kExitConfigError, 0, {}};
  }

  try {
    if (substitute->parsed()) return do_substitute(common, policy_path, out, err);
    if (gen->parsed()) return do_gen_sequences(common, seq, out);
    if (expand->parsed()) {
      return do_expand(common, policy_path, per_template, out, err);
    }
    if (mix->parsed()) {
      return do_mix(common, schedule_path, steps, simulate_only, mix_report, out);
    }
    if (score->parsed()) return do_score(common, sf, out);
    if (stats->parsed()) return do_stats(common, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return {kExitConfigError, 0, {}};
  } catch (const PolicyIncomplete& e) {
    err << "config error: " << e.what() << '\n';
    return {kExitConfigError, 0, {}};
  } catch (const InvalidPattern& e) {
    err << "config error: " << e.what() << '\n';
    return {kExitConfigError, 0, {}};
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return {kExitInputError, 0, {}};
  }
  return {kExitConfigError, 0, {}};
}

}  // namespace piiforge::cli
