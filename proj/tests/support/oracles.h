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

// Independent reference implementations used to check the library. None of
// these call into the code they verify.

#ifndef PIIFORGE_TESTS_ORACLES_H_
#define PIIFORGE_TESTS_ORACLES_H_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

// Two-row Wagner-Fischer distance.
template <typename Seq>
std::size_t levenshtein(const Seq& a, const Seq& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t best = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      best = std::min(best, prev[j] + 1);
      best = std::min(best, cur[j - 1] + 1);
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Number words built digit group by digit group from lookup tables, without
// the library's recursive scale walk. Valid for 0..999999.
inline std::string words(unsigned n) {
  static const char* small[] = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
  static const char* tens[] = {"",      "",      "twenty",  "thirty", "forty",
                               "fifty", "sixty", "seventy", "eighty", "ninety"};
  auto below_hundred = [&](unsigned v) -> std::string {
    if (v < 20) return small[v];
    std::string s = tens[v / 10];
    if (v % 10) s += std::string("-") + small[v % 10];
    return s;
  };
  auto below_thousand = [&](unsigned v) -> std::string {
    std::string s;
    if (v >= 100) {
      s = std::string(small[v / 100]) + " hundred";
      if (v % 100) s += " " + below_hundred(v % 100);
      return s;
    }
    return below_hundred(v);
  };
  if (n == 0) return "zero";
  std::string out;
  if (n >= 1000) {
    out = below_thousand(n / 1000) + " thousand";
    if (n % 1000) out += " " + below_thousand(n % 1000);
    return out;
  }
  return below_thousand(n);
}

inline std::string ordinal(unsigned n) {
  static const std::map<std::string, std::string> irregular = {
      {"one", "first"},     {"two", "second"},  {"three", "third"},
      {"five", "fifth"},    {"eight", "eighth"}, {"nine", "ninth"},
      {"twelve", "twelfth"}};
  std::string w = words(n);
  std::size_t cut = w.find_last_of(" -");
  std::string head = cut == std::string::npos ? "" : w.substr(0, cut + 1);
  std::string last = cut == std::string::npos ? w : w.substr(cut + 1);
  if (auto it = irregular.find(last); it != irregular.end()) return head + it->second;
  if (last.back() == 'y') return head + last.substr(0, last.size() - 1) + "ieth";
  return head + last + "th";
}

// Standard normal CDF and density.
inline double phi(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}
inline double Phi(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

inline double skew_normal_pdf(double x, double loc, double scale, double shape) {
  const double z = (x - loc) / scale;
  return 2.0 / scale * phi(z) * Phi(shape * z);
}

// Composite Simpson integration of a skew-normal density over [a, b].
inline double integrate_pdf(double a, double b, double loc, double scale,
                            double shape, int intervals = 2000) {
  if (b <= a) return 0.0;
  const double h = (b - a) / intervals;
  double s = skew_normal_pdf(a, loc, scale, shape) + skew_normal_pdf(b, loc, scale, shape);
  for (int i = 1; i < intervals; ++i) {
    s += (i % 2 ? 4.0 : 2.0) * skew_normal_pdf(a + i * h, loc, scale, shape);
  }
  return s * h / 3.0;
}

// E[round(max(X, 0)) + offset] by integrating the density over each rounding
// cell: value k collects the mass of [k - 1/2, k + 1/2), and 0 also collects
// everything below zero.
inline double expected_length(double loc, double scale, double shape, int offset) {
  const double lo = loc - 12.0 * scale;
  const double hi = loc + 12.0 * scale;
  double mean = 0.0;
  double mass = integrate_pdf(lo, 0.5, loc, scale, shape, 20000);
  double total = mass;
  for (int k = 1; k - 0.5 < hi; ++k) {
    const double p = integrate_pdf(k - 0.5, k + 0.5, loc, scale, shape, 200);
    mean += k * p;
    total += p;
  }
  return mean / total + offset;
}

// E[max(X, 0)] for X ~ Normal(mu, sigma).
inline double clipped_normal_mean(double mu, double sigma) {
  return mu * Phi(mu / sigma) + sigma * phi(mu / sigma);
}

// A second, single-pass scorer with the default profiles hard-coded:
// lower-case ASCII, drop punctuation except word-internal apostrophes and
// hyphens, and for characters also drop hyphens and whitespace.
inline bool word_char(char c) {
  return static_cast<unsigned char>(c) >= 0x80 || std::isalnum(static_cast<unsigned char>(c));
}

inline std::vector<std::string> default_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool interior = i > 0 && i + 1 < s.size() && word_char(s[i - 1]) && word_char(s[i + 1]);
    if (word_char(c) || ((c == '\'' || c == '-') && interior)) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ASCII-only inputs in the tests that use this.
inline std::string default_chars(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool interior = i > 0 && i + 1 < s.size() && word_char(s[i - 1]) && word_char(s[i + 1]);
    if (word_char(c) || (c == '\'' && interior)) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

struct ReferenceScore {
  std::uint64_t word_errors = 0, ref_words = 0, char_errors = 0, ref_chars = 0;
  std::uint64_t correct = 0, utterances = 0;
};

inline ReferenceScore score(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ReferenceScore r;
  for (const auto& [ref, hyp] : pairs) {
    const auto rw = default_words(ref), hw = default_words(hyp);
    const auto rc = default_chars(ref), hc = default_chars(hyp);
    if (!rw.empty()) {
      r.word_errors += levenshtein(rw, hw);
      r.ref_words += rw.size();
    }
    if (!rc.empty()) {
      r.char_errors += levenshtein(rc, hc);
      r.ref_chars += rc.size();
    }
    r.correct += rc == hc;
    ++r.utterances;
  }
  return r;
}

}  // namespace oracle

#endif  // PIIFORGE_TESTS_ORACLES_H_
