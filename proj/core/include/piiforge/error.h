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

#ifndef PIIFORGE_ERROR_H_
#define PIIFORGE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace piiforge {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad redaction markup. `offset` is the byte offset into the raw transcript
// at which the offending token was detected.
class MalformedTag : public Error {
 public:
  MalformedTag(std::size_t offset, const std::string& message)
      : Error(message + " at byte " + std::to_string(offset)),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

// A substitutable tag was met but the policy has no source for it.
class PolicyIncomplete : public Error {
 public:
  using Error::Error;
};

// Unknown atom or unbalanced brace in a date pattern.
class InvalidPattern : public Error {
 public:
  using Error::Error;
};

// The normalized reference has no tokens, so a rate is undefined.
class EmptyReference : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class DuplicateHypothesisId : public Error {
 public:
  explicit DuplicateHypothesisId(const std::string& id)
      : Error("duplicate hypothesis id '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// A stream with no items was selected for a batch.
class ExhaustedStream : public Error {
 public:
  using Error::Error;
};

// Invalid configuration values or an unreadable config document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input record. `line` is 1-based; 0 when not line oriented.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace piiforge

#endif  // PIIFORGE_ERROR_H_
